#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "herbrand/matrix.hpp"

namespace herbrand {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

/// One directed edge of a Serre graph. Edges come in inverse pairs
/// (2k, 2k + 1); a loop is a pair of distinct directed edges with equal ends.
struct DirectedEdge {
  EdgeIndex id;
  VertexIndex origin;
  VertexIndex terminus;
  EdgeIndex inverse;
};

/// Finite multigraph in Serre's formalism: vertices, directed edges, and a
/// fixed-point-free inversion with o(e-bar) = t(e).
///
/// Vertex indices are dense and follow insertion order; labels, when given,
/// are unique. The graph is only ever grown, so outstanding indices stay valid.
class SerreGraph {
 public:
  SerreGraph() = default;

  /// Graph with n unlabeled vertices and no edges.
  explicit SerreGraph(std::size_t n);

  VertexIndex add_vertex(std::string label = {});

  /// Adds the undirected edge {from, to}. Returns the id of the directed edge
  /// from -> to; its inverse has id + 1.
  EdgeIndex add_edge(VertexIndex from, VertexIndex to);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_directed_edges() const { return edges_.size(); }
  std::size_t num_undirected_edges() const { return edges_.size() / 2; }

  const DirectedEdge& edge(EdgeIndex id) const;
  std::span<const DirectedEdge> edges() const { return edges_; }
  /// Ids of the directed edges with origin w.
  std::span<const EdgeIndex> outgoing(VertexIndex w) const;

  /// Display label; falls back to "v<index+1>" for unlabeled vertices.
  std::string label(VertexIndex w) const;
  std::optional<VertexIndex> find(const std::string& label) const;

  void check_vertex(VertexIndex w) const;

  /// Vertices in insertion order.
  std::vector<VertexIndex> default_ordering() const;

 private:
  std::vector<std::string> labels_;
  std::vector<DirectedEdge> edges_;
  std::vector<std::vector<EdgeIndex>> outgoing_;
};

/// Number of directed edges with origin w (a loop contributes 2).
std::size_t valence(const SerreGraph& g, VertexIndex w);

/// a_w(w2): number of directed edges from w2 to w. Symmetric in (w, w2).
std::size_t adjacency_count(const SerreGraph& g, VertexIndex w, VertexIndex w2);

/// |V| minus the number of undirected edges.
long euler_characteristic(const SerreGraph& g);

/// Connectivity of the underlying undirected graph. The empty graph is not
/// connected.
bool is_connected(const SerreGraph& g);

/// Connected component id of every vertex, numbered in discovery order.
std::vector<std::size_t> connected_components(const SerreGraph& g);

/// L = D - A with respect to `ordering` (a permutation of the vertices).
IntMatrix laplacian_matrix(const SerreGraph& g, std::span<const VertexIndex> ordering);
IntMatrix laplacian_matrix(const SerreGraph& g);

/// Degree matrix D and adjacency matrix A, with A(i, j) = a_{v_i}(v_j).
IntMatrix degree_matrix(const SerreGraph& g);
IntMatrix adjacency_matrix(const SerreGraph& g);

/// DOT rendering of the underlying undirected multigraph, one line per
/// undirected edge.
std::string to_dot(const SerreGraph& g, const std::string& name);

}  // namespace herbrand
