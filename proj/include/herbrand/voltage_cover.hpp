#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "herbrand/group_ring.hpp"
#include "herbrand/serre_graph.hpp"

namespace herbrand {

/// A base graph with voltages in F_p^x on every directed edge, satisfying
/// voltage(e-bar) = voltage(e)^-1.
struct VoltageSpec {
  SerreGraph base;
  std::uint32_t p = 0;
  /// Indexed by directed edge id.
  std::vector<std::uint32_t> voltage;

  /// Voltages given on the forward orientation only (directed edge 2k for
  /// undirected edge k); the inverse edges receive the inverse voltages.
  static VoltageSpec from_orientation(SerreGraph base, std::uint32_t p,
                                      const std::vector<std::uint32_t>& forward);
};

/// Throws InvalidVoltage for non-units or inversion-inconsistent voltages and
/// std::invalid_argument when p is not an odd prime.
void validate(const VoltageSpec& spec);

struct FiberCoordinate {
  VertexIndex base_vertex;
  std::uint32_t sigma;

  friend bool operator==(const FiberCoordinate&, const FiberCoordinate&) = default;
};

/// The derived graph X(F_p^x, alpha) with its covering projection and deck
/// action. Total vertex (v, sigma) has index v * (p - 1) + (sigma - 1) and
/// label "v:sigma". Directed total edges project to base edges by
/// edge_projection.
class DerivedCover {
 public:
  DerivedCover(VoltageSpec spec, SerreGraph total, std::vector<FiberCoordinate> fibers,
               std::vector<EdgeIndex> edge_projection);

  const VoltageSpec& spec() const { return spec_; }
  const SerreGraph& base() const { return spec_.base; }
  const SerreGraph& total() const { return total_; }
  std::uint32_t p() const { return spec_.p; }
  const std::shared_ptr<const CyclicGroup>& group() const { return group_; }

  const FiberCoordinate& fiber(VertexIndex w) const;
  VertexIndex vertex_at(VertexIndex base_vertex, std::uint32_t sigma) const;
  VertexIndex project(VertexIndex w) const { return fiber(w).base_vertex; }
  EdgeIndex project_edge(EdgeIndex e) const { return edge_projection_.at(e); }

  bool connected() const { return connected_; }

 private:
  VoltageSpec spec_;
  SerreGraph total_;
  std::vector<FiberCoordinate> fibers_;
  std::vector<EdgeIndex> edge_projection_;
  std::shared_ptr<const CyclicGroup> group_;
  bool connected_;
};

/// Builds the derived graph: for each directed base edge e: v -> v' with
/// voltage a and each sigma, a directed edge (v, sigma) -> (v', sigma * a).
/// Throws DisconnectedGraph when the base is disconnected. Disconnected covers
/// are built and flagged through DerivedCover::connected().
DerivedCover derive(const VoltageSpec& spec);

/// Returns c unchanged when the total graph is connected; throws DisconnectedCover otherwise.
const DerivedCover& require_connected_cover(const DerivedCover& c);

/// (v, sigma) -> (v, tau * sigma).
VertexIndex deck_act(const DerivedCover& c, std::uint32_t tau, VertexIndex w);

/// The vertex (v_i, 1) above each base vertex v_i, in base order.
std::vector<VertexIndex> base_transversal(const DerivedCover& c);

/// Subgroup of F_p^x generated by the net voltages of fundamental cycles after
/// gauging the voltages to 1 along a BFS spanning tree (sorted residues).
std::vector<std::uint32_t> generated_subgroup(const VoltageSpec& spec);

/// Connectivity of the derived graph decided without building it.
bool voltages_generate_group(const VoltageSpec& spec);

/// Permutation of total vertices induced by tau, as a target index per vertex.
std::vector<VertexIndex> deck_permutation(const DerivedCover& c, std::uint32_t tau);

}  // namespace herbrand
