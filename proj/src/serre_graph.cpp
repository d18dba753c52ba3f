#include "herbrand/serre_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "herbrand/errors.hpp"

namespace herbrand {

SerreGraph::SerreGraph(std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) add_vertex();
}

VertexIndex SerreGraph::add_vertex(std::string label) {
  if (!label.empty() && find(label)) {
    throw std::invalid_argument("duplicate vertex label: " + label);
  }
  labels_.push_back(std::move(label));
  outgoing_.emplace_back();
  return labels_.size() - 1;
}

EdgeIndex SerreGraph::add_edge(VertexIndex from, VertexIndex to) {
  check_vertex(from);
  check_vertex(to);
  const EdgeIndex id = edges_.size();
  edges_.push_back({id, from, to, id + 1});
  edges_.push_back({id + 1, to, from, id});
  outgoing_[from].push_back(id);
  outgoing_[to].push_back(id + 1);
  return id;
}

const DirectedEdge& SerreGraph::edge(EdgeIndex id) const {
  if (id >= edges_.size()) throw std::out_of_range("unknown edge " + std::to_string(id));
  return edges_[id];
}

std::span<const EdgeIndex> SerreGraph::outgoing(VertexIndex w) const {
  check_vertex(w);
  return outgoing_[w];
}

std::string SerreGraph::label(VertexIndex w) const {
  check_vertex(w);
  return labels_[w].empty() ? "v" + std::to_string(w + 1) : labels_[w];
}

std::optional<VertexIndex> SerreGraph::find(const std::string& label) const {
  for (VertexIndex i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

void SerreGraph::check_vertex(VertexIndex w) const {
  if (w >= labels_.size()) throw UnknownVertex("unknown vertex " + std::to_string(w));
}

std::vector<VertexIndex> SerreGraph::default_ordering() const {
  std::vector<VertexIndex> order(num_vertices());
  std::iota(order.begin(), order.end(), VertexIndex{0});
  return order;
}

std::size_t valence(const SerreGraph& g, VertexIndex w) { return g.outgoing(w).size(); }

std::size_t adjacency_count(const SerreGraph& g, VertexIndex w, VertexIndex w2) {
  g.check_vertex(w);
  std::size_t count = 0;
  for (EdgeIndex e : g.outgoing(w2)) {
    if (g.edge(e).terminus == w) ++count;
  }
  return count;
}

long euler_characteristic(const SerreGraph& g) {
  return static_cast<long>(g.num_vertices()) - static_cast<long>(g.num_undirected_edges());
}

std::vector<std::size_t> connected_components(const SerreGraph& g) {
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> component(g.num_vertices(), unseen);
  std::size_t next = 0;
  for (VertexIndex start = 0; start < g.num_vertices(); ++start) {
    if (component[start] != unseen) continue;
    std::queue<VertexIndex> frontier;
    frontier.push(start);
    component[start] = next;
    while (!frontier.empty()) {
      const VertexIndex v = frontier.front();
      frontier.pop();
      for (EdgeIndex e : g.outgoing(v)) {
        const VertexIndex t = g.edge(e).terminus;
        if (component[t] == unseen) {
          component[t] = next;
          frontier.push(t);
        }
      }
    }
    ++next;
  }
  return component;
}

bool is_connected(const SerreGraph& g) {
  if (g.num_vertices() == 0) return false;
  const auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

IntMatrix laplacian_matrix(const SerreGraph& g, std::span<const VertexIndex> ordering) {
  const std::size_t n = g.num_vertices();
  if (ordering.size() != n) throw std::invalid_argument("ordering is not a permutation");
  std::vector<Index> position(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    g.check_vertex(ordering[i]);
    if (position[ordering[i]] != -1) throw std::invalid_argument("ordering is not a permutation");
    position[ordering[i]] = static_cast<Index>(i);
  }
  IntMatrix lap = IntMatrix::Zero(static_cast<Index>(n), static_cast<Index>(n));
  for (const DirectedEdge& e : g.edges()) {
    // Edge o -> t contributes to val(o) and to a_t(o).
    const Index o = position[e.origin];
    const Index t = position[e.terminus];
    lap(o, o) += 1;
    lap(t, o) -= 1;
  }
  return lap;
}

IntMatrix laplacian_matrix(const SerreGraph& g) {
  return laplacian_matrix(g, g.default_ordering());
}

IntMatrix degree_matrix(const SerreGraph& g) {
  const auto n = static_cast<Index>(g.num_vertices());
  IntMatrix d = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) d(i, i) = static_cast<long long>(valence(g, static_cast<VertexIndex>(i)));
  return d;
}

IntMatrix adjacency_matrix(const SerreGraph& g) {
  const auto n = static_cast<Index>(g.num_vertices());
  IntMatrix a = IntMatrix::Zero(n, n);
  for (const DirectedEdge& e : g.edges()) {
    a(static_cast<Index>(e.terminus), static_cast<Index>(e.origin)) += 1;
  }
  return a;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const SerreGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << quoted(name) << " {\n";
  for (VertexIndex v = 0; v < g.num_vertices(); ++v) os << "  " << quoted(g.label(v)) << ";\n";
  for (EdgeIndex e = 0; e < g.num_directed_edges(); e += 2) {
    const DirectedEdge& d = g.edge(e);
    os << "  " << quoted(g.label(d.origin)) << " -- " << quoted(g.label(d.terminus)) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace herbrand
