#include "herbrand/voltage_cover.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "herbrand/errors.hpp"

namespace herbrand {

VoltageSpec VoltageSpec::from_orientation(SerreGraph base, std::uint32_t p,
                                          const std::vector<std::uint32_t>& forward) {
  if (forward.size() != base.num_undirected_edges()) {
    throw InvalidVoltage("expected " + std::to_string(base.num_undirected_edges()) + " voltages, got " +
                         std::to_string(forward.size()));
  }
  const auto group = CyclicGroup::for_prime(p);
  VoltageSpec spec{std::move(base), p, std::vector<std::uint32_t>(2 * forward.size())};
  for (std::size_t k = 0; k < forward.size(); ++k) {
    const std::uint32_t a = forward[k];
    if (a % p == 0) throw InvalidVoltage("voltage " + std::to_string(a) + " is not a unit mod " + std::to_string(p));
    spec.voltage[2 * k] = a % p;
    spec.voltage[2 * k + 1] = group->inverse(a % p);
  }
  return spec;
}

void validate(const VoltageSpec& spec) {
  const auto group = CyclicGroup::for_prime(spec.p);
  if (spec.voltage.size() != spec.base.num_directed_edges()) {
    throw InvalidVoltage("every directed edge needs a voltage");
  }
  for (const DirectedEdge& e : spec.base.edges()) {
    const std::uint32_t a = spec.voltage[e.id];
    if (a == 0 || a >= spec.p) {
      throw InvalidVoltage("voltage " + std::to_string(a) + " is not a residue in [1, p-1]");
    }
    if (group->multiply(a, spec.voltage[e.inverse]) != 1) {
      throw InvalidVoltage("voltage of edge " + std::to_string(e.inverse) + " is not the inverse of edge " +
                           std::to_string(e.id));
    }
  }
}

DerivedCover::DerivedCover(VoltageSpec spec, SerreGraph total, std::vector<FiberCoordinate> fibers,
                           std::vector<EdgeIndex> edge_projection)
    : spec_(std::move(spec)),
      total_(std::move(total)),
      fibers_(std::move(fibers)),
      edge_projection_(std::move(edge_projection)),
      group_(CyclicGroup::for_prime(spec_.p)),
      connected_(is_connected(total_)) {}

const FiberCoordinate& DerivedCover::fiber(VertexIndex w) const {
  if (w >= fibers_.size()) throw UnknownVertex("unknown cover vertex " + std::to_string(w));
  return fibers_[w];
}

VertexIndex DerivedCover::vertex_at(VertexIndex base_vertex, std::uint32_t sigma) const {
  spec_.base.check_vertex(base_vertex);
  if (sigma == 0 || sigma >= p()) throw std::out_of_range("sigma outside F_p^x");
  return base_vertex * (p() - 1) + (sigma - 1);
}

DerivedCover derive(const VoltageSpec& spec) {
  validate(spec);
  if (!is_connected(spec.base)) throw DisconnectedGraph("base graph is not connected");
  const std::uint32_t p = spec.p;
  const auto group = CyclicGroup::for_prime(p);
  const SerreGraph& base = spec.base;

  SerreGraph total;
  std::vector<FiberCoordinate> fibers;
  for (VertexIndex v = 0; v < base.num_vertices(); ++v) {
    for (std::uint32_t sigma = 1; sigma < p; ++sigma) {
      total.add_vertex(base.label(v) + ":" + std::to_string(sigma));
      fibers.push_back({v, sigma});
    }
  }
  const auto index = [p](VertexIndex v, std::uint32_t sigma) { return v * (p - 1) + (sigma - 1); };
  std::vector<EdgeIndex> projection;
  projection.reserve(base.num_directed_edges() * (p - 1));
  for (EdgeIndex e = 0; e < base.num_directed_edges(); e += 2) {
    const DirectedEdge& d = base.edge(e);
    const std::uint32_t a = spec.voltage[e];
    for (std::uint32_t sigma = 1; sigma < p; ++sigma) {
      // The inverse lift (v', sigma a) -> (v, sigma) uses voltage(e-bar) = a^-1.
      total.add_edge(index(d.origin, sigma), index(d.terminus, group->multiply(sigma, a)));
      projection.push_back(e);
      projection.push_back(e + 1);
    }
  }
  return DerivedCover(spec, std::move(total), std::move(fibers), std::move(projection));
}

const DerivedCover& require_connected_cover(const DerivedCover& c) {
  if (!c.connected()) {
    throw DisconnectedCover("derived graph is disconnected: the voltages generate a proper subgroup of F_" +
                            std::to_string(c.p()) + "^x");
  }
  return c;
}

VertexIndex deck_act(const DerivedCover& c, std::uint32_t tau, VertexIndex w) {
  const FiberCoordinate& f = c.fiber(w);
  if (tau == 0 || tau >= c.p()) throw std::out_of_range("tau outside F_p^x");
  return c.vertex_at(f.base_vertex, c.group()->multiply(tau, f.sigma));
}

std::vector<VertexIndex> deck_permutation(const DerivedCover& c, std::uint32_t tau) {
  std::vector<VertexIndex> out(c.total().num_vertices());
  for (VertexIndex w = 0; w < out.size(); ++w) out[w] = deck_act(c, tau, w);
  return out;
}

std::vector<VertexIndex> base_transversal(const DerivedCover& c) {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < c.base().num_vertices(); ++v) out.push_back(c.vertex_at(v, 1));
  return out;
}

std::vector<std::uint32_t> generated_subgroup(const VoltageSpec& spec) {
  validate(spec);
  const auto group = CyclicGroup::for_prime(spec.p);
  const SerreGraph& g = spec.base;
  if (!is_connected(g)) throw DisconnectedGraph("base graph is not connected");

  // Potentials phi with phi(root) = 1 and phi(t) = phi(o) * alpha(e) on tree edges.
  std::vector<std::uint32_t> phi(g.num_vertices(), 0);
  std::vector<bool> tree_edge(g.num_directed_edges(), false);
  std::queue<VertexIndex> frontier;
  phi[0] = 1;
  frontier.push(0);
  while (!frontier.empty()) {
    const VertexIndex v = frontier.front();
    frontier.pop();
    for (EdgeIndex e : g.outgoing(v)) {
      const DirectedEdge& d = g.edge(e);
      if (phi[d.terminus] != 0) continue;
      phi[d.terminus] = group->multiply(phi[v], spec.voltage[e]);
      tree_edge[e] = tree_edge[d.inverse] = true;
      frontier.push(d.terminus);
    }
  }
  std::set<std::uint32_t> subgroup{1};
  std::vector<std::uint32_t> generators;
  for (EdgeIndex e = 0; e < g.num_directed_edges(); e += 2) {
    if (tree_edge[e]) continue;
    const DirectedEdge& d = g.edge(e);
    generators.push_back(group->multiply(group->multiply(phi[d.origin], spec.voltage[e]),
                                         group->inverse(phi[d.terminus])));
  }
  // Closure under multiplication by generators.
  std::queue<std::uint32_t> pending;
  pending.push(1);
  while (!pending.empty()) {
    const std::uint32_t x = pending.front();
    pending.pop();
    for (std::uint32_t s : generators) {
      const std::uint32_t y = group->multiply(x, s);
      if (subgroup.insert(y).second) pending.push(y);
    }
  }
  return {subgroup.begin(), subgroup.end()};
}

bool voltages_generate_group(const VoltageSpec& spec) {
  return generated_subgroup(spec).size() == spec.p - 1u;
}

}  // namespace herbrand
