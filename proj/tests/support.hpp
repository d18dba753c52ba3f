#pragma once

#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "herbrand/spec_io.hpp"
#include "herbrand/voltage_cover.hpp"

namespace test {

struct Edge {
  herbrand::VertexIndex from, to;
  std::uint32_t voltage;
};

inline herbrand::VoltageSpec spec(std::uint32_t p, std::size_t vertices, const std::vector<Edge>& edges) {
  herbrand::SerreGraph g(vertices);
  std::vector<std::uint32_t> forward;
  for (const auto& e : edges) {
    g.add_edge(e.from, e.to);
    forward.push_back(e.voltage);
  }
  return herbrand::VoltageSpec::from_orientation(std::move(g), p, forward);
}

inline std::string data_path(const std::string& rel) { return std::string(HERBRAND_DATA_DIR) + "/" + rel; }

inline herbrand::VoltageSpec example(int k) {
  return herbrand::to_voltage_spec(herbrand::load_cover_spec(data_path("examples/example" + std::to_string(k) + ".json")));
}

/// Bouquet voltages (2, 3) taken as residues rather than generator exponents.
inline herbrand::VoltageSpec example1_literal() { return spec(5, 1, {{0, 0, 2}, {0, 0, 3}}); }

/// Random connected base (spanning tree first) with random voltages.
inline herbrand::VoltageSpec random_spec(std::mt19937_64& rng, std::uint32_t p, std::size_t max_vertices,
                                         std::size_t max_edges) {
  std::uniform_int_distribution<std::size_t> nv(1, max_vertices);
  const std::size_t n = nv(rng);
  std::uniform_int_distribution<std::size_t> ne(std::max<std::size_t>(n - 1, 1), max_edges);
  const std::size_t m = ne(rng);
  std::uniform_int_distribution<std::uint32_t> volt(1, p - 1);
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    edges.push_back({parent(rng), v, volt(rng)});
  }
  std::uniform_int_distribution<std::size_t> any(0, n - 1);
  while (edges.size() < m) edges.push_back({any(rng), any(rng), volt(rng)});
  return spec(p, n, edges);
}

}  // namespace test
