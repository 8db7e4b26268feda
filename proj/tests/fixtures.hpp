#pragma once

// Shared graph fixtures for the test suites.

#include <random>
#include <vector>

#include "eqlines/graph.hpp"

namespace eqlines::testing {

inline Graph triangle() { return build_named(NamedGraph::complete, 3); }
inline Graph k2() { return build_named(NamedGraph::complete, 2); }
inline Graph path(std::size_t k) { return build_named(NamedGraph::path, k); }
inline Graph complete(std::size_t k) { return build_named(NamedGraph::complete, k); }
inline Graph star(std::size_t leaves) { return build_named(NamedGraph::star, leaves + 1); }

inline Graph copies(const Graph& g, std::size_t count) {
  std::vector<Graph> parts(count, g);
  return disjoint_union(parts);
}

// Random connected graphs with n in [lo, hi] and the given degree cap.
inline std::vector<Graph> random_connected(std::size_t count, std::size_t lo, std::size_t hi,
                                           std::size_t max_deg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> order(lo, hi);
  std::uniform_real_distribution<double> density(0.0, 0.15);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = order(rng);
    out.push_back(random_connected_graph(n, max_deg, density(rng), rng));
  }
  return out;
}

}  // namespace eqlines::testing
