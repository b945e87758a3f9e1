#pragma once

#include <random>
#include <variant>
#include <vector>

#include "orc/catalog.hpp"
#include "orc/graph.hpp"
#include "orc/regularity.hpp"

namespace orc::testing {

/// G(n, p) with a random spanning tree added so the result is connected.
inline Graph random_connected_graph(std::mt19937& rng, int n, double p) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    edges.emplace_back(parent(rng), v);
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return build_graph(n, edges);
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return build_graph(n, edges);
}

inline IntersectionArray array_of(const Graph& g) {
  auto det = intersection_array(g);
  REQUIRE(std::holds_alternative<IntersectionArray>(det));
  return std::get<IntersectionArray>(det);
}

}  // namespace orc::testing
