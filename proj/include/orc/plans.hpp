#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orc/graph.hpp"
#include "orc/matching.hpp"
#include "orc/rational.hpp"
#include "orc/regularity.hpp"
#include "orc/transport.hpp"

namespace orc {

/// Pairs (v, image of v).
using Bijection = std::vector<std::pair<Vertex, Vertex>>;

/// Bijection C_q(y,x) -> C_q(x,y) with d(v, phi(v)) = q - 2, q = d(x,y) >= 2, read off one
/// perfect matching of the c_{q-1}-regular graph joining pairs at distance q - 2.
Bijection c_bijection(const Graph& g, const IntersectionArray& arr, Vertex x, Vertex y);

/// Bijection A_q(y,x) -> A_q(x,y) with d(v, phi(v)) = q - 1, via the c_q-regular graph joining
/// pairs at distance q - 1. Requires a_{q-1} = 0.
Bijection a_bijection(const Graph& g, const IntersectionArray& arr, Vertex x, Vertex y);

/// The bipartite multigraph whose matchings route the neighbor mass of x to that of y.
///
/// q >= 2: sides A_q(y,x) u B_q(y,x) and A_q(x,y) u B_q(x,y); E1 joins pairs at distance q,
/// E2 adds c_{q+1} - a_q parallel edges v -> a_bijection(v).
/// q = 1: sides A_1(y,x) u B_1(y,x) and A'_1 u B_1(x,y), where A'_1 holds copies z' of the
/// common neighbors z; edge classes E1..E5 as in the q = 1 construction (E5: c_2 - a_1
/// parallel edges z -> z').
///
/// Throws DomainError when the curvature hypotheses fail at q, and TheoremContradiction
/// when some vertex does not have multidegree c_{q+1} - c_q.
TaggedBipartiteMultigraph build_gadget(const Graph& g, const IntersectionArray& arr, Vertex x, Vertex y, int q);

enum class PlanRule {
  /// x -> y, distance q.
  Anchor,
  /// C_q(y,x) -> C_q(x,y) along the c-bijection, distance q - 2.
  CBijection,
  /// Matched E1..E4 edge: distance q (or 1 when q = 1).
  Matched,
  /// Matched E2 (q >= 2, distance q - 1) or E5 (q = 1, distance 0) edge.
  MatchedSpecial,
  /// q = 1 only: mass at x and at y stays in place.
  Stay,
};

std::string to_string(PlanRule rule);

struct PlanEntry {
  Vertex from = 0;
  Vertex to = 0;
  Rational mass;
  PlanRule rule = PlanRule::Anchor;
  int distance = 0;
};

/// The explicit transport plan from mu_x^{1/(k+1)} to mu_y^{1/(k+1)}.
struct TransportPlan {
  int q = 0;
  std::vector<PlanEntry> entries;
  Coupling coupling;
  std::int64_t big_m = 0;
  /// |M n E2| (q >= 2) or |M n E5| (q = 1) for the chosen matching.
  int special_edges = 0;
  /// Index of the chosen matching within the König decomposition.
  int matching_index = 0;
  int matchings = 0;
  Rational cost;
  /// q - (2c_q + M) / (k + 1).
  Rational bound;
};

/// Decomposes the gadget, keeps the matching with the most E2 (E5) edges (lowest index on
/// ties), assembles the plan, and checks its marginals, per-rule distances, the pigeonhole
/// count and the cost bound. Any failure throws TheoremContradiction.
TransportPlan constructive_plan(const Graph& g, const IntersectionArray& arr, Vertex x, Vertex y, int q);

}  // namespace orc
