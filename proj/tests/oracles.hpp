#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "orc/graph.hpp"
#include "orc/matching.hpp"
#include "orc/rational.hpp"
#include "orc/transport.hpp"

namespace orc::testing {

/// Textbook O(n^3) Hungarian algorithm (potentials + augmenting paths) on a square matrix.
inline std::int64_t assignment_cost(const std::vector<std::vector<std::int64_t>>& a) {
  const int n = static_cast<int>(a.size());
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<std::int64_t> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      int i0 = p[j0];
      int j1 = 0;
      std::int64_t delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        std::int64_t cur = a[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::int64_t total = 0;
  for (int j = 1; j <= n; ++j) total += a[p[j] - 1][j - 1];
  return total;
}

using UnitMasses = std::vector<std::pair<Vertex, std::int64_t>>;

/// `units` unit masses spread over a random support of vertices 0..n-1, each getting at least one.
inline UnitMasses random_units(std::mt19937& rng, int n, int units) {
  int size = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(n, units)));
  std::vector<Vertex> vertices(static_cast<std::size_t>(n));
  std::iota(vertices.begin(), vertices.end(), 0);
  std::shuffle(vertices.begin(), vertices.end(), rng);
  UnitMasses out;
  for (int i = 0; i < size; ++i) out.emplace_back(vertices[static_cast<std::size_t>(i)], 1);
  for (int extra = units - size; extra > 0; --extra) out[rng() % out.size()].second += 1;
  return out;
}

inline Measure to_measure(const UnitMasses& units, std::int64_t denominator) {
  std::vector<std::pair<Vertex, Rational>> w;
  for (auto [v, m] : units) w.emplace_back(v, Rational(m, denominator));
  return Measure::from_weights(w);
}

/// W1 by expanding both measures into unit masses of size 1/D and solving the assignment problem.
inline Rational oracle_w1(const Graph& g, const UnitMasses& mu, const UnitMasses& nu, std::int64_t denominator) {
  std::vector<Vertex> left, right;
  for (auto [v, m] : mu) left.insert(left.end(), static_cast<std::size_t>(m), v);
  for (auto [v, m] : nu) right.insert(right.end(), static_cast<std::size_t>(m), v);
  std::vector<std::vector<std::int64_t>> cost(left.size(), std::vector<std::int64_t>(right.size()));
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) cost[i][j] = g.distance(left[i], right[j]);
  }
  return Rational(assignment_cost(cost), denominator);
}

/// Union of r random permutations on n + n vertices, pair multiplicity capped at `cap`,
/// random tags, edges shuffled.
inline TaggedBipartiteMultigraph random_regular_multigraph(std::mt19937& rng, int n, int r, int cap = 3) {
  if (r > cap * n) throw std::invalid_argument("degree exceeds cap * n");
  for (;;) {
    TaggedBipartiteMultigraph h;
    for (int i = 0; i < n; ++i) {
      h.left.push_back({i, false});
      h.right.push_back({i, false});
    }
    h.degree = r;
    std::map<std::pair<int, int>, int> mult;
    bool stuck = false;
    for (int round = 0; round < r && !stuck; ++round) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      bool ok = false;
      for (int attempt = 0; attempt < 200 && !ok; ++attempt) {
        std::shuffle(perm.begin(), perm.end(), rng);
        ok = true;
        for (int i = 0; i < n && ok; ++i) ok = mult[{i, perm[static_cast<std::size_t>(i)]}] < cap;
      }
      if (!ok) {
        stuck = true;
        break;
      }
      for (int i = 0; i < n; ++i) {
        int j = perm[static_cast<std::size_t>(i)];
        ++mult[{i, j}];
        h.edges.push_back({i, j, static_cast<EdgeTag>(rng() % 5)});
      }
    }
    if (stuck) continue;
    std::shuffle(h.edges.begin(), h.edges.end(), rng);
    return h;
  }
}

/// True iff `ms` has exactly h.degree perfect matchings using every edge index exactly once.
inline bool is_konig_decomposition(const TaggedBipartiteMultigraph& h, const std::vector<Matching>& ms) {
  if (static_cast<int>(ms.size()) != h.degree) return false;
  std::vector<int> used(h.edges.size(), 0);
  for (const auto& m : ms) {
    if (!is_perfect_matching(h, m)) return false;
    for (int id : m) ++used[static_cast<std::size_t>(id)];
  }
  return std::all_of(used.begin(), used.end(), [](int u) { return u == 1; });
}

}  // namespace orc::testing
