#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orc/graph.hpp"
#include "orc/rational.hpp"
#include "orc/regularity.hpp"

namespace orc {

struct Hypothesis {
  std::string condition;
  bool held = false;
};

/// One evaluated diameter bound. `value` is present iff every hypothesis held.
struct BoundResult {
  std::string name;
  std::optional<std::int64_t> value;
  std::vector<Hypothesis> hypotheses;
  /// Substitutions and caveats, e.g. "b_4 unknown, used k - c_4 = 2".
  std::vector<std::string> notes;
  std::optional<int> q;
  std::optional<int> p;
  /// Remainder attaining the maximum, for the remainder bound.
  std::optional<int> r;
  std::optional<std::int64_t> big_m;
  /// Generic-machine constants behind two_jump: (2c_q + M)/(k+1) and (b_p - c_p)/(k+1).
  std::optional<Rational> c1;
  std::optional<Rational> c2;
  /// Exact (possibly fractional) right-hand side when the bound is not integral.
  std::optional<Rational> exact;
  /// True when the value is only asserted under an extra assumption (e.g. d >= 4).
  bool conditional = false;

  bool applicable() const noexcept { return value.has_value(); }
};

/// ceil(a_q (c_{q+1} - a_q) / (c_{q+1} - c_q)); nullopt unless c_{q+1} > c_q and c_{q+1} >= a_q >= 0.
std::optional<std::int64_t> big_m(std::int64_t a_q, std::int64_t c_q, std::int64_t c_q1);

/// max over 0 <= r <= q-1 of floor((b_p - c_p + b_r - c_r) / (2c_q + M)) q + p + r.
/// Needs a_{q-1} = 0, c_{q+1} > c_q, c_{q+1} >= a_q. An unknown b_p is replaced by k - c_p.
BoundResult remainder_bound(const ArrayPrefix& prefix, int q, int p);

/// 2p - 1 + max{0, (floor(2(b_p - c_p) / (2c_q + M)) + 1) q}, same hypotheses.
BoundResult two_jump_bound(int a_qm1, int a_q, int c_q, int c_q1, int b_p, int c_p, int p, int q);
BoundResult two_jump_bound(const ArrayPrefix& prefix, int q, int p);

/// Neumaier–Penjić: (floor((k - c_{q+1} - 1) / c_q) + 2) q + 1 when k >= 3, 2 <= q,
/// c_{q+1} > c_q and a_q <= c_{q+1} - c_q.
BoundResult np_bound(const ArrayPrefix& prefix, int q);

/// Amply regular bounds: amply_curvature, bcn, hlx (in that order).
std::vector<BoundResult> amply_bounds(int k, int lambda, int mu);

/// (s,c,a,k)-graph bounds: scak_curvature, terwilliger (in that order).
std::vector<BoundResult> scak_bounds(int s, int c, int a, int min_valency, int k);

/// 2p - 1 + max{0, (floor(2 C2 / C1) + 1) q}. Throws DomainError unless C1 > 0, q > 0, p >= 0.
std::int64_t generic_diameter_bound(int p, int q, const Rational& c1, const Rational& c2);

struct BoundScan {
  enum class Status { Ok, NothingApplicable, NotDistanceRegular };

  Status status = Status::NothingApplicable;
  std::vector<BoundResult> cells;
  std::optional<BoundResult> best;
  std::optional<int> true_diameter;
  std::optional<bool> tight;
  std::optional<IntersectionArray> array;
  std::optional<RegularityWitness> witness;
};

/// Evaluates np, remainder and two_jump over every admissible (q, p) and keeps the
/// smallest applicable value (first in scan order on ties).
BoundScan best_bound(const ArrayPrefix& prefix);
BoundScan best_bound(const IntersectionArray& arr);
/// Also reports the true diameter and whether the best bound is attained.
BoundScan best_bound(const Graph& g);

}  // namespace orc
