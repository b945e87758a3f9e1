#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orc/graph.hpp"
#include "orc/rational.hpp"
#include "orc/regularity.hpp"

namespace orc {

/// Finitely supported probability measure with exact weights.
class Measure {
 public:
  /// Merges repeated vertices, drops zero weights. Throws DomainError on negative
  /// weights or a total other than 1.
  static Measure from_weights(std::vector<std::pair<Vertex, Rational>> weights);
  static Measure point(Vertex v);

  /// Sorted by vertex; weights strictly positive.
  const std::vector<std::pair<Vertex, Rational>>& support() const noexcept { return support_; }
  Rational mass(Vertex v) const;

  friend bool operator==(const Measure&, const Measure&) = default;

 private:
  std::vector<std::pair<Vertex, Rational>> support_;
};

/// mu_x^eps: eps at x and (1 - eps) / deg(x) on each neighbor.
/// Throws DomainError for eps outside [0, 1] or an isolated x with eps < 1.
Measure lazy_measure(const Graph& g, Vertex x, const Rational& eps);

struct CouplingEntry {
  Vertex from = 0;
  Vertex to = 0;
  Rational mass;
};

/// Joint mass assignment; entries sorted by (from, to), masses positive.
struct Coupling {
  std::vector<CouplingEntry> entries;

  Rational cost(const Graph& g) const;
  /// Sums masses by (from, to) and sorts.
  void normalize();
  bool has_marginals(const Measure& first, const Measure& second) const;
};

/// Integral dual potentials over the two supports (distance units):
/// psi(v) - phi(u) <= d(u, v) for all support pairs.
struct DualCertificate {
  std::vector<std::pair<Vertex, std::int64_t>> source_potential;
  std::vector<std::pair<Vertex, std::int64_t>> target_potential;

  Rational objective(const Measure& first, const Measure& second) const;
};

struct WassersteinResult {
  Rational value;
  Coupling coupling;
  DualCertificate dual;
};

/// Exact W1 by min-cost flow over support(mu) x support(nu), with an optimal coupling and
/// dual certificate. Throws DomainError when the supports lie in different components.
WassersteinResult wasserstein(const Graph& g, const Measure& mu, const Measure& nu);

/// Lists every way the result fails to certify itself: marginals, dual feasibility,
/// complementary slackness, primal cost = dual objective = value. Empty means certified.
std::vector<std::string> certificate_problems(const Graph& g, const Measure& mu, const Measure& nu,
                                              const WassersteinResult& result);

struct Curvature {
  Rational value;
  int distance = 0;
  /// d(x, y) >= 2.
  bool long_scale = false;
};

/// kappa_p(x, y) = 1 - W1(mu_x^p, mu_y^p) / d(x, y). Throws DomainError for x == y
/// or a disconnected pair.
Curvature ollivier_curvature(const Graph& g, Vertex x, Vertex y, const Rational& p);

/// W1(mu_x^1, mu_y^eps) against p + (1 - eps)(|B_p| - |C_p|) / k_y, p = d(x, y).
struct JumpReport {
  Vertex x = 0;
  Vertex y = 0;
  int p = 0;
  Rational eps;
  Rational bound;
  Rational exact;
  bool holds = false;
};

JumpReport verify_jump_estimate(const Graph& g, Vertex x, Vertex y, const Rational& eps);

/// W1(mu_x^{1/(k+1)}, mu_y^{1/(k+1)}) against q - (2c_q + M) / (k + 1) on a
/// distance-regular graph, q = d(x, y).
struct ScaleReport {
  Vertex x = 0;
  Vertex y = 0;
  int q = 0;
  bool applicable = false;
  /// Failed hypotheses when not applicable.
  std::vector<std::string> unmet;
  std::int64_t big_m = 0;
  Rational bound;
  Rational exact;
  bool holds = false;
};

/// Hypotheses: 1 <= q <= d-1, a_{q-1} = 0, c_{q+1} > c_q, c_{q+1} >= a_q.
/// Unmet hypotheses give applicable = false.
ScaleReport verify_scale_estimate(const Graph& g, const IntersectionArray& arr, Vertex x, Vertex y);
/// Detects the array first; throws DomainError if the graph is not distance-regular.
ScaleReport verify_scale_estimate(const Graph& g, Vertex x, Vertex y);

/// Outcome of checking one hypothesis of the generic Wasserstein-to-diameter bound over
/// every pair at the required distance.
struct HypothesisCheck {
  enum class Status { Holds, Violated, Vacuous };

  Status status = Status::Vacuous;
  /// Largest W1 observed minus the distance; the tightest constant the graph supports.
  std::optional<Rational> worst_excess;
  std::optional<std::pair<Vertex, Vertex>> violating_pair;
};

/// Condition (1): W1(mu_x^eps, mu_y^eps) <= q - C1 for all d(x,y) = q.
/// Condition (2): W1(mu_x^1, mu_y^eps) <= p + C2 for all d(x,y) = p.
/// Pairs are restricted to x in `sources` when given (orbit representatives).
struct GenericHypotheses {
  HypothesisCheck scale;
  HypothesisCheck jump;
};

GenericHypotheses check_generic_hypotheses(const Graph& g, const Rational& eps, int q, int p,
                                           const Rational& c1, const Rational& c2,
                                           const std::vector<Vertex>& sources = {});

}  // namespace orc
