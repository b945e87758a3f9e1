#include "orc/transport.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "orc/bounds.hpp"
#include "orc/errors.hpp"
#include "orc/min_cost_flow.hpp"

namespace orc {

Measure Measure::from_weights(std::vector<std::pair<Vertex, Rational>> weights) {
  std::map<Vertex, Rational> merged;
  for (const auto& [v, w] : weights) {
    if (w < 0) throw DomainError("negative weight on vertex " + std::to_string(v));
    merged[v] += w;
  }
  Measure m;
  Rational total = 0;
  for (const auto& [v, w] : merged) {
    total += w;
    if (w != 0) m.support_.emplace_back(v, w);
  }
  if (total != 1) throw DomainError("measure weights sum to " + to_string(total) + ", not 1");
  return m;
}

Measure Measure::point(Vertex v) { return from_weights({{v, Rational(1)}}); }

Rational Measure::mass(Vertex v) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), v,
                             [](const auto& entry, Vertex key) { return entry.first < key; });
  return (it != support_.end() && it->first == v) ? it->second : Rational(0);
}

Measure lazy_measure(const Graph& g, Vertex x, const Rational& eps) {
  if (eps < 0 || eps > 1) throw DomainError("laziness " + to_string(eps) + " outside [0, 1]");
  auto nb = g.neighbors(x);
  if (nb.empty()) {
    if (eps != 1) throw DomainError("vertex " + std::to_string(x) + " is isolated and eps < 1");
    return Measure::point(x);
  }
  std::vector<std::pair<Vertex, Rational>> weights;
  weights.reserve(nb.size() + 1);
  weights.emplace_back(x, eps);
  const Rational share = (1 - eps) / static_cast<std::int64_t>(nb.size());
  for (Vertex v : nb) weights.emplace_back(v, share);
  return Measure::from_weights(std::move(weights));
}

Rational Coupling::cost(const Graph& g) const {
  Rational total = 0;
  for (const auto& e : entries) total += e.mass * static_cast<std::int64_t>(g.distance(e.from, e.to));
  return total;
}

void Coupling::normalize() {
  std::map<std::pair<Vertex, Vertex>, Rational> merged;
  for (const auto& e : entries) merged[{e.from, e.to}] += e.mass;
  entries.clear();
  for (const auto& [key, mass] : merged) {
    if (mass != 0) entries.push_back({key.first, key.second, mass});
  }
}

bool Coupling::has_marginals(const Measure& first, const Measure& second) const {
  std::map<Vertex, Rational> out;
  std::map<Vertex, Rational> in;
  for (const auto& e : entries) {
    if (e.mass <= 0) return false;
    out[e.from] += e.mass;
    in[e.to] += e.mass;
  }
  auto matches = [](const std::map<Vertex, Rational>& sums, const Measure& m) {
    if (sums.size() != m.support().size()) return false;
    return std::all_of(m.support().begin(), m.support().end(), [&](const auto& entry) {
      auto it = sums.find(entry.first);
      return it != sums.end() && it->second == entry.second;
    });
  };
  return matches(out, first) && matches(in, second);
}

Rational DualCertificate::objective(const Measure& first, const Measure& second) const {
  Rational total = 0;
  for (const auto& [v, psi] : target_potential) total += second.mass(v) * psi;
  for (const auto& [u, phi] : source_potential) total -= first.mass(u) * phi;
  return total;
}

WassersteinResult wasserstein(const Graph& g, const Measure& mu, const Measure& nu) {
  const auto& src = mu.support();
  const auto& dst = nu.support();
  if (src.empty() || dst.empty()) throw DomainError("wasserstein: empty measure");
  {
    const auto& row = g.distances_from(src.front().first);
    auto reachable = [&](const auto& entry) { return is_reachable(row[static_cast<std::size_t>(entry.first)]); };
    if (!std::all_of(src.begin(), src.end(), reachable) || !std::all_of(dst.begin(), dst.end(), reachable)) {
      throw DomainError("wasserstein: supports lie in different components");
    }
  }

  std::int64_t scale = 1;
  for (const auto* side : {&src, &dst}) {
    for (const auto& [v, w] : *side) scale = std::lcm(scale, w.denominator());
  }

  TransportationProblem problem;
  for (const auto& [v, w] : src) problem.supply.push_back(w.numerator() * (scale / w.denominator()));
  for (const auto& [v, w] : dst) problem.demand.push_back(w.numerator() * (scale / w.denominator()));
  problem.cost.reserve(src.size() * dst.size());
  for (const auto& [u, wu] : src) {
    const auto& row = g.distances_from(u);
    for (const auto& [v, wv] : dst) problem.cost.push_back(row[static_cast<std::size_t>(v)]);
  }

  auto sol = solve_transportation(problem);

  WassersteinResult result;
  result.value = Rational(sol.total_cost, scale);
  for (const auto& s : sol.shipments) {
    result.coupling.entries.push_back({src[static_cast<std::size_t>(s.row)].first,
                                       dst[static_cast<std::size_t>(s.col)].first, Rational(s.amount, scale)});
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    result.dual.source_potential.emplace_back(src[i].first, sol.row_potential[i]);
  }
  for (std::size_t j = 0; j < dst.size(); ++j) {
    result.dual.target_potential.emplace_back(dst[j].first, sol.col_potential[j]);
  }
  return result;
}

std::vector<std::string> certificate_problems(const Graph& g, const Measure& mu, const Measure& nu,
                                              const WassersteinResult& result) {
  std::vector<std::string> problems;
  if (!result.coupling.has_marginals(mu, nu)) problems.emplace_back("coupling marginals differ from the measures");

  std::map<Vertex, std::int64_t> phi(result.dual.source_potential.begin(), result.dual.source_potential.end());
  std::map<Vertex, std::int64_t> psi(result.dual.target_potential.begin(), result.dual.target_potential.end());
  if (phi.size() != mu.support().size() || psi.size() != nu.support().size()) {
    problems.emplace_back("dual potentials do not cover the supports");
    return problems;
  }
  for (const auto& [u, wu] : mu.support()) {
    for (const auto& [v, wv] : nu.support()) {
      if (psi[v] - phi[u] > g.distance(u, v)) {
        problems.push_back("dual constraint violated at (" + std::to_string(u) + "," + std::to_string(v) + ")");
      }
    }
  }
  for (const auto& e : result.coupling.entries) {
    if (!phi.count(e.from) || !psi.count(e.to)) {
      problems.push_back("coupling entry outside the supports");
      continue;
    }
    if (psi[e.to] - phi[e.from] != g.distance(e.from, e.to)) {
      problems.push_back("coupling entry (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                         ") is not on a tight dual constraint");
    }
  }
  if (result.coupling.cost(g) != result.value) problems.emplace_back("coupling cost differs from the value");
  if (result.dual.objective(mu, nu) != result.value) problems.emplace_back("dual objective differs from the value");
  return problems;
}

Curvature ollivier_curvature(const Graph& g, Vertex x, Vertex y, const Rational& p) {
  if (x == y) throw DomainError("curvature needs two distinct vertices");
  int d = g.distance(x, y);
  if (!is_reachable(d)) throw DomainError("curvature of a disconnected pair");
  auto w = wasserstein(g, lazy_measure(g, x, p), lazy_measure(g, y, p)).value;
  return {1 - w / static_cast<std::int64_t>(d), d, d >= 2};
}

JumpReport verify_jump_estimate(const Graph& g, Vertex x, Vertex y, const Rational& eps) {
  auto profile = local_profile(g, x, y);
  JumpReport r;
  r.x = x;
  r.y = y;
  r.p = profile.h;
  r.eps = eps;
  r.bound = Rational(profile.h);
  if (const int ky = g.degree(y); ky > 0) {
    r.bound += (1 - eps) * static_cast<std::int64_t>(profile.b() - profile.c()) / static_cast<std::int64_t>(ky);
  }
  r.exact = wasserstein(g, Measure::point(x), lazy_measure(g, y, eps)).value;
  r.holds = r.exact <= r.bound;
  return r;
}

ScaleReport verify_scale_estimate(const Graph& g, const IntersectionArray& arr, Vertex x, Vertex y) {
  ScaleReport r;
  r.x = x;
  r.y = y;
  r.q = g.distance(x, y);
  if (!is_reachable(r.q)) throw DomainError("verify_scale_estimate: disconnected pair");
  const int q = r.q;
  const int d = arr.diameter();
  if (q < 1 || q > d - 1) {
    r.unmet.emplace_back("1 <= q <= d-1");
    return r;
  }
  if (arr.a_at(q - 1) != 0) r.unmet.emplace_back("a_{q-1} = 0");
  if (!(arr.c_at(q + 1) > arr.c_at(q))) r.unmet.emplace_back("c_{q+1} > c_q");
  if (!(arr.c_at(q + 1) >= arr.a_at(q))) r.unmet.emplace_back("c_{q+1} >= a_q");
  if (!r.unmet.empty()) return r;

  r.applicable = true;
  r.big_m = *big_m(arr.a_at(q), arr.c_at(q), arr.c_at(q + 1));
  const std::int64_t k1 = arr.valency() + 1;
  r.bound = Rational(q) - Rational(2 * std::int64_t{arr.c_at(q)} + r.big_m, k1);
  const Rational eps(1, k1);
  r.exact = wasserstein(g, lazy_measure(g, x, eps), lazy_measure(g, y, eps)).value;
  r.holds = r.exact <= r.bound;
  return r;
}

ScaleReport verify_scale_estimate(const Graph& g, Vertex x, Vertex y) {
  auto detected = intersection_array(g);
  if (auto* w = std::get_if<RegularityWitness>(&detected)) {
    throw DomainError("verify_scale_estimate: graph is not distance-regular (" + w->describe() + ")");
  }
  return verify_scale_estimate(g, std::get<IntersectionArray>(detected), x, y);
}

namespace {

void observe(HypothesisCheck& check, const Rational& w1, int distance, const Rational& allowed_excess,
             Vertex x, Vertex y) {
  Rational excess = w1 - distance;
  if (!check.worst_excess || excess > *check.worst_excess) check.worst_excess = excess;
  if (check.status == HypothesisCheck::Status::Vacuous) check.status = HypothesisCheck::Status::Holds;
  if (excess > allowed_excess && check.status != HypothesisCheck::Status::Violated) {
    check.status = HypothesisCheck::Status::Violated;
    check.violating_pair = std::pair{x, y};
  }
}

}  // namespace

GenericHypotheses check_generic_hypotheses(const Graph& g, const Rational& eps, int q, int p,
                                           const Rational& c1, const Rational& c2,
                                           const std::vector<Vertex>& sources) {
  std::vector<Vertex> xs = sources;
  if (xs.empty()) {
    xs.resize(static_cast<std::size_t>(g.vertex_count()));
    std::iota(xs.begin(), xs.end(), 0);
  }
  GenericHypotheses out;
  for (Vertex x : xs) {
    const auto& row = g.distances_from(x);
    for (Vertex y = 0; y < g.vertex_count(); ++y) {
      int d = row[static_cast<std::size_t>(y)];
      if (d == q) {
        auto w = wasserstein(g, lazy_measure(g, x, eps), lazy_measure(g, y, eps)).value;
        observe(out.scale, w, q, -c1, x, y);
      }
      if (d == p) {
        auto w = wasserstein(g, Measure::point(x), lazy_measure(g, y, eps)).value;
        observe(out.jump, w, p, c2, x, y);
      }
    }
  }
  return out;
}

}  // namespace orc
