// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "oracles.hpp"
#include "orc/bounds.hpp"
#include "orc/catalog.hpp"
#include "orc/errors.hpp"
#include "orc/plans.hpp"
#include "orc/transport.hpp"

using namespace orc;

namespace {

/// Collects failed expectations for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : "; ") + text; }

  bool passed() const { return failed_ == 0; }
  int count() const { return count_; }
  int failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::string& notes() const { return notes_; }

 private:
  int count_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
  std::string notes_;
};

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  std::function<void(Check&)> body;
};

std::string str(const Rational& r) { return to_string(r); }

IntersectionArray array_or_throw(const Graph& g) {
  auto det = intersection_array(g);
  if (auto* w = std::get_if<RegularityWitness>(&det)) throw DomainError("not distance-regular: " + w->describe());
  return std::get<IntersectionArray>(det);
}

std::vector<Vertex> sources_for(const Graph& g) {
  // The 2048-vertex coset graph is vertex-transitive; vertex 0 stands for every orbit.
  if (g.vertex_count() > 1000) return {0};
  std::vector<Vertex> all;
  for (Vertex v = 0; v < g.vertex_count(); ++v) all.push_back(v);
  return all;
}

void ac1(Check& c) {
  auto prefix = ArrayPrefix::known({22, 21, 20, 3}, {1, 2, 3, 20});
  c.expect(validate_intersection_array(prefix).empty(), "prefix valid");
  auto rem = remainder_bound(prefix, 3, 4);
  auto np = np_bound(prefix, 3);
  c.expect(rem.value == 6, "remainder(q=3,p=4) = 6");
  c.expect(!rem.notes.empty() && rem.notes.front().find("k - c_4 = 2") != std::string::npos, "b_4 <= 2 substitution");
  c.expect(np.value == 7, "np(q=3) = 7");
  c.note("remainder=" + std::to_string(rem.value.value_or(-1)) + " np=" + std::to_string(np.value.value_or(-1)));
}

void ac2(Check& c) {
  auto prefix = ArrayPrefix::known({5, 4, 1}, {1, 1, 4});
  auto rem = remainder_bound(prefix, 2, 3);
  auto np = np_bound(prefix, 2);
  c.expect(rem.value == 4, "remainder(q=2,p=3) = 4");
  c.expect(!rem.notes.empty() && rem.notes.front().find("= 1") != std::string::npos, "b_3 <= 1 substitution");
  c.expect(np.value == 5, "np(q=2) = 5");
  Graph wells = generate("wells");
  auto arr = array_or_throw(wells);
  c.expect(arr == IntersectionArray{{5, 4, 1, 1}, {1, 1, 4, 5}}, "Wells array");
  c.expect(diameter(wells) == 4, "Wells diameter 4");
  c.expect(rem.value == diameter(wells), "bound tight on Wells");
  c.note("remainder=" + std::to_string(rem.value.value_or(-1)) + " np=" + std::to_string(np.value.value_or(-1)) +
         " wells=" + to_string(arr));
}

void ac3(Check& c) {
  auto prefix = ArrayPrefix::known({21, 20, 16, 6, 2}, {1, 2, 6, 16});
  auto rem = remainder_bound(prefix, 2, 4);
  auto np = np_bound(prefix, 3);
  c.expect(rem.value == 6, "remainder(q=2,p=4) = 6");
  c.expect(np.value == 7, "np(q=3) = 7");
  Graph g = generate("golay_coset_truncated_shortened");
  c.expect(diameter(g) == 6 && g.degree(0) == 21, "catalog graph has diameter 6, valency 21");
  c.note("remainder=" + std::to_string(rem.value.value_or(-1)) + " np=" + std::to_string(np.value.value_or(-1)));
}

void ac4(Check& c) {
  Graph g = generate("golay_coset_shortened");
  c.expect(g.vertex_count() == 2048, "2048 vertices");
  auto scan = best_bound(g);
  c.expect(scan.array == IntersectionArray{{22, 21, 20, 3, 2, 1}, {1, 2, 3, 20, 21, 22}}, "array");
  c.expect(scan.true_diameter == 6, "diameter 6");
  c.expect(scan.best && scan.best->value == 6, "best bound 6");
  c.expect(scan.tight == true, "tight");
  if (scan.best) {
    c.note("best=" + std::to_string(*scan.best->value) + " (" + scan.best->name + " q=" +
           std::to_string(scan.best->q.value_or(-1)) + " p=" + std::to_string(scan.best->p.value_or(-1)) + ")");
  }
}

void ac5(Check& c) {
  long instances = 0;
  for (const char* spec : {"hypercube:3", "hypercube:4", "petersen", "hamming:2:3", "johnson:5:2", "cycle:7"}) {
    Graph g = generate(spec);
    const int k = g.degree(0);
    for (Rational eps : {Rational(0), Rational(1, k + 1), Rational(1, 2)}) {
      for (Vertex x = 0; x < g.vertex_count(); ++x) {
        for (Vertex y = 0; y < g.vertex_count(); ++y) {
          auto rep = verify_jump_estimate(g, x, y, eps);
          ++instances;
          c.expect(rep.holds, std::string(spec) + " (" + std::to_string(x) + "," + std::to_string(y) + ") eps=" +
                                  str(eps) + ": " + str(rep.exact) + " > " + str(rep.bound));
        }
      }
    }
  }
  c.note(std::to_string(instances) + " ordered pairs x eps");
}

const std::vector<const char*> kScaleGraphs{"hypercube:3", "hypercube:4", "hypercube:5", "hypercube:6", "hamming:2:3",
                                            "johnson:6:3", "wells",       "golay_coset_shortened"};

void ac6(Check& c) {
  long applicable = 0;
  for (const char* spec : kScaleGraphs) {
    Graph g = generate(spec);
    auto arr = array_or_throw(g);
    long here = 0;
    for (Vertex x : sources_for(g)) {
      for (Vertex y = 0; y < g.vertex_count(); ++y) {
        if (x == y) continue;
        auto rep = verify_scale_estimate(g, arr, x, y);
        if (!rep.applicable) continue;
        ++here;
        c.expect(rep.holds, std::string(spec) + " (" + std::to_string(x) + "," + std::to_string(y) + "): " +
                                str(rep.exact) + " > " + str(rep.bound));
      }
    }
    c.expect(here > 0, std::string(spec) + " has applicable pairs");
    applicable += here;
  }
  c.note(std::to_string(applicable) + " applicable pairs");
}

void ac7(Check& c) {
  long plans = 0;
  for (const char* spec : kScaleGraphs) {
    Graph g = generate(spec);
    auto arr = array_or_throw(g);
    const Rational eps(1, arr.valency() + 1);
    for (Vertex x : sources_for(g)) {
      for (Vertex y = 0; y < g.vertex_count(); ++y) {
        if (x == y) continue;
        auto rep = verify_scale_estimate(g, arr, x, y);
        if (!rep.applicable) continue;
        const std::string where = std::string(spec) + " (" + std::to_string(x) + "," + std::to_string(y) + ")";
        try {
          auto plan = constructive_plan(g, arr, x, y, rep.q);
          ++plans;
          c.expect(plan.coupling.has_marginals(lazy_measure(g, x, eps), lazy_measure(g, y, eps)), where + " marginals");
          c.expect(rep.exact <= plan.cost, where + " cost below oracle");
          c.expect(plan.cost <= rep.bound, where + " cost " + str(plan.cost) + " above bound " + str(rep.bound));
          c.expect(plan.special_edges >= rep.big_m, where + " special edges below M");
        } catch (const TheoremContradiction& e) {
          c.expect(false, where + ": " + e.what());
        }
      }
    }
  }
  c.note(std::to_string(plans) + " plans");
}

void ac8(Check& c) {
  std::mt19937 rng(20260101);
  int trials = 0;
  for (; trials < 100; ++trials) {
    int n = 1 + static_cast<int>(rng() % 64);
    int r = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(8, 3 * n)));
    auto h = testing::random_regular_multigraph(rng, n, r);
    c.expect(testing::is_konig_decomposition(h, konig_decompose(h)),
             "trial " + std::to_string(trials) + " (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
  }
  c.note(std::to_string(trials) + " multigraphs");
}

void ac9(Check& c) {
  std::mt19937 rng(909);
  int trials = 0;
  for (; trials < 200; ++trials) {
    int n = 2 + static_cast<int>(rng() % 19);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(rng() % static_cast<unsigned>(v)), v);
    std::bernoulli_distribution coin(0.15);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    Graph g = build_graph(n, edges);
    const std::int64_t denom = 1 + static_cast<std::int64_t>(rng() % 60);
    auto a = testing::random_units(rng, n, static_cast<int>(denom));
    auto b = testing::random_units(rng, n, static_cast<int>(denom));
    auto d = testing::random_units(rng, n, static_cast<int>(denom));
    auto mu = testing::to_measure(a, denom);
    auto nu = testing::to_measure(b, denom);
    auto rho = testing::to_measure(d, denom);
    auto ab = wasserstein(g, mu, nu).value;
    c.expect(ab == testing::oracle_w1(g, a, b, denom), "oracle mismatch in trial " + std::to_string(trials));
    c.expect(wasserstein(g, mu, mu).value == 0, "identity");
    c.expect(ab == wasserstein(g, nu, mu).value, "symmetry");
    c.expect(wasserstein(g, mu, rho).value <= ab + wasserstein(g, nu, rho).value, "triangle");
  }
  c.note(std::to_string(trials) + " random graphs");
}

void ac10(Check& c) {
  auto amply = amply_bounds(4, 0, 2);
  Graph q4 = generate("hypercube:4");
  c.expect(amply[0].name == "amply_curvature" && amply[0].value == 4, "amply_curvature(4,0,2) = 4");
  c.expect(diameter(q4) == 4, "Q4 diameter 4");

  int cells = 0;
  for (const auto& entry : standard_catalog()) {
    if (!entry.expected) continue;
    Graph g = generate(entry.spec());
    auto arr = array_or_throw(g);
    const Rational eps(1, arr.valency() + 1);
    for (const auto& cell : best_bound(arr).cells) {
      if (cell.name != "two_jump" || !cell.applicable()) continue;
      const int q = *cell.q;
      const int p = *cell.p;
      Vertex at_q = -1;
      Vertex at_p = -1;
      for (Vertex y = 0; y < g.vertex_count(); ++y) {
        if (at_q < 0 && g.distance(0, y) == q) at_q = y;
        if (at_p < 0 && g.distance(0, y) == p) at_p = y;
      }
      auto scale = verify_scale_estimate(g, arr, 0, at_q);
      auto jump = verify_jump_estimate(g, 0, at_p, eps);
      const Rational c1 = q - scale.bound;
      const Rational c2 = jump.bound - p;
      const auto where = entry.spec() + " q=" + std::to_string(q) + " p=" + std::to_string(p);
      c.expect(scale.holds && jump.holds, where + " hypotheses hold on a sample pair");
      c.expect(generic_diameter_bound(p, q, c1, c2) == *cell.value, where + " generic bound reproduces two_jump");
      ++cells;
    }
  }
  c.note("amply_curvature=" + std::to_string(amply[0].value.value_or(-1)) + ", " + std::to_string(cells) +
         " two_jump cells reproduced");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "first prefix: remainder 6, np 7", 1.0, ac1},
      {"AC2", "second prefix and Wells graph: remainder 4 tight, np 5", 5.0, ac2},
      {"AC3", "third prefix: remainder 6, np 7", 1.0, ac3},
      {"AC4", "shortened Golay coset graph: array, diameter 6, tight best bound", 120.0, ac4},
      {"AC5", "jump estimate on all ordered pairs", 0.0, ac5},
      {"AC6", "scale estimate on all applicable pairs", 0.0, ac6},
      {"AC7", "constructive plan sandwich", 0.0, ac7},
      {"AC8", "Konig decomposition on 100 random multigraphs", 0.0, ac8},
      {"AC9", "W1 equals the assignment oracle; metric axioms", 0.0, ac9},
      {"AC10", "amply curvature bound on Q4; generic machine consistency", 0.0, ac10},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool within = crit.budget_seconds <= 0 || seconds < crit.budget_seconds;
    bool ok = check.passed() && within;
    if (!ok) ++failed;
    std::ostringstream line;
    line << (ok ? "PASS " : "FAIL ") << crit.id << "  " << crit.title << "  [" << check.count() << " checks, ";
    line.setf(std::ios::fixed);
    line.precision(3);
    line << seconds << " s";
    if (crit.budget_seconds > 0) line << " / budget " << crit.budget_seconds << " s";
    line << "]";
    if (!check.notes().empty()) line << "  " << check.notes();
    std::printf("%s\n", line.str().c_str());
    for (const auto& f : check.failures()) std::printf("    failed: %s\n", f.c_str());
    if (!within) std::printf("    over time budget\n");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
