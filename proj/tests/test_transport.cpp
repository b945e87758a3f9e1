#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>


#include "orc/catalog.hpp"
#include "orc/errors.hpp"
#include "orc/min_cost_flow.hpp"
#include "orc/transport.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace orc;

using testing::oracle_w1;
using testing::random_units;
using testing::to_measure;

namespace {

Rational w1(const Graph& g, const Measure& a, const Measure& b) { return wasserstein(g, a, b).value; }

Vertex first_at_distance(const Graph& g, Vertex x, int d) {
  for (Vertex y = 0; y < g.vertex_count(); ++y) {
    if (g.distance(x, y) == d) return y;
  }
  FAIL("no vertex at distance " << d);
  return -1;
}

}  // namespace

TEST_CASE("rational helpers round mathematically") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(floor_div(-6, 3) == -2);
  CHECK_THROWS_AS(floor_div(1, 0), DomainError);
  CHECK(floor(Rational(-1, 4)) == -1);
  CHECK(ceil(Rational(-1, 4)) == 0);
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(14, 2)) == "7");
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-5") == Rational(-5));
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), InputError);
}

TEST_CASE("rational compares against plain integers") {
  Rational zero;
  CHECK(zero == 0);
  CHECK(Rational(4, 2) == 2);
  CHECK(Rational(4, 2) != 3);
  CHECK(Rational(1, 2) != 0);
  CHECK(std::int64_t{2} == Rational(2));
  CHECK(Rational(5, 3) == Rational(10, 6));
}

TEST_CASE("measures") {
  auto m = Measure::from_weights({{3, Rational(1, 2)}, {1, Rational(1, 4)}, {3, Rational(1, 4)}, {2, Rational(0)}});
  CHECK(m.support().size() == 2);
  CHECK(m.mass(3) == Rational(3, 4));
  CHECK(m.mass(2) == 0);
  CHECK_THROWS_AS(Measure::from_weights({{0, Rational(1, 2)}}), DomainError);
  CHECK_THROWS_AS(Measure::from_weights({{0, Rational(3, 2)}, {1, Rational(-1, 2)}}), DomainError);

  Graph q4 = generate("hypercube:4");
  CHECK(lazy_measure(q4, 0, Rational(1)) == Measure::point(0));
  auto uniform = lazy_measure(q4, 0, Rational(0));
  CHECK(uniform.support().size() == 4);
  CHECK(uniform.mass(1) == Rational(1, 4));
  auto fifth = lazy_measure(q4, 0, Rational(1, 5));
  CHECK(fifth.support().size() == 5);
  for (const auto& [v, w] : fifth.support()) CHECK(w == Rational(1, 5));
  CHECK_THROWS_AS(lazy_measure(q4, 0, Rational(3, 2)), DomainError);

  std::vector<Edge> none;
  Graph isolated = build_graph(2, none);
  CHECK_THROWS_AS(lazy_measure(isolated, 0, Rational(1, 2)), DomainError);
  CHECK(lazy_measure(isolated, 0, Rational(1)) == Measure::point(0));
}

TEST_CASE("transportation solver") {
  TransportationProblem problem{{3, 2}, {1, 4}, {5, 1, 2, 3}};
  auto sol = solve_transportation(problem);
  CHECK(sol.total_cost == 3 * 1 + 1 * 2 + 1 * 3);
  CHECK(sol.dual_objective(problem) == sol.total_cost);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(sol.col_potential[j] - sol.row_potential[i] <= problem.cost_at(i, j));
    }
  }
  for (const auto& s : sol.shipments) {
    CHECK(sol.col_potential[s.col] - sol.row_potential[s.row] ==
          problem.cost_at(static_cast<std::size_t>(s.row), static_cast<std::size_t>(s.col)));
  }
  CHECK_THROWS_AS(solve_transportation({{3}, {2}, {1}}), DomainError);
  CHECK_THROWS_AS(solve_transportation({{1}, {1}, {-1}}), DomainError);
}

TEST_CASE("wasserstein basics") {
  Graph k2 = generate("complete:2");
  for (Rational eps : {Rational(0), Rational(1, 3), Rational(1, 5), Rational(1, 2)}) {
    CHECK(w1(k2, lazy_measure(k2, 0, eps), lazy_measure(k2, 1, eps)) == 1 - 2 * eps);
  }
  Graph pet = generate("petersen");
  auto mu = lazy_measure(pet, 0, Rational(1, 4));
  auto same = wasserstein(pet, mu, mu);
  CHECK(same.value == 0);
  for (const auto& e : same.coupling.entries) CHECK(e.from == e.to);

  Graph j63 = generate("johnson:6:3");
  for (Vertex y = 0; y < j63.vertex_count(); ++y) {
    CHECK(w1(j63, Measure::point(0), Measure::point(y)) == j63.distance(0, y));
  }

  std::vector<Edge> split{{0, 1}, {2, 3}};
  Graph g = build_graph(4, split);
  CHECK_THROWS_AS(wasserstein(g, Measure::point(0), Measure::point(3)), DomainError);
}

TEST_CASE("frozen W1 values from an independent LP solve") {
  Graph q3 = generate("hypercube:3");
  CHECK(w1(q3, lazy_measure(q3, 0, Rational(1, 4)), lazy_measure(q3, 1, Rational(1, 4))) == Rational(1, 2));
  CHECK(ollivier_curvature(q3, 0, 1, Rational(1, 4)).value == Rational(1, 2));

  Graph q4 = generate("hypercube:4");
  CHECK(w1(q4, Measure::point(0), lazy_measure(q4, 3, Rational(1, 5))) == 2);
  CHECK(w1(q4, lazy_measure(q4, 0, Rational(1, 5)), lazy_measure(q4, 3, Rational(1, 5))) == Rational(6, 5));
  CHECK(w1(q4, lazy_measure(q4, 0, Rational(1, 5)), lazy_measure(q4, 1, Rational(1, 5))) == Rational(3, 5));

  Graph pet = generate("petersen");
  Vertex nb = pet.neighbors(0)[0];
  CHECK(w1(pet, Measure::point(0), lazy_measure(pet, nb, Rational(1, 4))) == Rational(5, 4));

  Graph h23 = generate("hamming:2:3");
  CHECK(w1(h23, lazy_measure(h23, 0, Rational(1, 5)), lazy_measure(h23, 1, Rational(1, 5))) == Rational(2, 5));

  Graph wells = generate("wells");
  const Rational sixth(1, 6);
  for (Vertex y = 0; y < wells.vertex_count(); ++y) {
    if (wells.distance(0, y) != 2) continue;
    CHECK(w1(wells, lazy_measure(wells, 0, sixth), lazy_measure(wells, y, sixth)) == Rational(4, 3));
  }
}

TEST_CASE("results carry a valid primal-dual certificate") {
  std::mt19937 rng(5);
  for (const char* spec : {"petersen", "wells", "hamming:3:3", "johnson:6:3"}) {
    Graph g = generate(spec);
    for (int t = 0; t < 20; ++t) {
      Vertex x = static_cast<Vertex>(rng() % static_cast<unsigned>(g.vertex_count()));
      Vertex y = static_cast<Vertex>(rng() % static_cast<unsigned>(g.vertex_count()));
      auto mu = lazy_measure(g, x, Rational(1, 3));
      auto nu = lazy_measure(g, y, Rational(1, 7));
      auto res = wasserstein(g, mu, nu);
      CHECK(certificate_problems(g, mu, nu, res).empty());
      CHECK(res.coupling.cost(g) == res.value);
      CHECK(res.dual.objective(mu, nu) == res.value);
    }
  }
}

TEST_CASE("solver equals the assignment oracle on 200 random instances") {
  std::mt19937 rng(424242);
  int trials = 0;
  for (; trials < 200; ++trials) {
    int n = 2 + static_cast<int>(rng() % 19);
    Graph g = testing::random_connected_graph(rng, n, 0.15);
    std::int64_t denominator = 1 + static_cast<std::int64_t>(rng() % 60);
    auto a = random_units(rng, n, static_cast<int>(denominator));
    auto b = random_units(rng, n, static_cast<int>(denominator));
    auto mu = to_measure(a, denominator);
    auto nu = to_measure(b, denominator);
    CAPTURE(trials);
    CHECK(w1(g, mu, nu) == oracle_w1(g, a, b, denominator));
  }
  CHECK(trials == 200);
}

TEST_CASE("metric axioms hold exactly on random triples") {
  std::mt19937 rng(31337);
  for (int t = 0; t < 100; ++t) {
    int n = 3 + static_cast<int>(rng() % 15);
    Graph g = testing::random_connected_graph(rng, n, 0.2);
    std::int64_t denominator = 1 + static_cast<std::int64_t>(rng() % 60);
    auto a = to_measure(random_units(rng, n, static_cast<int>(denominator)), denominator);
    auto b = to_measure(random_units(rng, n, static_cast<int>(denominator)), denominator);
    auto c = to_measure(random_units(rng, n, static_cast<int>(denominator)), denominator);
    CHECK(w1(g, a, a) == 0);
    CHECK(w1(g, a, b) == w1(g, b, a));
    CHECK(w1(g, a, c) <= w1(g, a, b) + w1(g, b, c));
    if (!(a == b)) CHECK(w1(g, a, b) > 0);
  }
}

TEST_CASE("curvature") {
  Graph k2 = generate("complete:2");
  auto kappa = ollivier_curvature(k2, 0, 1, Rational(0));
  CHECK(kappa.value == 0);
  CHECK_FALSE(kappa.long_scale);
  CHECK_THROWS_AS(ollivier_curvature(k2, 1, 1, Rational(0)), DomainError);

  Graph q4 = generate("hypercube:4");
  auto far = ollivier_curvature(q4, 0, 3, Rational(1, 5));
  CHECK(far.long_scale);
  CHECK(far.distance == 2);
  CHECK(far.value == 1 - Rational(6, 5) / 2);

  for (const char* spec : {"petersen", "johnson:5:2", "hypercube:3", "wells"}) {
    Graph g = generate(spec);
    auto edges = g.edges();
    auto first = ollivier_curvature(g, edges[0].first, edges[0].second, Rational(1, 3)).value;
    for (auto [u, v] : edges) CHECK(ollivier_curvature(g, u, v, Rational(1, 3)).value == first);
  }
}

TEST_CASE("jump estimate examples") {
  Graph q4 = generate("hypercube:4");
  auto same = verify_jump_estimate(q4, 2, 2, Rational(1, 3));
  CHECK(same.p == 0);
  CHECK(same.bound == Rational(2, 3));
  CHECK(same.exact == Rational(2, 3));
  CHECK(same.holds);

  auto two = verify_jump_estimate(q4, 0, 3, Rational(1, 5));
  CHECK(two.bound == 2);
  CHECK(two.exact == 2);
  CHECK(two.holds);

  Graph pet = generate("petersen");
  auto edge = verify_jump_estimate(pet, 0, pet.neighbors(0)[0], Rational(1, 4));
  CHECK(edge.bound == Rational(5, 4));
  CHECK(edge.exact == Rational(5, 4));
  CHECK(edge.holds);
}

TEST_CASE("scale estimate examples") {
  for (int n = 3; n <= 5; ++n) {
    Graph q = generate("hypercube:" + std::to_string(n));
    auto rep = verify_scale_estimate(q, 0, 1);
    CHECK(rep.applicable);
    CHECK(rep.big_m == 0);
    CHECK(rep.bound == 1 - Rational(2, n + 1));
    CHECK(rep.holds);
  }
  Graph q4 = generate("hypercube:4");
  auto two = verify_scale_estimate(q4, 0, 3);
  CHECK(two.bound == Rational(6, 5));
  CHECK(two.exact == Rational(6, 5));

  Graph wells = generate("wells");
  Vertex y = first_at_distance(wells, 0, 2);
  auto w = verify_scale_estimate(wells, 0, y);
  CHECK(w.applicable);
  CHECK(w.big_m == 1);
  CHECK(w.bound == Rational(3, 2));
  CHECK(w.exact == Rational(4, 3));
  CHECK(w.holds);

  Graph pet = generate("petersen");
  for (Vertex v = 1; v < 10; ++v) {
    auto rep = verify_scale_estimate(pet, 0, v);
    CHECK_FALSE(rep.applicable);
    CHECK_FALSE(rep.unmet.empty());
  }
  CHECK_THROWS_AS(verify_scale_estimate(generate("complete_bipartite:3:4"), 0, 1), DomainError);
}

TEST_CASE("generic hypotheses check") {
  Graph q4 = generate("hypercube:4");
  const Rational eps(1, 5);
  auto ok = check_generic_hypotheses(q4, eps, 1, 0, Rational(2, 5), Rational(4, 5));
  CHECK(ok.scale.status == HypothesisCheck::Status::Holds);
  CHECK(ok.jump.status == HypothesisCheck::Status::Holds);
  CHECK(ok.scale.worst_excess == Rational(-2, 5));

  auto tight = check_generic_hypotheses(q4, eps, 1, 0, Rational(1, 2), Rational(4, 5));
  CHECK(tight.scale.status == HypothesisCheck::Status::Violated);
  CHECK(tight.scale.violating_pair.has_value());

  auto vacuous = check_generic_hypotheses(q4, eps, 9, 0, Rational(1, 2), Rational(4, 5));
  CHECK(vacuous.scale.status == HypothesisCheck::Status::Vacuous);

  auto sampled = check_generic_hypotheses(q4, eps, 2, 1, Rational(4, 5), Rational(2, 5), {0});
  CHECK(sampled.scale.status == HypothesisCheck::Status::Holds);
}
