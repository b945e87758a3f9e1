#include "orc/plans.hpp"

#include <algorithm>

#include "orc/bounds.hpp"
#include "orc/errors.hpp"

namespace orc {

std::string to_string(PlanRule rule) {
  switch (rule) {
    case PlanRule::Anchor: return "anchor";
    case PlanRule::CBijection: return "c_bijection";
    case PlanRule::Matched: return "matched";
    case PlanRule::MatchedSpecial: return "matched_special";
    case PlanRule::Stay: return "stay";
  }
  return "?";
}

namespace {

int distance_checked(const Graph& g, const IntersectionArray& arr, Vertex x, Vertex y) {
  int q = g.distance(x, y);
  if (!is_reachable(q)) throw DomainError("vertices " + std::to_string(x) + " and " + std::to_string(y) + " are disconnected");
  if (q > arr.diameter()) throw DomainError("distance exceeds the diameter of the supplied array");
  return q;
}

std::vector<GadgetVertex> as_gadget_side(const VertexSet& set, bool copy = false) {
  std::vector<GadgetVertex> side;
  side.reserve(set.size());
  for (Vertex v : set) side.push_back({v, copy});
  return side;
}

std::string pair_text(Vertex x, Vertex y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

/// Bijection from one perfect matching of the graph joining `from` and `to` at the given
/// distance; the graph must be `degree`-regular.
Bijection bijection_at_distance(const Graph& g, const VertexSet& from, const VertexSet& to, int distance,
                                int degree, const std::string& what) {
  TaggedBipartiteMultigraph h;
  h.left = as_gadget_side(from);
  h.right = as_gadget_side(to);
  h.degree = degree;
  for (std::size_t i = 0; i < from.size(); ++i) {
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (g.distance(from[i], to[j]) == distance) h.edges.push_back({static_cast<int>(i), static_cast<int>(j), EdgeTag::E1});
    }
  }
  if (from.empty() && to.empty()) return {};
  std::vector<Matching> matchings;
  try {
    matchings = konig_decompose(h);
  } catch (const DomainError& e) {
    throw TheoremContradiction(what + " auxiliary graph is not " + std::to_string(degree) + "-regular: " + e.what());
  }
  Bijection out;
  for (int id : matchings.front()) {
    const auto& e = h.edges[static_cast<std::size_t>(id)];
    out.emplace_back(from[static_cast<std::size_t>(e.left)], to[static_cast<std::size_t>(e.right)]);
  }
  return out;
}

void require_curvature_hypotheses(const IntersectionArray& arr, int q) {
  std::vector<std::string> unmet;
  if (q < 1 || q > arr.diameter() - 1) {
    unmet.emplace_back("1 <= q <= d-1");
  } else {
    if (arr.a_at(q - 1) != 0) unmet.emplace_back("a_{q-1} = 0");
    if (!(arr.c_at(q + 1) > arr.c_at(q))) unmet.emplace_back("c_{q+1} > c_q");
    if (!(arr.c_at(q + 1) >= arr.a_at(q))) unmet.emplace_back("c_{q+1} >= a_q");
  }
  if (unmet.empty()) return;
  std::string msg = "hypotheses unmet at q = " + std::to_string(q) + ":";
  for (const auto& u : unmet) msg += " " + u + ";";
  throw DomainError(msg);
}

void require_degree(const TaggedBipartiteMultigraph& h, int q) {
  auto check = [&](const std::vector<int>& degrees, const std::vector<GadgetVertex>& side, const char* name) {
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      if (degrees[i] != h.degree) {
        throw TheoremContradiction(std::string("gadget at q = ") + std::to_string(q) + ": " + name + " vertex " +
                                   std::to_string(side[i].vertex) + (side[i].copy ? "'" : "") + " has multidegree " +
                                   std::to_string(degrees[i]) + ", counting argument requires " +
                                   std::to_string(h.degree));
      }
    }
  };
  if (h.left.size() != h.right.size()) throw TheoremContradiction("gadget sides differ in size");
  check(h.left_degrees(), h.left, "left");
  check(h.right_degrees(), h.right, "right");
}

}  // namespace

Bijection c_bijection(const Graph& g, const IntersectionArray& arr, Vertex x, Vertex y) {
  const int q = distance_checked(g, arr, x, y);
  if (q < 2) throw DomainError("c_bijection needs d(x,y) >= 2, got " + std::to_string(q));
  auto from = local_profile(g, y, x).c_set;  // C_q(y,x)
  auto to = local_profile(g, x, y).c_set;    // C_q(x,y)
  return bijection_at_distance(g, from, to, q - 2, arr.c_at(q - 1), "C-bijection");
}

Bijection a_bijection(const Graph& g, const IntersectionArray& arr, Vertex x, Vertex y) {
  const int q = distance_checked(g, arr, x, y);
  if (q < 1) throw DomainError("a_bijection needs d(x,y) >= 1");
  if (arr.a_at(q - 1) != 0) throw DomainError("a_bijection needs a_{q-1} = 0, got " + std::to_string(arr.a_at(q - 1)));
  auto from = local_profile(g, y, x).a_set;  // A_q(y,x)
  auto to = local_profile(g, x, y).a_set;    // A_q(x,y)
  return bijection_at_distance(g, from, to, q - 1, arr.c_at(q), "A-bijection");
}

TaggedBipartiteMultigraph build_gadget(const Graph& g, const IntersectionArray& arr, Vertex x, Vertex y, int q) {
  if (distance_checked(g, arr, x, y) != q) {
    throw DomainError("build_gadget: d" + pair_text(x, y) + " = " + std::to_string(g.distance(x, y)) + ", not q = " +
                      std::to_string(q));
  }
  require_curvature_hypotheses(arr, q);
  const auto from_x = local_profile(g, y, x);  // partition of N(x) relative to y
  const auto from_y = local_profile(g, x, y);  // partition of N(y) relative to x

  TaggedBipartiteMultigraph h;
  h.degree = arr.c_at(q + 1) - arr.c_at(q);
  const int extra = arr.c_at(q + 1) - arr.a_at(q);

  if (q >= 2) {
    VertexSet left = from_x.a_set;
    left.insert(left.end(), from_x.b_set.begin(), from_x.b_set.end());
    VertexSet right = from_y.a_set;
    right.insert(right.end(), from_y.b_set.begin(), from_y.b_set.end());
    h.left = as_gadget_side(left);
    h.right = as_gadget_side(right);
    for (std::size_t i = 0; i < left.size(); ++i) {
      for (std::size_t j = 0; j < right.size(); ++j) {
        if (g.distance(left[i], right[j]) == q) h.edges.push_back({static_cast<int>(i), static_cast<int>(j), EdgeTag::E1});
      }
    }
    for (auto [v, image] : a_bijection(g, arr, x, y)) {
      int i = static_cast<int>(std::find(left.begin(), left.end(), v) - left.begin());
      int j = static_cast<int>(std::find(right.begin(), right.end(), image) - right.begin());
      for (int rep = 0; rep < extra; ++rep) h.edges.push_back({i, j, EdgeTag::E2});
    }
  } else {
    const VertexSet& z = from_x.a_set;  // common neighbors, A_1(y,x) = A_1(x,y)
    const VertexSet& bx = from_x.b_set;  // B_1(y,x)
    const VertexSet& by = from_y.b_set;  // B_1(x,y)
    const int nz = static_cast<int>(z.size());
    h.left = as_gadget_side(z);
    for (Vertex v : bx) h.left.push_back({v, false});
    h.right = as_gadget_side(z, true);
    for (Vertex u : by) h.right.push_back({u, false});
    auto left_b = [&](std::size_t i) { return nz + static_cast<int>(i); };
    auto right_b = [&](std::size_t j) { return nz + static_cast<int>(j); };

    for (std::size_t i = 0; i < bx.size(); ++i) {
      for (std::size_t j = 0; j < by.size(); ++j) {
        if (g.adjacent(bx[i], by[j])) h.edges.push_back({left_b(i), right_b(j), EdgeTag::E1});
      }
    }
    for (std::size_t i = 0; i < bx.size(); ++i) {
      for (int t = 0; t < nz; ++t) {
        if (g.adjacent(bx[i], z[static_cast<std::size_t>(t)])) h.edges.push_back({left_b(i), t, EdgeTag::E2});
      }
    }
    for (int t = 0; t < nz; ++t) {
      for (std::size_t j = 0; j < by.size(); ++j) {
        if (g.adjacent(z[static_cast<std::size_t>(t)], by[j])) h.edges.push_back({t, right_b(j), EdgeTag::E3});
      }
    }
    for (int s = 0; s < nz; ++s) {
      for (int t = 0; t < nz; ++t) {
        if (g.adjacent(z[static_cast<std::size_t>(s)], z[static_cast<std::size_t>(t)])) h.edges.push_back({s, t, EdgeTag::E4});
      }
    }
    for (int t = 0; t < nz; ++t) {
      for (int rep = 0; rep < extra; ++rep) h.edges.push_back({t, t, EdgeTag::E5});
    }
  }
  require_degree(h, q);
  return h;
}

TransportPlan constructive_plan(const Graph& g, const IntersectionArray& arr, Vertex x, Vertex y, int q) {
  auto h = build_gadget(g, arr, x, y, q);
  const EdgeTag special = q >= 2 ? EdgeTag::E2 : EdgeTag::E5;
  const std::int64_t k1 = arr.valency() + 1;
  const Rational unit(1, k1);

  TransportPlan plan;
  plan.q = q;
  plan.big_m = *big_m(arr.a_at(q), arr.c_at(q), arr.c_at(q + 1));

  auto matchings = konig_decompose(h);
  plan.matchings = static_cast<int>(matchings.size());
  plan.special_edges = -1;
  for (std::size_t idx = 0; idx < matchings.size(); ++idx) {
    int count = static_cast<int>(std::count_if(matchings[idx].begin(), matchings[idx].end(), [&](int id) {
      return h.edges[static_cast<std::size_t>(id)].tag == special;
    }));
    if (count > plan.special_edges) {
      plan.special_edges = count;
      plan.matching_index = static_cast<int>(idx);
    }
  }
  if (matchings.empty()) plan.special_edges = 0;
  const std::int64_t pigeonhole = ceil_div(h.count(special), h.degree);
  if (plan.special_edges < pigeonhole || plan.special_edges < plan.big_m) {
    throw TheoremContradiction("best matching has " + std::to_string(plan.special_edges) + " " + to_string(special) +
                               " edges, pigeonhole guarantees " + std::to_string(pigeonhole));
  }

  auto add = [&](Vertex from, Vertex to, PlanRule rule, int expected) {
    int actual = g.distance(from, to);
    if (actual != expected) {
      throw TheoremContradiction("plan entry " + pair_text(from, to) + " (" + to_string(rule) + ") has distance " +
                                 std::to_string(actual) + ", rule guarantees " + std::to_string(expected));
    }
    plan.entries.push_back({from, to, unit, rule, actual});
  };

  if (q >= 2) {
    add(x, y, PlanRule::Anchor, q);
    for (auto [v, image] : c_bijection(g, arr, x, y)) add(v, image, PlanRule::CBijection, q - 2);
  } else {
    add(x, x, PlanRule::Stay, 0);
    add(y, y, PlanRule::Stay, 0);
  }
  if (!matchings.empty()) {
    for (int id : matchings[static_cast<std::size_t>(plan.matching_index)]) {
      const auto& e = h.edges[static_cast<std::size_t>(id)];
      const bool is_special = e.tag == special;
      int expected = q >= 2 ? (is_special ? q - 1 : q) : (is_special ? 0 : 1);
      add(h.left[static_cast<std::size_t>(e.left)].vertex, h.right[static_cast<std::size_t>(e.right)].vertex,
          is_special ? PlanRule::MatchedSpecial : PlanRule::Matched, expected);
    }
  }

  for (const auto& e : plan.entries) plan.coupling.entries.push_back({e.from, e.to, e.mass});
  plan.coupling.normalize();
  if (!plan.coupling.has_marginals(lazy_measure(g, x, unit), lazy_measure(g, y, unit))) {
    throw TheoremContradiction("constructed plan for " + pair_text(x, y) + " has wrong marginals");
  }
  plan.cost = plan.coupling.cost(g);
  plan.bound = Rational(q) - Rational(2 * std::int64_t{arr.c_at(q)} + plan.big_m, k1);
  if (plan.cost > plan.bound) {
    throw TheoremContradiction("plan cost " + to_string(plan.cost) + " exceeds bound " + to_string(plan.bound));
  }
  return plan;
}

}  // namespace orc
