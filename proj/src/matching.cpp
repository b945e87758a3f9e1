#include "orc/matching.hpp"

#include <algorithm>

namespace orc {

std::string to_string(EdgeTag tag) {
  switch (tag) {
    case EdgeTag::E1: return "E1";
    case EdgeTag::E2: return "E2";
    case EdgeTag::E3: return "E3";
    case EdgeTag::E4: return "E4";
    case EdgeTag::E5: return "E5";
  }
  return "?";
}

std::vector<int> TaggedBipartiteMultigraph::left_degrees() const {
  std::vector<int> deg(left.size(), 0);
  for (const auto& e : edges) ++deg[static_cast<std::size_t>(e.left)];
  return deg;
}

std::vector<int> TaggedBipartiteMultigraph::right_degrees() const {
  std::vector<int> deg(right.size(), 0);
  for (const auto& e : edges) ++deg[static_cast<std::size_t>(e.right)];
  return deg;
}

int TaggedBipartiteMultigraph::count(EdgeTag tag) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [&](const auto& e) { return e.tag == tag; }));
}

NotRegularError::NotRegularError(bool left_side, int index, int degree, int expected)
    : DomainError(std::string(left_side ? "left" : "right") + " vertex " + std::to_string(index) +
                  " has degree " + std::to_string(degree) + ", expected " + std::to_string(expected)),
      left_side(left_side),
      index(index),
      degree(degree),
      expected(expected) {}

namespace {

void require_regular(const TaggedBipartiteMultigraph& h) {
  if (h.left.size() != h.right.size()) {
    throw DomainError("sides differ in size: " + std::to_string(h.left.size()) + " vs " +
                      std::to_string(h.right.size()));
  }
  for (const auto& e : h.edges) {
    if (e.left < 0 || e.left >= static_cast<int>(h.left.size()) || e.right < 0 ||
        e.right >= static_cast<int>(h.right.size())) {
      throw DomainError("edge endpoint outside the bipartition");
    }
  }
  auto ld = h.left_degrees();
  for (std::size_t i = 0; i < ld.size(); ++i) {
    if (ld[i] != h.degree) throw NotRegularError(true, static_cast<int>(i), ld[i], h.degree);
  }
  auto rd = h.right_degrees();
  for (std::size_t i = 0; i < rd.size(); ++i) {
    if (rd[i] != h.degree) throw NotRegularError(false, static_cast<int>(i), rd[i], h.degree);
  }
}

/// Kuhn's augmenting-path matching over the edges still marked alive.
class PerfectMatcher {
 public:
  PerfectMatcher(const TaggedBipartiteMultigraph& h, const std::vector<char>& alive)
      : h_(h), incident_(h.left.size()), match_right_(h.right.size(), -1) {
    for (std::size_t id = 0; id < h.edges.size(); ++id) {
      if (alive[id]) incident_[static_cast<std::size_t>(h.edges[id].left)].push_back(static_cast<int>(id));
    }
  }

  Matching run() {
    for (std::size_t u = 0; u < h_.left.size(); ++u) {
      visited_.assign(h_.right.size(), 0);
      if (!augment(static_cast<int>(u))) {
        throw TheoremContradiction("regular bipartite multigraph without a perfect matching");
      }
    }
    Matching m(h_.left.size(), -1);
    for (int edge : match_right_) m[static_cast<std::size_t>(h_.edges[static_cast<std::size_t>(edge)].left)] = edge;
    return m;
  }

 private:
  bool augment(int u) {
    for (int id : incident_[static_cast<std::size_t>(u)]) {
      auto v = static_cast<std::size_t>(h_.edges[static_cast<std::size_t>(id)].right);
      if (visited_[v]) continue;
      visited_[v] = 1;
      int holder = match_right_[v];
      if (holder == -1 || augment(h_.edges[static_cast<std::size_t>(holder)].left)) {
        match_right_[v] = id;
        return true;
      }
    }
    return false;
  }

  const TaggedBipartiteMultigraph& h_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> match_right_;
  std::vector<char> visited_;
};

}  // namespace

std::vector<Matching> konig_decompose(const TaggedBipartiteMultigraph& h) {
  require_regular(h);
  std::vector<char> alive(h.edges.size(), 1);
  std::vector<Matching> out;
  out.reserve(static_cast<std::size_t>(h.degree));
  for (int round = 0; round < h.degree; ++round) {
    auto m = PerfectMatcher(h, alive).run();
    for (int id : m) alive[static_cast<std::size_t>(id)] = 0;
    out.push_back(std::move(m));
  }
  return out;
}

bool is_perfect_matching(const TaggedBipartiteMultigraph& h, const Matching& m) {
  if (m.size() != h.left.size()) return false;
  std::vector<char> right_used(h.right.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0 || m[i] >= static_cast<int>(h.edges.size())) return false;
    const auto& e = h.edges[static_cast<std::size_t>(m[i])];
    if (e.left != static_cast<int>(i) || right_used[static_cast<std::size_t>(e.right)]) return false;
    right_used[static_cast<std::size_t>(e.right)] = 1;
  }
  return true;
}

}  // namespace orc
