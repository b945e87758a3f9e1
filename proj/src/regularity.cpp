#include "orc/regularity.hpp"

#include <algorithm>
#include <sstream>

#include "orc/errors.hpp"

namespace orc {

int IntersectionArray::b_at(int i) const {
  if (i < 0 || i > diameter()) throw DomainError("b_" + std::to_string(i) + " out of range");
  return i == diameter() ? 0 : b[static_cast<std::size_t>(i)];
}

int IntersectionArray::c_at(int i) const {
  if (i < 0 || i > diameter()) throw DomainError("c_" + std::to_string(i) + " out of range");
  return i == 0 ? 0 : c[static_cast<std::size_t>(i - 1)];
}

int IntersectionArray::a_at(int i) const { return valency() - b_at(i) - c_at(i); }

long long IntersectionArray::shell_size(int i) const {
  long long size = 1;
  for (int j = 1; j <= i; ++j) size = size * b_at(j - 1) / c_at(j);
  return size;
}

long long IntersectionArray::vertex_count() const {
  long long total = 0;
  for (int i = 0; i <= diameter(); ++i) total += shell_size(i);
  return total;
}

std::string to_string(const IntersectionArray& arr) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < arr.b.size(); ++i) out << (i ? "," : "") << arr.b[i];
  out << ';';
  for (std::size_t i = 0; i < arr.c.size(); ++i) out << (i ? "," : "") << arr.c[i];
  out << '}';
  return out.str();
}

ArrayPrefix ArrayPrefix::known(const std::vector<int>& b, const std::vector<int>& c) {
  ArrayPrefix p;
  p.b.assign(b.begin(), b.end());
  p.c.assign(c.begin(), c.end());
  return p;
}

ArrayPrefix ArrayPrefix::from(const IntersectionArray& arr) {
  ArrayPrefix p = known(arr.b, arr.c);
  p.b.emplace_back(0);
  return p;
}

std::optional<int> ArrayPrefix::b_at(int i) const {
  if (i < 0 || i >= static_cast<int>(b.size())) return std::nullopt;
  return b[static_cast<std::size_t>(i)];
}

std::optional<int> ArrayPrefix::c_at(int i) const {
  if (i == 0) return 0;
  if (i < 0 || i > static_cast<int>(c.size())) return std::nullopt;
  return c[static_cast<std::size_t>(i - 1)];
}

std::optional<int> ArrayPrefix::a_at(int i) const {
  auto k = valency();
  auto bi = b_at(i);
  auto ci = c_at(i);
  if (!k || !bi || !ci) return std::nullopt;
  return *k - *bi - *ci;
}

int ArrayPrefix::known_depth() const {
  int depth = 0;
  while (c_at(depth + 1)) ++depth;
  return depth;
}

std::vector<Violation> validate_intersection_array(const ArrayPrefix& prefix) {
  std::vector<Violation> out;
  auto add = [&](std::string rule, int index, std::string message) {
    out.push_back({std::move(rule), index, std::move(message)});
  };
  const auto k = prefix.valency();
  const int nb = static_cast<int>(prefix.b.size());
  const int nc = static_cast<int>(prefix.c.size());

  for (int i = 0; i < nb; ++i) {
    if (auto bi = prefix.b_at(i); bi && *bi < 0) add("nonnegative", i, "b_" + std::to_string(i) + " < 0");
  }
  for (int i = 1; i <= nc; ++i) {
    if (auto ci = prefix.c_at(i); ci && *ci < 0) add("nonnegative", i, "c_" + std::to_string(i) + " < 0");
  }

  // Consecutive known entries only, so one out-of-order value yields one violation.
  std::optional<int> prev;
  for (int j = 0; j < nb; ++j) {
    auto bj = prefix.b_at(j);
    if (!bj) continue;
    if (prev) {
      int bi = *prefix.b_at(*prev);
      if (*prev == 0 && !(bi > *bj)) {
        add("b_decreasing", j, "b_" + std::to_string(j) + " = " + std::to_string(*bj) +
                                   " is not below b_0 = " + std::to_string(bi));
      } else if (*prev > 0 && bi < *bj) {
        add("b_decreasing", j, "b_" + std::to_string(j) + " = " + std::to_string(*bj) + " > b_" +
                                   std::to_string(*prev) + " = " + std::to_string(bi));
      }
    }
    prev = j;
  }

  if (auto c1 = prefix.c_at(1); c1 && *c1 != 1) {
    add("c1_is_one", 1, "c_1 = " + std::to_string(*c1) + ", expected 1");
  }
  prev.reset();
  for (int j = 1; j <= nc; ++j) {
    auto cj = prefix.c_at(j);
    if (!cj) continue;
    if (prev) {
      int ci = *prefix.c_at(*prev);
      if (*cj < ci) {
        add("c_increasing", j, "c_" + std::to_string(j) + " = " + std::to_string(*cj) + " < c_" +
                                   std::to_string(*prev) + " = " + std::to_string(ci));
      }
    }
    if (k && *cj > *k) {
      add("c_le_k", j, "c_" + std::to_string(j) + " = " + std::to_string(*cj) + " exceeds k = " +
                           std::to_string(*k));
    }
    prev = j;
  }

  for (int i = 0; i <= std::max(nb, nc); ++i) {
    if (auto ai = prefix.a_at(i); ai && *ai < 0) {
      add("a_nonnegative", i, "a_" + std::to_string(i) + " = " + std::to_string(*ai) + " < 0");
    }
  }
  return out;
}

std::vector<Violation> validate_intersection_array(const IntersectionArray& arr) {
  if (arr.b.empty() || arr.b.size() != arr.c.size()) {
    return {{"shape", 0,
             "array needs d >= 1 b-entries and d c-entries (got " + std::to_string(arr.b.size()) +
                 " and " + std::to_string(arr.c.size()) + ")"}};
  }
  return validate_intersection_array(ArrayPrefix::from(arr));
}

std::string RegularityWitness::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::CountMismatch:
      out << quantity << " differs at distance " << h << ": pair (" << ref_x << "," << ref_y
          << ") gives " << expected << ", pair (" << x << "," << y << ") gives " << observed;
      break;
    case Kind::NoPairAtDistance:
      out << "no pair at distance " << h << " (needed for " << quantity << ")";
      break;
    case Kind::ValencyStructure:
      out << quantity << ": vertex " << ref_x << " has valency " << expected << ", vertex " << x
          << " has valency " << observed;
      break;
    case Kind::ParameterRange:
      out << quantity << " = " << observed << " outside the admissible range";
      break;
  }
  return out.str();
}

int common_neighbors(const Graph& g, Vertex u, Vertex v) {
  auto nu = g.neighbors(u);
  auto nv = g.neighbors(v);
  int count = 0;
  auto i = nu.begin();
  auto j = nv.begin();
  while (i != nu.end() && j != nv.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

namespace {

void require_connected(const Graph& g, const char* op) {
  if (!is_connected(g)) throw DomainError(std::string(op) + ": graph is disconnected");
}

/// Tracks the first value seen for a quantity at each distance.
class ConstancyTracker {
 public:
  ConstancyTracker(std::string quantity) : quantity_(std::move(quantity)) {}

  /// Returns a witness on the first disagreement.
  std::optional<RegularityWitness> observe(int h, Vertex x, Vertex y, int value) {
    if (static_cast<std::size_t>(h) >= seen_.size()) seen_.resize(static_cast<std::size_t>(h) + 1);
    auto& slot = seen_[static_cast<std::size_t>(h)];
    if (!slot) {
      slot = Ref{x, y, value};
      return std::nullopt;
    }
    if (slot->value == value) return std::nullopt;
    RegularityWitness w;
    w.kind = RegularityWitness::Kind::CountMismatch;
    w.quantity = quantity_ + "_" + std::to_string(h);
    w.h = h;
    w.ref_x = slot->x;
    w.ref_y = slot->y;
    w.expected = slot->value;
    w.x = x;
    w.y = y;
    w.observed = value;
    return w;
  }

  std::optional<int> value(int h) const {
    if (static_cast<std::size_t>(h) >= seen_.size() || !seen_[static_cast<std::size_t>(h)]) {
      return std::nullopt;
    }
    return seen_[static_cast<std::size_t>(h)]->value;
  }

 private:
  struct Ref {
    Vertex x;
    Vertex y;
    int value;
  };
  std::string quantity_;
  std::vector<std::optional<Ref>> seen_;
};

RegularityWitness no_pair(int h, std::string quantity) {
  RegularityWitness w;
  w.kind = RegularityWitness::Kind::NoPairAtDistance;
  w.h = h;
  w.quantity = std::move(quantity);
  return w;
}

RegularityWitness valency_witness(std::string what, Vertex ref, int ref_deg, Vertex v, int deg) {
  RegularityWitness w;
  w.kind = RegularityWitness::Kind::ValencyStructure;
  w.quantity = std::move(what);
  w.ref_x = w.ref_y = ref;
  w.expected = ref_deg;
  w.x = w.y = v;
  w.observed = deg;
  return w;
}

std::optional<RegularityWitness> regularity_witness(const Graph& g) {
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != g.degree(0)) return valency_witness("valency", 0, g.degree(0), v, g.degree(v));
  }
  return std::nullopt;
}

}  // namespace

Detection<IntersectionArray> intersection_array(const Graph& g) {
  if (g.vertex_count() < 2) throw DomainError("intersection_array: graph needs at least two vertices");
  require_connected(g, "intersection_array");
  g.materialize_distances();

  ConstancyTracker b_track("b");
  ConstancyTracker c_track("c");
  int d = 0;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    const auto& row = g.distances_from(x);
    for (Vertex y = 0; y < g.vertex_count(); ++y) {
      int h = row[static_cast<std::size_t>(y)];
      d = std::max(d, h);
      int b = 0;
      int c = 0;
      for (Vertex w : g.neighbors(y)) {
        int dw = row[static_cast<std::size_t>(w)];
        b += (dw == h + 1);
        c += (dw == h - 1);
      }
      if (auto w = b_track.observe(h, x, y, b)) return *w;
      if (auto w = c_track.observe(h, x, y, c)) return *w;
    }
  }

  IntersectionArray arr;
  for (int i = 0; i < d; ++i) arr.b.push_back(*b_track.value(i));
  for (int i = 1; i <= d; ++i) arr.c.push_back(*c_track.value(i));
  return arr;
}

Detection<AmplyParams> amply_parameters(const Graph& g) {
  require_connected(g, "amply_parameters");
  if (auto w = regularity_witness(g)) return *w;

  ConstancyTracker track("common_neighbors");
  bool any_adjacent = false;
  bool any_distance_two = false;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    const auto& row = g.distances_from(x);
    for (Vertex y = 0; y < g.vertex_count(); ++y) {
      int h = row[static_cast<std::size_t>(y)];
      if (h != 1 && h != 2) continue;
      (h == 1 ? any_adjacent : any_distance_two) = true;
      if (auto w = track.observe(h, x, y, common_neighbors(g, x, y))) {
        w->quantity = h == 1 ? "lambda" : "mu";
        return *w;
      }
    }
  }
  if (!any_adjacent) return no_pair(1, "lambda");
  if (!any_distance_two) return no_pair(2, "mu");
  return AmplyParams{g.vertex_count(), g.degree(0), *track.value(1), *track.value(2)};
}

Detection<ScakParams> scak_parameters(const Graph& g) {
  require_connected(g, "scak_parameters");
  auto gir = girth(g);
  if (!gir) throw DomainError("scak_parameters: graph has no cycle (infinite girth)");

  ScakParams params;
  params.s = (*gir + 1) / 2;
  const int s = params.s;

  ConstancyTracker c_track("c");
  ConstancyTracker a_track("a");
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    const auto& row = g.distances_from(x);
    for (Vertex y = 0; y < g.vertex_count(); ++y) {
      int h = row[static_cast<std::size_t>(y)];
      if (h != s && h != s - 1) continue;
      auto profile = local_profile(g, x, y);
      if (h == s) {
        if (auto w = c_track.observe(h, x, y, profile.c())) return *w;
      } else {
        if (auto w = a_track.observe(h, x, y, profile.a())) return *w;
        if (g.degree(x) != g.degree(y)) {
          return valency_witness("valency at distance s-1", x, g.degree(x), y, g.degree(y));
        }
      }
    }
  }
  auto c = c_track.value(s);
  auto a = a_track.value(s - 1);
  if (!c) return no_pair(s, "c");
  if (!a) return no_pair(s - 1, "a");
  params.c = *c;
  params.a = *a;

  params.k = 0;
  params.min_valency = g.degree(0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    params.k = std::max(params.k, g.degree(v));
    params.min_valency = std::min(params.min_valency, g.degree(v));
  }

  auto out_of_range = [](std::string what, int value) {
    RegularityWitness w;
    w.kind = RegularityWitness::Kind::ParameterRange;
    w.quantity = std::move(what);
    w.observed = value;
    return w;
  };
  if (params.c < 2) return out_of_range("c", params.c);
  if (params.k < 2) return out_of_range("k", params.k);

  params.regular = is_regular(g);
  if (!params.regular) {
    auto sides = bipartition(g);
    if (!sides) {
      Vertex v = 1;
      while (g.degree(v) == g.degree(0)) ++v;
      return valency_witness("neither regular nor bipartite", 0, g.degree(0), v, g.degree(v));
    }
    std::optional<Vertex> rep[2];
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      auto& r = rep[(*sides)[static_cast<std::size_t>(v)]];
      if (!r) {
        r = v;
      } else if (g.degree(*r) != g.degree(v)) {
        return valency_witness("valency within a color class", *r, g.degree(*r), v, g.degree(v));
      }
    }
    params.side_valencies = std::pair{g.degree(*rep[0]), g.degree(*rep[1])};
  }
  return params;
}

}  // namespace orc
