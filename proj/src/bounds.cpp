#include "orc/bounds.hpp"

#include <algorithm>

#include "orc/errors.hpp"

namespace orc {

namespace {

std::string idx(const char* name, int i) { return std::string(name) + "_" + std::to_string(i); }

/// Collects hypotheses and missing-entry notes while a bound is evaluated.
class Gate {
 public:
  explicit Gate(BoundResult& result) : result_(result) {}

  bool require(std::string condition, bool held) {
    result_.hypotheses.push_back({std::move(condition), held});
    ok_ = ok_ && held;
    return held;
  }

  /// Records an unknown entry as a failed hypothesis.
  std::optional<int> known(std::optional<int> value, const std::string& name) {
    if (!value) require(name + " known", false);
    return value;
  }

  bool ok() const noexcept { return ok_; }

 private:
  BoundResult& result_;
  bool ok_ = true;
};

/// Shared hypothesis block: a_{q-1} = 0, c_{q+1} > c_q, c_{q+1} >= a_q. Returns M when all hold.
std::optional<std::int64_t> curvature_gate(Gate& gate, int a_qm1, int a_q, int c_q, int c_q1) {
  bool ok = gate.require("a_{q-1} = 0", a_qm1 == 0);
  ok = gate.require("c_{q+1} > c_q", c_q1 > c_q) && ok;
  ok = gate.require("c_{q+1} >= a_q", c_q1 >= a_q) && ok;
  if (!ok) return std::nullopt;
  return big_m(a_q, c_q, c_q1);
}

/// b_p, falling back to the worst case k - c_p allowed by a_p >= 0.
std::optional<int> b_or_worst_case(const ArrayPrefix& prefix, int p, BoundResult& result) {
  if (auto bp = prefix.b_at(p)) return bp;
  auto k = prefix.valency();
  auto cp = prefix.c_at(p);
  if (!k || !cp) return std::nullopt;
  int worst = *k - *cp;
  result.notes.push_back("b_" + std::to_string(p) + " unknown, used k - c_" + std::to_string(p) +
                         " = " + std::to_string(worst));
  return worst;
}

struct CurvatureInputs {
  int a_qm1;
  int a_q;
  int c_q;
  int c_q1;
};

/// Reads the entries every curvature bound needs; q <= d-1 is certified by c_{q+1} being known.
std::optional<CurvatureInputs> read_curvature_inputs(Gate& gate, const ArrayPrefix& prefix, int q) {
  if (!gate.require("q >= 1", q >= 1)) return std::nullopt;
  auto c_q1 = gate.known(prefix.c_at(q + 1), idx("c", q + 1));
  auto c_q = gate.known(prefix.c_at(q), idx("c", q));
  auto a_qm1 = gate.known(prefix.a_at(q - 1), idx("a", q - 1));
  auto a_q = gate.known(prefix.a_at(q), idx("a", q));
  if (!c_q1 || !c_q || !a_qm1 || !a_q) return std::nullopt;
  return CurvatureInputs{*a_qm1, *a_q, *c_q, *c_q1};
}

}  // namespace

std::optional<std::int64_t> big_m(std::int64_t a_q, std::int64_t c_q, std::int64_t c_q1) {
  if (!(c_q1 > c_q) || !(c_q1 >= a_q) || a_q < 0) return std::nullopt;
  return ceil_div(a_q * (c_q1 - a_q), c_q1 - c_q);
}

BoundResult remainder_bound(const ArrayPrefix& prefix, int q, int p) {
  BoundResult result;
  result.name = "remainder";
  result.q = q;
  result.p = p;
  Gate gate(result);
  auto inputs = read_curvature_inputs(gate, prefix, q);
  gate.require("p >= 0", p >= 0);
  auto c_p = gate.known(prefix.c_at(p), idx("c", p));
  if (!inputs || !c_p || !gate.ok()) return result;
  auto m = curvature_gate(gate, inputs->a_qm1, inputs->a_q, inputs->c_q, inputs->c_q1);
  if (!m) return result;
  result.big_m = m;

  auto b_p = b_or_worst_case(prefix, p, result);
  if (!gate.known(b_p, idx("b", p))) return result;

  const std::int64_t denom = 2 * std::int64_t{inputs->c_q} + *m;
  std::optional<std::int64_t> best;
  for (int r = 0; r <= q - 1; ++r) {
    auto b_r = gate.known(prefix.b_at(r), idx("b", r));
    auto c_r = gate.known(prefix.c_at(r), idx("c", r));
    if (!b_r || !c_r) {
      result.r.reset();
      return result;
    }
    std::int64_t num = std::int64_t{*b_p} - *c_p + *b_r - *c_r;
    std::int64_t value = floor_div(num, denom) * q + p + r;
    if (!best || value > *best) {
      best = value;
      result.r = r;
    }
  }
  result.value = best;
  return result;
}

BoundResult two_jump_bound(int a_qm1, int a_q, int c_q, int c_q1, int b_p, int c_p, int p, int q) {
  BoundResult result;
  result.name = "two_jump";
  result.q = q;
  result.p = p;
  Gate gate(result);
  gate.require("q >= 1", q >= 1);
  gate.require("p >= 0", p >= 0);
  auto m = curvature_gate(gate, a_qm1, a_q, c_q, c_q1);
  if (!m || !gate.ok()) return result;
  result.big_m = m;
  const std::int64_t denom = 2 * std::int64_t{c_q} + *m;
  std::int64_t jumps = (floor_div(2 * (std::int64_t{b_p} - c_p), denom) + 1) * q;
  result.value = 2 * std::int64_t{p} - 1 + std::max<std::int64_t>(0, jumps);
  return result;
}

BoundResult two_jump_bound(const ArrayPrefix& prefix, int q, int p) {
  BoundResult missing;
  missing.name = "two_jump";
  missing.q = q;
  missing.p = p;
  Gate gate(missing);
  auto inputs = read_curvature_inputs(gate, prefix, q);
  gate.require("p >= 0", p >= 0);
  auto c_p = gate.known(prefix.c_at(p), idx("c", p));
  if (!inputs || !c_p || !gate.ok()) return missing;
  auto b_p = b_or_worst_case(prefix, p, missing);
  if (!gate.known(b_p, idx("b", p))) return missing;
  auto result = two_jump_bound(inputs->a_qm1, inputs->a_q, inputs->c_q, inputs->c_q1, *b_p, *c_p, p, q);
  result.notes = missing.notes;
  if (auto k = prefix.valency(); k && result.applicable()) {
    result.c1 = Rational(2 * std::int64_t{inputs->c_q} + *result.big_m, *k + 1);
    result.c2 = Rational(std::int64_t{*b_p} - *c_p, *k + 1);
  }
  return result;
}

BoundResult np_bound(const ArrayPrefix& prefix, int q) {
  BoundResult result;
  result.name = "np";
  result.q = q;
  Gate gate(result);
  auto k = gate.known(prefix.valency(), "k");
  gate.require("q >= 2", q >= 2);
  auto c_q1 = gate.known(prefix.c_at(q + 1), idx("c", q + 1));
  auto c_q = gate.known(prefix.c_at(q), idx("c", q));
  auto a_q = gate.known(prefix.a_at(q), idx("a", q));
  if (!k || !c_q1 || !c_q || !a_q || !gate.ok()) return result;
  gate.require("k >= 3", *k >= 3);
  gate.require("c_{q+1} > c_q", *c_q1 > *c_q);
  gate.require("a_q <= c_{q+1} - c_q", *a_q <= *c_q1 - *c_q);
  if (!gate.ok()) return result;
  result.value = (floor_div(std::int64_t{*k} - *c_q1 - 1, *c_q) + 2) * q + 1;
  return result;
}

std::vector<BoundResult> amply_bounds(int k, int lambda, int mu) {
  std::vector<BoundResult> out(3);
  auto& curv = out[0];
  curv.name = "amply_curvature";
  curv.conditional = true;
  curv.notes.push_back("asserted for diameter d >= 4");
  {
    Gate gate(curv);
    gate.require("mu >= 1", mu >= 1);
    gate.require("mu != 1", mu != 1);
    gate.require("mu >= lambda", mu >= lambda);
    if (gate.ok()) {
      std::int64_t m = ceil_div(std::int64_t{lambda} * (mu - lambda), mu - 1);
      curv.big_m = m;
      curv.value = floor_div(2 * (std::int64_t{k} - 2 * mu), 2 + m) + 4;
    }
  }

  auto classic = [&](BoundResult& r, const char* name) {
    r.name = name;
    r.conditional = true;
    r.notes.push_back("asserted for diameter d >= 4");
    Gate gate(r);
    gate.require("mu > lambda", mu > lambda);
    gate.require("mu != 1", mu != 1);
    return gate.ok();
  };
  if (classic(out[1], "bcn")) out[1].value = std::int64_t{k} - 2 * mu + 4;
  if (classic(out[2], "hlx")) {
    out[2].value = floor_div(2 * std::int64_t{k}, 3);
    out[2].notes.push_back("formula as quoted; hypercubes Q_n with n >= 4 satisfy its hypotheses and exceed it");
  }
  return out;
}

std::vector<BoundResult> scak_bounds(int s, int c, int a, int min_valency, int k) {
  std::vector<BoundResult> out(2);
  auto& curv = out[0];
  curv.name = "scak_curvature";
  {
    Gate gate(curv);
    gate.require("s >= 2", s >= 2);
    gate.require("c >= 2", c >= 2);
    gate.require("a <= c", a <= c);
    if (gate.ok()) {
      std::int64_t m = ceil_div(std::int64_t{a} * (c - a), c - 1);
      curv.big_m = m;
      std::int64_t tail =
          std::int64_t{s - 1} * (floor_div(2 * (std::int64_t{min_valency} - 2 * c), 2 + m) + 3) + 2;
      curv.value = std::max<std::int64_t>(2 * s, tail);
    }
  }

  auto& ter = out[1];
  ter.name = "terwilliger";
  {
    Gate gate(ter);
    gate.require("s >= 2", s >= 2);
    gate.require("a <= c", a <= c);
    gate.require("c > 2", c > 2);
    if (gate.ok()) {
      Rational inner = Rational(2 * std::int64_t{c} * k - 2 * std::int64_t{c}, 3 * std::int64_t{c} - 2) -
                       2 * std::int64_t{c} + 5;
      Rational rhs = std::max(Rational(3 * s - 1), Rational(s - 1) * inner + 2);
      ter.exact = rhs;
      ter.value = floor(rhs);
    }
  }
  return out;
}

std::int64_t generic_diameter_bound(int p, int q, const Rational& c1, const Rational& c2) {
  if (!(c1 > 0)) throw DomainError("generic_diameter_bound: C1 must be positive");
  if (q <= 0 || p < 0) throw DomainError("generic_diameter_bound: need q > 0 and p >= 0");
  std::int64_t jumps = (floor(2 * c2 / c1) + 1) * q;
  return 2 * std::int64_t{p} - 1 + std::max<std::int64_t>(0, jumps);
}

namespace {

void consider(BoundScan& scan, BoundResult cell) {
  if (cell.applicable() && (!scan.best || *cell.value < *scan.best->value)) scan.best = cell;
  scan.cells.push_back(std::move(cell));
}

BoundScan scan_prefix(const ArrayPrefix& prefix, int max_p) {
  BoundScan scan;
  // q is admissible while c_{q+1} is known, i.e. q <= d-1 is certified.
  for (int q = 1; prefix.c_at(q + 1); ++q) {
    consider(scan, np_bound(prefix, q));
    for (int p = 0; p <= max_p; ++p) {
      consider(scan, remainder_bound(prefix, q, p));
      consider(scan, two_jump_bound(prefix, q, p));
    }
  }
  scan.status = scan.best ? BoundScan::Status::Ok : BoundScan::Status::NothingApplicable;
  return scan;
}

}  // namespace

BoundScan best_bound(const ArrayPrefix& prefix) { return scan_prefix(prefix, prefix.known_depth()); }

BoundScan best_bound(const IntersectionArray& arr) {
  auto scan = scan_prefix(ArrayPrefix::from(arr), arr.diameter());
  scan.array = arr;
  return scan;
}

BoundScan best_bound(const Graph& g) {
  BoundScan scan;
  auto detected = intersection_array(g);
  scan.true_diameter = diameter(g);
  if (auto* w = std::get_if<RegularityWitness>(&detected)) {
    scan.status = BoundScan::Status::NotDistanceRegular;
    scan.witness = *w;
    return scan;
  }
  auto diam = scan.true_diameter;
  scan = best_bound(std::get<IntersectionArray>(detected));
  scan.true_diameter = diam;
  if (scan.best) scan.tight = (*scan.best->value == *diam);
  return scan;
}

}  // namespace orc
