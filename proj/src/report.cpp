#include "orc/report.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include "orc/errors.hpp"
#include "orc/plans.hpp"
#include "orc/transport.hpp"

namespace orc {

using nlohmann::json;

namespace {

std::string utc_now() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

json header(const std::string& command, bool timestamp) {
  json r;
  r["schema_version"] = kReportSchemaVersion;
  r["command"] = command;
  if (timestamp) r["timestamp"] = utc_now();
  return r;
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json rational_json(const std::optional<Rational>& v) { return v ? json(to_string(*v)) : json(nullptr); }

std::string kind_name(RegularityWitness::Kind kind) {
  switch (kind) {
    case RegularityWitness::Kind::CountMismatch: return "count_mismatch";
    case RegularityWitness::Kind::NoPairAtDistance: return "no_pair_at_distance";
    case RegularityWitness::Kind::ValencyStructure: return "valency_structure";
    case RegularityWitness::Kind::ParameterRange: return "parameter_range";
  }
  return "?";
}

json input_json(const GraphInput& input) {
  const Graph& g = input.graph;
  json j{{"descriptor", input.descriptor},
         {"vertices", g.vertex_count()},
         {"edges", g.edge_count()},
         {"connected", is_connected(g)}};
  if (input.entry) {
    j["catalog"] = {{"name", input.entry->name},
                    {"params", input.entry->params},
                    {"vertex_transitive", input.entry->vertex_transitive},
                    {"provenance", input.entry->provenance}};
  }
  return j;
}

std::vector<BoundResult> evaluate_cells(const ArrayPrefix& prefix, std::optional<int> q, std::optional<int> p,
                                        int max_p) {
  std::vector<BoundResult> cells;
  std::vector<int> qs;
  if (q) {
    qs.push_back(*q);
  } else {
    for (int t = 1; prefix.c_at(t + 1); ++t) qs.push_back(t);
  }
  for (int qq : qs) {
    cells.push_back(np_bound(prefix, qq));
    for (int pp = p.value_or(0); pp <= (p ? *p : max_p); ++pp) {
      cells.push_back(remainder_bound(prefix, qq, pp));
      cells.push_back(two_jump_bound(prefix, qq, pp));
    }
  }
  return cells;
}

std::optional<BoundResult> smallest(const std::vector<BoundResult>& cells) {
  std::optional<BoundResult> best;
  for (const auto& c : cells) {
    if (c.applicable() && (!best || *c.value < *best->value)) best = c;
  }
  return best;
}

json cells_json(const std::vector<BoundResult>& cells) {
  json out = json::array();
  for (const auto& c : cells) out.push_back(to_json(c));
  return out;
}

json violations_json(const std::vector<Violation>& violations) {
  json out = json::array();
  for (const auto& v : violations) out.push_back({{"rule", v.rule}, {"index", v.index}, {"message", v.message}});
  return out;
}

}  // namespace

json to_json(const IntersectionArray& arr) {
  return {{"b", arr.b}, {"c", arr.c}, {"text", to_string(arr)}, {"diameter", arr.diameter()}};
}

json to_json(const RegularityWitness& w) {
  return {{"kind", kind_name(w.kind)}, {"quantity", w.quantity}, {"h", w.h},
          {"reference_pair", {w.ref_x, w.ref_y}}, {"expected", w.expected},
          {"pair", {w.x, w.y}}, {"observed", w.observed}, {"description", w.describe()}};
}

json to_json(const BoundResult& b) {
  json hyps = json::array();
  for (const auto& h : b.hypotheses) hyps.push_back({{"condition", h.condition}, {"held", h.held}});
  return {{"name", b.name},
          {"applicable", b.applicable()},
          {"value", optional_json(b.value)},
          {"q", optional_json(b.q)},
          {"p", optional_json(b.p)},
          {"r", optional_json(b.r)},
          {"big_m", optional_json(b.big_m)},
          {"c1", rational_json(b.c1)},
          {"c2", rational_json(b.c2)},
          {"exact", rational_json(b.exact)},
          {"conditional", b.conditional},
          {"hypotheses", hyps},
          {"notes", b.notes}};
}

GraphInput resolve_input(const std::string& descriptor) {
  const std::string family = descriptor.substr(0, descriptor.find(':'));
  for (const auto& name : family_names()) {
    if (name == family) return {descriptor, generate(descriptor), describe(descriptor)};
  }
  if (!std::filesystem::exists(descriptor)) {
    throw InputError("'" + descriptor + "' is neither a catalog graph nor a readable edge-list file");
  }
  return {descriptor, read_edge_list_file(descriptor), std::nullopt};
}

ArrayPrefix parse_prefix(const std::string& text) {
  std::string body;
  for (char ch : text) {
    if (ch != '{' && ch != '}' && ch != ' ' && ch != '\t') body += ch;
  }
  const auto semi = body.find(';');
  if (semi == std::string::npos || body.find(';', semi + 1) != std::string::npos) {
    throw InputError("prefix must have the form {b_0,...; c_1,...}");
  }
  auto parse_list = [](const std::string& list) {
    std::vector<std::optional<int>> out;
    if (list.empty()) return out;
    std::stringstream in(list);
    for (std::string item; std::getline(in, item, ',');) {
      if (item == "?") {
        out.emplace_back(std::nullopt);
        continue;
      }
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (item.empty() || used != item.size()) throw InputError("prefix entry '" + item + "' is not an integer");
      out.emplace_back(value);
    }
    return out;
  };
  ArrayPrefix prefix;
  prefix.b = parse_list(body.substr(0, semi));
  prefix.c = parse_list(body.substr(semi + 1));
  if (prefix.b.empty() || !prefix.b.front()) throw InputError("prefix needs a known valency b_0");
  return prefix;
}

Report analyze_report(const GraphInput& input, const ReportOptions& options) {
  const Graph& g = input.graph;
  Report report{header("analyze", options.timestamp), kExitOk};
  json& r = report.body;
  r["input"] = input_json(input);

  json structure;
  if (g.vertex_count() < 2 || !is_connected(g)) {
    structure["distance_regular"] = false;
    structure["note"] = g.vertex_count() < 2 ? "fewer than two vertices" : "graph is disconnected";
    r["structure"] = structure;
    r["bounds"] = {{"cells", json::array()}, {"best", nullptr}};
    r["summary"] = {{"best_bound", nullptr}, {"diameter", nullptr}, {"tight", nullptr}};
    report.exit_code = kExitFindings;
    return report;
  }

  structure["girth"] = optional_json(girth(g));
  structure["bipartite"] = bipartition(g).has_value();
  structure["regular"] = is_regular(g);

  auto scan = best_bound(g);
  structure["distance_regular"] = scan.array.has_value();
  if (scan.array) {
    structure["intersection_array"] = to_json(*scan.array);
    if (input.entry && input.entry->expected) structure["matches_expected"] = (*input.entry->expected == *scan.array);
  } else if (scan.witness) {
    structure["witness"] = to_json(*scan.witness);
  }

  json classic = json::array();
  auto amply = amply_parameters(g);
  if (auto* a = std::get_if<AmplyParams>(&amply)) {
    structure["amply_regular"] = {{"v", a->v}, {"k", a->k}, {"lambda", a->lambda}, {"mu", a->mu}};
    for (const auto& b : amply_bounds(a->k, a->lambda, a->mu)) classic.push_back(to_json(b));
  } else {
    structure["amply_regular"] = {{"witness", to_json(std::get<RegularityWitness>(amply))}};
  }
  try {
    auto scak = scak_parameters(g);
    if (auto* s = std::get_if<ScakParams>(&scak)) {
      structure["scak"] = {{"s", s->s}, {"c", s->c}, {"a", s->a}, {"k", s->k}, {"min_valency", s->min_valency},
                           {"regular", s->regular}};
      for (const auto& b : scak_bounds(s->s, s->c, s->a, s->min_valency, s->k)) classic.push_back(to_json(b));
    } else {
      structure["scak"] = {{"witness", to_json(std::get<RegularityWitness>(scak))}};
    }
  } catch (const DomainError& e) {
    structure["scak"] = {{"note", e.what()}};
  }
  r["structure"] = structure;

  std::vector<BoundResult> cells = scan.cells;
  std::optional<BoundResult> best = scan.best;
  if (scan.array && (options.q || options.p)) {
    cells = evaluate_cells(ArrayPrefix::from(*scan.array), options.q, options.p, scan.array->diameter());
    best = smallest(cells);
  }
  r["bounds"] = {{"cells", cells_json(cells)}, {"best", best ? to_json(*best) : json(nullptr)}, {"classic", classic}};

  auto diam = diameter(g);
  json summary{{"diameter", optional_json(diam)}};
  summary["best_bound"] = best ? json(*best->value) : json(nullptr);
  summary["best_name"] = best ? json(best->name) : json(nullptr);
  summary["tight"] = best && diam ? json(*best->value == *diam) : json(nullptr);
  r["summary"] = summary;

  bool any_classic = false;
  for (const auto& c : classic) any_classic = any_classic || c["applicable"].get<bool>();
  if (!best && !any_classic) report.exit_code = kExitFindings;
  return report;
}

Report bounds_report(const ArrayPrefix& prefix, const ReportOptions& options) {
  Report report{header("bounds", options.timestamp), kExitOk};
  json& r = report.body;
  json b = json::array();
  json c = json::array();
  for (const auto& v : prefix.b) b.push_back(optional_json(v));
  for (const auto& v : prefix.c) c.push_back(optional_json(v));
  r["input"] = {{"b", b}, {"c", c}, {"known_depth", prefix.known_depth()}};

  auto violations = validate_intersection_array(prefix);
  r["validation"] = violations_json(violations);
  if (!violations.empty()) {
    r["bounds"] = {{"cells", json::array()}, {"best", nullptr}};
    report.exit_code = kExitFindings;
    return report;
  }
  auto cells = evaluate_cells(prefix, options.q, options.p, prefix.known_depth());
  auto best = smallest(cells);
  r["bounds"] = {{"cells", cells_json(cells)}, {"best", best ? to_json(*best) : json(nullptr)}};
  r["summary"] = {{"best_bound", best ? json(*best->value) : json(nullptr)},
                  {"best_name", best ? json(best->name) : json(nullptr)}};
  if (!best) report.exit_code = kExitFindings;
  return report;
}

VerifyScope parse_scope(const std::string& text) {
  if (text == "jump") return VerifyScope::Jump;
  if (text == "scale") return VerifyScope::Scale;
  if (text == "plans") return VerifyScope::Plans;
  if (text == "all") return VerifyScope::All;
  throw InputError("unknown scope '" + text + "' (expected jump, scale, plans or all)");
}

std::string to_string(VerifyScope scope) {
  switch (scope) {
    case VerifyScope::Jump: return "jump";
    case VerifyScope::Scale: return "scale";
    case VerifyScope::Plans: return "plans";
    case VerifyScope::All: return "all";
  }
  return "?";
}

Report verify_report(const GraphInput& input, const VerifyOptions& options) {
  const Graph& g = input.graph;
  Report report{header("verify", options.timestamp), kExitOk};
  json& r = report.body;
  r["input"] = input_json(input);
  r["scope"] = to_string(options.scope);
  r["sampled"] = options.sample;

  std::vector<Vertex> sources;
  if (options.sample) {
    if (!input.entry || !input.entry->vertex_transitive) {
      throw InputError("--sample needs a vertex-transitive catalog graph");
    }
    sources = {0};
  } else {
    for (Vertex v = 0; v < g.vertex_count(); ++v) sources.push_back(v);
  }

  const bool do_jump = options.scope == VerifyScope::Jump || options.scope == VerifyScope::All;
  const bool do_scale = options.scope == VerifyScope::Scale || options.scope == VerifyScope::All;
  const bool do_plans = options.scope == VerifyScope::Plans || options.scope == VerifyScope::All;
  int violations = 0;
  json summary;

  if (do_jump) {
    int max_degree = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
    std::vector<Rational> eps_values{Rational(0), Rational(1, max_degree + 1), Rational(1, 2)};
    std::sort(eps_values.begin(), eps_values.end());
    eps_values.erase(std::unique(eps_values.begin(), eps_values.end()), eps_values.end());
    json rows = json::array();
    int checked = 0;
    int failed = 0;
    for (Vertex x : sources) {
      for (Vertex y = 0; y < g.vertex_count(); ++y) {
        if (!is_reachable(g.distance(x, y)) || g.degree(y) == 0) continue;
        for (const auto& eps : eps_values) {
          auto rep = verify_jump_estimate(g, x, y, eps);
          ++checked;
          if (!rep.holds) ++failed;
          rows.push_back({{"x", x}, {"y", y}, {"p", rep.p}, {"eps", to_string(eps)},
                          {"bound", to_string(rep.bound)}, {"exact", to_string(rep.exact)}, {"holds", rep.holds}});
        }
      }
    }
    r["jump"] = rows;
    summary["jump"] = {{"checked", checked}, {"violations", failed}};
    violations += failed;
  }

  if (do_scale || do_plans) {
    std::optional<IntersectionArray> arr;
    if (g.vertex_count() >= 2 && is_connected(g)) {
      auto det = intersection_array(g);
      if (auto* a = std::get_if<IntersectionArray>(&det)) {
        arr = *a;
      } else {
        r["structure"] = {{"distance_regular", false}, {"witness", to_json(std::get<RegularityWitness>(det))}};
      }
    } else {
      r["structure"] = {{"distance_regular", false}, {"note", "graph is disconnected or trivial"}};
    }
    if (!arr) {
      if (report.exit_code == kExitOk) report.exit_code = kExitFindings;
    } else {
      r["structure"] = {{"distance_regular", true}, {"intersection_array", to_json(*arr)}};
      json scale_rows = json::array();
      json plan_rows = json::array();
      int scale_checked = 0;
      int scale_applicable = 0;
      int scale_failed = 0;
      int plans_checked = 0;
      int plans_failed = 0;
      for (Vertex x : sources) {
        for (Vertex y = 0; y < g.vertex_count(); ++y) {
          if (y == x) continue;
          auto rep = verify_scale_estimate(g, *arr, x, y);
          if (do_scale) {
            ++scale_checked;
            json row{{"x", x}, {"y", y}, {"q", rep.q}, {"applicable", rep.applicable}};
            if (rep.applicable) {
              ++scale_applicable;
              if (!rep.holds) ++scale_failed;
              row["big_m"] = rep.big_m;
              row["bound"] = to_string(rep.bound);
              row["exact"] = to_string(rep.exact);
              row["holds"] = rep.holds;
            } else {
              row["unmet"] = rep.unmet;
            }
            scale_rows.push_back(row);
          }
          if (do_plans && rep.applicable) {
            ++plans_checked;
            json row{{"x", x}, {"y", y}, {"q", rep.q}, {"bound", to_string(rep.bound)},
                     {"exact", to_string(rep.exact)}, {"required_special", rep.big_m}};
            try {
              auto plan = constructive_plan(g, *arr, x, y, rep.q);
              bool holds = rep.exact <= plan.cost && plan.cost <= plan.bound && plan.special_edges >= plan.big_m;
              row["plan_cost"] = to_string(plan.cost);
              row["special_edges"] = plan.special_edges;
              row["matching_index"] = plan.matching_index;
              row["holds"] = holds;
              if (!holds) ++plans_failed;
            } catch (const TheoremContradiction& e) {
              row["holds"] = false;
              row["error"] = e.what();
              ++plans_failed;
            }
            plan_rows.push_back(row);
          }
        }
      }
      if (do_scale) {
        r["scale"] = scale_rows;
        summary["scale"] = {{"checked", scale_checked}, {"applicable", scale_applicable}, {"violations", scale_failed}};
        violations += scale_failed;
      }
      if (do_plans) {
        r["plans"] = plan_rows;
        summary["plans"] = {{"checked", plans_checked}, {"violations", plans_failed}};
        violations += plans_failed;
      }
    }
  }
  summary["violations"] = violations;
  r["summary"] = summary;
  if (violations > 0) report.exit_code = kExitContradiction;
  return report;
}

Report catalog_report(bool timestamp) {
  Report report{header("catalog", timestamp), kExitOk};
  json rows = json::array();
  for (const auto& entry : standard_catalog()) {
    Graph g = generate(entry.spec());
    json row{{"spec", entry.spec()},
             {"vertices", g.vertex_count()},
             {"edges", g.edge_count()},
             {"vertex_transitive", entry.vertex_transitive},
             {"provenance", entry.provenance},
             {"expected", entry.expected ? to_json(*entry.expected) : json(nullptr)}};
    auto det = intersection_array(g);
    if (auto* a = std::get_if<IntersectionArray>(&det)) {
      row["detected"] = to_json(*a);
      row["matches"] = entry.expected && *entry.expected == *a;
    } else {
      row["detected"] = nullptr;
      row["witness"] = to_json(std::get<RegularityWitness>(det));
      row["matches"] = !entry.expected.has_value();
    }
    if (!row["matches"].get<bool>()) report.exit_code = kExitContradiction;
    rows.push_back(row);
  }
  report.body["entries"] = rows;
  return report;
}

namespace {

std::string cell_field(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string bounds_csv(const json& report) {
  std::ostringstream out;
  out << "name,q,p,r,applicable,value,big_m,exact,conditional,notes\n";
  if (!report.contains("bounds")) return out.str();
  auto emit = [&](const json& cell) {
    std::string notes;
    for (const auto& n : cell["notes"]) notes += (notes.empty() ? "" : "; ") + n.get<std::string>();
    out << cell["name"].get<std::string>() << ',' << cell_field(cell["q"]) << ',' << cell_field(cell["p"]) << ','
        << cell_field(cell["r"]) << ',' << (cell["applicable"].get<bool>() ? "true" : "false") << ','
        << cell_field(cell["value"]) << ',' << cell_field(cell["big_m"]) << ',' << cell_field(cell["exact"]) << ','
        << (cell["conditional"].get<bool>() ? "true" : "false") << ',' << csv_quote(notes) << '\n';
  };
  for (const auto& cell : report["bounds"]["cells"]) emit(cell);
  if (report["bounds"].contains("classic")) {
    for (const auto& cell : report["bounds"]["classic"]) emit(cell);
  }
  return out.str();
}

namespace {

std::string cell_label(const json& cell) {
  std::string label = cell["name"].get<std::string>();
  std::string args;
  for (const char* key : {"q", "p", "r"}) {
    if (!cell[key].is_null()) args += std::string(args.empty() ? "" : " ") + key + "=" + cell[key].dump();
  }
  return args.empty() ? label : label + "(" + args + ")";
}

void render_cells(std::ostringstream& out, const json& cells, bool only_applicable) {
  for (const auto& cell : cells) {
    if (only_applicable && !cell["applicable"].get<bool>()) continue;
    out << "  " << std::left << std::setw(30) << cell_label(cell) << ' ';
    if (cell["applicable"].get<bool>()) {
      out << cell["value"].dump();
      if (!cell["exact"].is_null()) out << "  (exact " << cell["exact"].get<std::string>() << ")";
      if (cell["conditional"].get<bool>()) out << "  [conditional]";
    } else {
      out << "n/a, unmet:";
      for (const auto& h : cell["hypotheses"]) {
        if (!h["held"].get<bool>()) out << ' ' << h["condition"].get<std::string>() << ';';
      }
    }
    for (const auto& n : cell["notes"]) out << "  note: " << n.get<std::string>();
    out << '\n';
  }
}

}  // namespace

std::string render_text(const json& r) {
  std::ostringstream out;
  const std::string command = r.value("command", "");
  if (r.contains("input") && r["input"].contains("descriptor")) {
    const auto& in = r["input"];
    out << "input: " << in["descriptor"].get<std::string>() << "  (" << in["vertices"] << " vertices, " << in["edges"]
        << " edges)\n";
  }
  if (r.contains("structure")) {
    const auto& s = r["structure"];
    if (s.value("distance_regular", false)) {
      out << "distance-regular: " << s["intersection_array"]["text"].get<std::string>() << '\n';
    } else {
      out << "distance-regular: no";
      if (s.contains("witness")) out << "  (" << s["witness"]["description"].get<std::string>() << ")";
      if (s.contains("note")) out << "  (" << s["note"].get<std::string>() << ")";
      out << '\n';
    }
    if (s.contains("amply_regular") && s["amply_regular"].contains("k")) {
      const auto& a = s["amply_regular"];
      out << "amply regular: (v,k,lambda,mu) = (" << a["v"] << ',' << a["k"] << ',' << a["lambda"] << ',' << a["mu"]
          << ")\n";
    }
    if (s.contains("scak") && s["scak"].contains("s")) {
      const auto& a = s["scak"];
      out << "(s,c,a,k)-graph: (" << a["s"] << ',' << a["c"] << ',' << a["a"] << ',' << a["k"] << ")\n";
    }
  }
  if (command == "bounds") {
    out << "prefix: b = " << r["input"]["b"].dump() << ", c = " << r["input"]["c"].dump() << '\n';
    for (const auto& v : r["validation"]) {
      out << "invalid: " << v["rule"].get<std::string>() << " at " << v["index"] << ": "
          << v["message"].get<std::string>() << '\n';
    }
  }
  if (r.contains("bounds")) {
    const auto& b = r["bounds"];
    out << "bounds:\n";
    render_cells(out, b["cells"], command == "analyze");
    if (b.contains("classic") && !b["classic"].empty()) {
      out << "classic bounds:\n";
      render_cells(out, b["classic"], false);
    }
  }
  if (r.contains("summary") && command != "verify") {
    const auto& s = r["summary"];
    out << "best bound: " << (s["best_bound"].is_null() ? "none" : s["best_bound"].dump());
    if (!s.value("best_name", json(nullptr)).is_null()) out << " (" << s["best_name"].get<std::string>() << ")";
    if (s.contains("diameter")) out << "\ndiameter: " << (s["diameter"].is_null() ? "infinite" : s["diameter"].dump());
    if (s.contains("tight") && !s["tight"].is_null()) out << "\ntight: " << (s["tight"].get<bool>() ? "yes" : "no");
    out << '\n';
  }
  if (command == "verify") {
    const auto& s = r["summary"];
    for (const char* part : {"jump", "scale", "plans"}) {
      if (!s.contains(part)) continue;
      out << part << ": " << s[part]["checked"] << " checked";
      if (s[part].contains("applicable")) out << ", " << s[part]["applicable"] << " applicable";
      out << ", " << s[part]["violations"] << " violations\n";
      if (!r.contains(part)) continue;
      for (const auto& row : r[part]) {
        if (!row.value("holds", true)) out << "  VIOLATION " << row.dump() << '\n';
      }
    }
    out << (s["violations"].get<int>() == 0 ? "all instances hold\n" : "VIOLATIONS FOUND\n");
  }
  if (command == "catalog") {
    for (const auto& e : r["entries"]) {
      out << std::left << std::setw(34) << e["spec"].get<std::string>() << std::setw(6) << e["vertices"].dump() << ' '
          << (e["detected"].is_null() ? std::string("not distance-regular") : e["detected"]["text"].get<std::string>())
          << (e["matches"].get<bool>() ? "" : "  MISMATCH") << '\n';
    }
  }
  return out.str();
}

}  // namespace orc
