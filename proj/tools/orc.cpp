#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "orc/errors.hpp"
#include "orc/report.hpp"

namespace {

struct OutputFlags {
  bool json = false;
  bool csv = false;
  bool no_timestamp = false;
};

void add_output_flags(CLI::App* cmd, OutputFlags& flags) {
  cmd->add_flag("--json", flags.json, "Print the JSON report");
  cmd->add_flag("--csv", flags.csv, "Print the bound table as CSV");
  cmd->add_flag("--no-timestamp", flags.no_timestamp, "Omit the timestamp field");
}

int emit(const orc::Report& report, const OutputFlags& flags) {
  if (flags.json) {
    std::cout << report.body.dump(2) << '\n';
  } else if (flags.csv) {
    std::cout << orc::bounds_csv(report.body);
  } else {
    std::cout << orc::render_text(report.body);
  }
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Ollivier Ricci curvature, intersection arrays and diameter bounds"};
  app.require_subcommand(1);

  OutputFlags flags;
  std::string input;
  std::string prefix_text;
  std::string scope = "all";
  bool sample = false;
  std::optional<int> q;
  std::optional<int> p;

  auto* analyze = app.add_subcommand("analyze", "Detect structure, scan all bounds, compare with the diameter");
  analyze->add_option("input", input, "Catalog spec (e.g. hypercube:4) or edge-list path")->required();
  analyze->add_option("--q", q, "Restrict the bound table to this q");
  analyze->add_option("--p", p, "Restrict the bound table to this p");
  add_output_flags(analyze, flags);

  auto* bounds = app.add_subcommand("bounds", "Evaluate the bounds on a (partial) intersection array");
  bounds->add_option("prefix", prefix_text, "Array prefix, e.g. \"{22,21,20,3; 1,2,3,20}\"")->required();
  bounds->add_option("--q", q, "Evaluate only this q");
  bounds->add_option("--p", p, "Evaluate only this p");
  add_output_flags(bounds, flags);

  auto* verify = app.add_subcommand("verify", "Check the Wasserstein estimates and constructive plans");
  verify->add_option("input", input, "Catalog spec or edge-list path")->required();
  verify->add_option("--scope", scope, "jump, scale, plans or all")->check(CLI::IsMember({"jump", "scale", "plans", "all"}));
  verify->add_flag("--sample", sample, "Use vertex 0 as the only source (vertex-transitive catalog graphs)");
  add_output_flags(verify, flags);

  auto* catalog = app.add_subcommand("catalog", "List the catalog with detected and expected arrays");
  add_output_flags(catalog, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return orc::kExitInputError;
  }

  try {
    const bool timestamp = !flags.no_timestamp;
    if (*analyze) {
      return emit(orc::analyze_report(orc::resolve_input(input), {timestamp, q, p}), flags);
    }
    if (*bounds) {
      return emit(orc::bounds_report(orc::parse_prefix(prefix_text), {timestamp, q, p}), flags);
    }
    if (*verify) {
      orc::VerifyOptions options{orc::parse_scope(scope), sample, timestamp};
      return emit(orc::verify_report(orc::resolve_input(input), options), flags);
    }
    return emit(orc::catalog_report(timestamp), flags);
  } catch (const orc::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return orc::kExitInputError;
  } catch (const orc::TheoremContradiction& e) {
    std::cerr << "contradiction: " << e.what() << '\n';
    return orc::kExitContradiction;
  } catch (const orc::DomainError& e) {
    std::cerr << "not applicable: " << e.what() << '\n';
    return orc::kExitFindings;
  } catch (const orc::ConstructionError& e) {
    std::cerr << "construction failed: " << e.what() << '\n';
    return orc::kExitContradiction;
  }
}
