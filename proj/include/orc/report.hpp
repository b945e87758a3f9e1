#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orc/bounds.hpp"
#include "orc/catalog.hpp"
#include "orc/graph.hpp"
#include "orc/regularity.hpp"

namespace orc {

inline constexpr int kReportSchemaVersion = 1;

/// Process exit statuses shared by the CLI and the report builders.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitFindings = 2,
  kExitContradiction = 3,
};

/// A graph together with how it was named on the command line.
struct GraphInput {
  std::string descriptor;
  Graph graph;
  /// Present for catalog names.
  std::optional<CatalogEntry> entry;
};

/// Catalog spec when the name is a known family, otherwise an edge-list path.
GraphInput resolve_input(const std::string& descriptor);

/// Parses "{22,21,20,3; 1,2,3,20}" (braces optional, '?' marks an unknown entry).
/// Throws InputError on malformed text.
ArrayPrefix parse_prefix(const std::string& text);

struct Report {
  nlohmann::json body;
  int exit_code = kExitOk;
};

struct ReportOptions {
  bool timestamp = true;
  std::optional<int> q;
  std::optional<int> p;
};

/// Structural detection, full bound scan, classic bounds and true diameter.
Report analyze_report(const GraphInput& input, const ReportOptions& options = {});

/// Validates the prefix, then evaluates the bounds on the requested or all admissible cells.
Report bounds_report(const ArrayPrefix& prefix, const ReportOptions& options = {});

enum class VerifyScope { Jump, Scale, Plans, All };

VerifyScope parse_scope(const std::string& text);
std::string to_string(VerifyScope scope);

struct VerifyOptions {
  VerifyScope scope = VerifyScope::All;
  /// Restrict sources to vertex 0; requires a vertex-transitive catalog input.
  bool sample = false;
  bool timestamp = true;
};

/// Runs the estimate checks and plan sandwiches over every applicable pair.
/// Exit code 3 on any violated instance, 2 when the scope needs distance-regularity and the
/// input lacks it.
Report verify_report(const GraphInput& input, const VerifyOptions& options = {});

/// Catalog listing with detected arrays checked against the expected ones.
Report catalog_report(bool timestamp = true);

nlohmann::json to_json(const BoundResult& bound);
nlohmann::json to_json(const RegularityWitness& witness);
nlohmann::json to_json(const IntersectionArray& arr);

/// One row per bound cell, header included.
std::string bounds_csv(const nlohmann::json& report);
/// Human-readable summary of any report.
std::string render_text(const nlohmann::json& report);

}  // namespace orc
