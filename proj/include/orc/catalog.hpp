#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orc/graph.hpp"
#include "orc/regularity.hpp"

namespace orc {

/// A named, parameterized graph with what is known about it in advance.
struct CatalogEntry {
  std::string name;
  std::vector<int> params;
  std::optional<IntersectionArray> expected;
  bool vertex_transitive = false;
  std::string provenance;

  /// "name" or "name:p1:p2".
  std::string spec() const;
};

/// Supported family identifiers.
std::vector<std::string> family_names();

/// Deterministic generator. Vertex numbering per family:
///   cycle:n              i ~ i+1 mod n
///   complete:n           all pairs
///   complete_bipartite:m:n  0..m-1 against m..m+n-1
///   hypercube:n          n-bit strings, Hamming distance 1
///   hamming:d:q          base-q words of length d, Hamming distance 1
///   johnson:n:m          m-subsets of {0..n-1} as increasing bit masks, meeting in m-1 points
///   petersen             2-subsets of {0..4} in that order, adjacent when disjoint
///   wells                embedded adjacency data
///   golay_coset_shortened, golay_coset_truncated_shortened   coset graphs (see golay.hpp)
/// Unknown names or invalid parameters throw InputError.
Graph generate(std::string_view name, std::span<const int> params);
/// Accepts "name:p1:p2".
Graph generate(std::string_view spec);

/// Entry for a generator call, with the expected array filled in for the distance-regular
/// families (closed forms for the classical ones, stored data for the named graphs).
CatalogEntry describe(std::string_view spec);

/// The standard instance list used by the verification suites.
std::vector<CatalogEntry> standard_catalog();

/// Coset graph of the Golay code shortened at coordinate 0.
Graph golay_coset_shortened();
/// Coset graph of the Golay words with equal first two entries, both coordinates dropped:
/// valency 21, diameter 6, array {21,20,16,6,2,1;1,2,6,16,20,21}.
Graph golay_coset_truncated_shortened();
/// Golay code shortened at 0, then punctured at its last coordinate. Not distance-regular;
/// kept to document that this order does not produce the graph above.
Graph golay_coset_shorten_then_puncture();

/// First non-comment line: vertex count n. Other lines: "u v" with 0 <= u, v < n, u != v.
/// '#' starts a comment running to the end of the line; blank lines are ignored. Errors throw ParseError.
Graph load_edge_list(std::string_view text);
/// Canonical text: n, then one "u v" line per edge with u < v, lexicographic.
std::string save_edge_list(const Graph& g);
Graph read_edge_list_file(const std::string& path);

}  // namespace orc
