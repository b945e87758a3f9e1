#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "orc/graph.hpp"

namespace orc {

/// {b_0,...,b_{d-1}; c_1,...,c_d} of a distance-regular graph.
/// Index helpers apply the conventions c_0 = b_d = 0 and a_i = k - b_i - c_i.
struct IntersectionArray {
  std::vector<int> b;
  std::vector<int> c;

  int diameter() const noexcept { return static_cast<int>(c.size()); }
  int valency() const { return b.at(0); }
  /// Valid for 0 <= i <= d.
  int b_at(int i) const;
  int c_at(int i) const;
  int a_at(int i) const;

  /// Number of vertices at distance i from a fixed vertex.
  long long shell_size(int i) const;
  long long vertex_count() const;

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

std::string to_string(const IntersectionArray& arr);

/// Partially known intersection array. b[i] holds b_i, c[i] holds c_{i+1}.
/// Entries past the end, or nullopt, are unknown. c_0 = 0 is always known.
struct ArrayPrefix {
  std::vector<std::optional<int>> b;
  std::vector<std::optional<int>> c;

  static ArrayPrefix known(const std::vector<int>& b, const std::vector<int>& c);
  /// Full array, with b_d = 0 recorded as known.
  static ArrayPrefix from(const IntersectionArray& arr);

  std::optional<int> valency() const { return b_at(0); }
  std::optional<int> b_at(int i) const;
  std::optional<int> c_at(int i) const;
  std::optional<int> a_at(int i) const;
  /// Largest i with c_i known consecutively from 1; a graph with this prefix has d >= it.
  int known_depth() const;
};

struct Violation {
  std::string rule;
  int index = 0;
  std::string message;
};

/// Monotonicity of b and c, c_1 = 1, c_i <= k, a_i >= 0, on known entries.
/// Empty result means the array is consistent.
std::vector<Violation> validate_intersection_array(const IntersectionArray& arr);
std::vector<Violation> validate_intersection_array(const ArrayPrefix& prefix);

struct AmplyParams {
  int v = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;

  friend bool operator==(const AmplyParams&, const AmplyParams&) = default;
};

struct ScakParams {
  int s = 0;
  int c = 0;
  int a = 0;
  int k = 0;
  int min_valency = 0;
  bool regular = true;
  /// Valencies of the two color classes when the graph is bipartite and not regular.
  std::optional<std::pair<int, int>> side_valencies;
};

/// Concrete evidence that a regularity property fails. For count mismatches,
/// (ref_x, ref_y) and (x, y) are two pairs at the same distance whose counts differ.
struct RegularityWitness {
  enum class Kind { CountMismatch, NoPairAtDistance, ValencyStructure, ParameterRange };

  Kind kind = Kind::CountMismatch;
  std::string quantity;
  int h = 0;
  Vertex ref_x = 0;
  Vertex ref_y = 0;
  int expected = 0;
  Vertex x = 0;
  Vertex y = 0;
  int observed = 0;

  std::string describe() const;
};

template <class T>
using Detection = std::variant<T, RegularityWitness>;

/// Exhaustive scan over all ordered pairs. Throws DomainError for disconnected or
/// single-vertex graphs.
Detection<IntersectionArray> intersection_array(const Graph& g);

/// Regular with constant common-neighbor counts on adjacent and on distance-2 pairs.
Detection<AmplyParams> amply_parameters(const Graph& g);

/// Girth-derived s, constant |C_s| and |A_{s-1}|, and the regular-or-bipartite valency
/// structure. Throws DomainError on forests.
Detection<ScakParams> scak_parameters(const Graph& g);

/// Number of common neighbors of u and v.
int common_neighbors(const Graph& g, Vertex u, Vertex v);

}  // namespace orc
