#pragma once

#include <string>
#include <vector>

#include "orc/errors.hpp"
#include "orc/graph.hpp"

namespace orc {

/// Origin class of a gadget edge.
enum class EdgeTag { E1, E2, E3, E4, E5 };

std::string to_string(EdgeTag tag);

/// A gadget side vertex: a graph vertex, or a copy z' of one.
struct GadgetVertex {
  Vertex vertex = 0;
  bool copy = false;
};

struct TaggedEdge {
  int left = 0;
  int right = 0;
  EdgeTag tag = EdgeTag::E1;
};

/// Bipartite multigraph with explicit parallel edges. `degree` is the regularity the
/// builder certified (or the caller asserts).
struct TaggedBipartiteMultigraph {
  std::vector<GadgetVertex> left;
  std::vector<GadgetVertex> right;
  std::vector<TaggedEdge> edges;
  int degree = 0;

  std::vector<int> left_degrees() const;
  std::vector<int> right_degrees() const;
  int count(EdgeTag tag) const;
};

/// Perfect matching as edge indices into the multigraph, one per left vertex
/// (entry i is the edge covering left vertex i).
using Matching = std::vector<int>;

/// Raised by konig_decompose on a non-regular input.
class NotRegularError : public DomainError {
 public:
  NotRegularError(bool left_side, int index, int degree, int expected);
  bool left_side;
  int index;
  int degree;
  int expected;
};

/// Splits an r-regular bipartite multigraph into r edge-disjoint perfect matchings by
/// repeatedly extracting one with augmenting paths. Deterministic: lowest edge index first.
std::vector<Matching> konig_decompose(const TaggedBipartiteMultigraph& h);

/// Ok iff `m` is a perfect matching of h.
bool is_perfect_matching(const TaggedBipartiteMultigraph& h, const Matching& m);

}  // namespace orc
