#pragma once

#include <cstdint>
#include <vector>

#include "orc/graph.hpp"

namespace orc {

/// Binary linear code of length <= 32. Codewords are bit masks; bit i is coordinate i.
/// The basis is kept in reduced row echelon form keyed by leading bit.
class BinaryCode {
 public:
  BinaryCode(int length, const std::vector<std::uint32_t>& generators);

  int length() const { return length_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::uint32_t>& basis() const { return basis_; }

  /// All 2^dimension codewords, indexed by message bits over the basis.
  std::vector<std::uint32_t> codewords() const;
  /// Reduces v modulo the code; equal results iff same coset.
  std::uint32_t reduce(std::uint32_t v) const;
  bool contains(std::uint32_t v) const { return reduce(v) == 0; }
  /// Exhaustive minimum nonzero weight; 0 for the zero code.
  int minimum_distance() const;

 private:
  int length_;
  std::vector<std::uint32_t> basis_;
  std::vector<int> pivots_;
};

/// Cyclic code of the given length generated by `generator` (bit i = coefficient of x^i).
BinaryCode cyclic_code(int length, std::uint32_t generator);

/// Generator polynomial x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1 of the binary Golay code.
inline constexpr std::uint32_t kGolayGenerator = 0b110001110101;

/// The [23,12,7] binary Golay code. Throws ConstructionError unless the enumerated minimum
/// distance is 7.
BinaryCode golay_code();

/// Drops coordinate `pos` from every codeword.
BinaryCode puncture(const BinaryCode& code, int pos);
/// Keeps the codewords vanishing at `pos`, then drops that coordinate.
BinaryCode shorten(const BinaryCode& code, int pos);
/// Keeps the codewords with equal entries at i < j, then drops both coordinates.
BinaryCode merge_coordinates(const BinaryCode& code, int i, int j);

/// Vertices: the 2^(n-dim) cosets of the code; two cosets adjacent when they differ by a
/// weight-1 word. A coset is numbered by its reduced representative's non-pivot bits.
Graph coset_graph(const BinaryCode& code);

}  // namespace orc
