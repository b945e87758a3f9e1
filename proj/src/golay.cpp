#include "orc/golay.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "orc/errors.hpp"

namespace orc {

BinaryCode::BinaryCode(int length, const std::vector<std::uint32_t>& generators) : length_(length) {
  if (length < 1 || length > 32) throw InputError("code length must lie in 1..32");
  const std::uint32_t mask = length == 32 ? ~0u : ((1u << length) - 1);
  for (std::uint32_t g : generators) {
    if (g & ~mask) throw InputError("generator has bits beyond the code length");
    std::uint32_t v = reduce(g);
    if (v == 0) continue;
    int lead = std::bit_width(v) - 1;
    for (auto& b : basis_) {
      if (b >> lead & 1u) b ^= v;
    }
    auto at = std::lower_bound(pivots_.begin(), pivots_.end(), lead, std::greater<>());
    auto offset = at - pivots_.begin();
    pivots_.insert(at, lead);
    basis_.insert(basis_.begin() + offset, v);
  }
}

std::uint32_t BinaryCode::reduce(std::uint32_t v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (v >> pivots_[i] & 1u) v ^= basis_[i];
  }
  return v;
}

std::vector<std::uint32_t> BinaryCode::codewords() const {
  std::vector<std::uint32_t> out(std::size_t{1} << basis_.size());
  for (std::size_t m = 0; m < out.size(); ++m) {
    std::uint32_t w = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (m >> i & 1u) w ^= basis_[i];
    }
    out[m] = w;
  }
  return out;
}

int BinaryCode::minimum_distance() const {
  int best = 0;
  for (std::uint32_t w : codewords()) {
    if (w == 0) continue;
    int weight = std::popcount(w);
    if (best == 0 || weight < best) best = weight;
  }
  return best;
}

BinaryCode cyclic_code(int length, std::uint32_t generator) {
  if (generator == 0) throw InputError("zero generator polynomial");
  int degree = std::bit_width(generator) - 1;
  if (degree >= length) throw InputError("generator degree must be below the length");
  std::vector<std::uint32_t> rows;
  for (int shift = 0; shift < length - degree; ++shift) rows.push_back(generator << shift);
  return BinaryCode(length, rows);
}

BinaryCode golay_code() {
  BinaryCode code = cyclic_code(23, kGolayGenerator);
  if (code.dimension() != 12) throw ConstructionError("Golay code has dimension " + std::to_string(code.dimension()));
  if (int d = code.minimum_distance(); d != 7) {
    throw ConstructionError("Golay code has minimum distance " + std::to_string(d) + ", expected 7");
  }
  return code;
}

namespace {

std::uint32_t drop_bit(std::uint32_t w, int pos) {
  std::uint32_t low = w & ((1u << pos) - 1);
  std::uint32_t high = pos + 1 >= 32 ? 0 : w >> (pos + 1);
  return low | (high << pos);
}

void require_coordinate(const BinaryCode& code, int pos) {
  if (pos < 0 || pos >= code.length()) throw InputError("coordinate " + std::to_string(pos) + " out of range");
  if (code.length() < 2) throw InputError("cannot drop the only coordinate");
}

/// Basis of the subcode annihilated by the functional w -> parity(w & probe).
std::vector<std::uint32_t> kernel_of(const BinaryCode& code, std::uint32_t probe) {
  std::vector<std::uint32_t> rows;
  std::uint32_t odd = 0;
  for (std::uint32_t b : code.basis()) {
    if (std::popcount(b & probe) % 2 == 0) {
      rows.push_back(b);
    } else if (odd == 0) {
      odd = b;
    } else {
      rows.push_back(b ^ odd);
    }
  }
  return rows;
}

}  // namespace

BinaryCode puncture(const BinaryCode& code, int pos) {
  require_coordinate(code, pos);
  std::vector<std::uint32_t> rows;
  for (std::uint32_t b : code.basis()) rows.push_back(drop_bit(b, pos));
  return BinaryCode(code.length() - 1, rows);
}

BinaryCode shorten(const BinaryCode& code, int pos) {
  require_coordinate(code, pos);
  std::vector<std::uint32_t> rows;
  for (std::uint32_t b : kernel_of(code, 1u << pos)) rows.push_back(drop_bit(b, pos));
  return BinaryCode(code.length() - 1, rows);
}

BinaryCode merge_coordinates(const BinaryCode& code, int i, int j) {
  require_coordinate(code, i);
  require_coordinate(code, j);
  if (i >= j) throw InputError("merge_coordinates needs i < j");
  if (code.length() < 3) throw InputError("code too short to drop two coordinates");
  std::vector<std::uint32_t> rows;
  for (std::uint32_t b : kernel_of(code, (1u << i) | (1u << j))) rows.push_back(drop_bit(drop_bit(b, j), i));
  return BinaryCode(code.length() - 2, rows);
}

Graph coset_graph(const BinaryCode& code) {
  const int n = code.length();
  const int redundancy = n - code.dimension();
  if (redundancy > 24) throw InputError("coset graph too large");

  std::vector<int> free_bits;
  {
    std::uint32_t pivot_mask = 0;
    for (std::uint32_t b : code.basis()) pivot_mask |= 1u << (std::bit_width(b) - 1);
    for (int i = 0; i < n; ++i) {
      if (!(pivot_mask >> i & 1u)) free_bits.push_back(i);
    }
  }
  auto index_of = [&](std::uint32_t reduced) {
    int id = 0;
    for (std::size_t t = 0; t < free_bits.size(); ++t) {
      if (reduced >> free_bits[t] & 1u) id |= 1 << t;
    }
    return id;
  };
  std::vector<std::uint32_t> unit_reduced(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) unit_reduced[static_cast<std::size_t>(i)] = code.reduce(1u << i);

  const int vertices = 1 << redundancy;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(vertices) * static_cast<std::size_t>(n) / 2);
  for (int v = 0; v < vertices; ++v) {
    std::uint32_t rep = 0;
    for (std::size_t t = 0; t < free_bits.size(); ++t) {
      if (v >> t & 1) rep |= 1u << free_bits[t];
    }
    for (std::uint32_t u : unit_reduced) {
      if (u == 0) continue;
      int w = index_of(rep ^ u);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return build_graph(vertices, edges);
}

}  // namespace orc
