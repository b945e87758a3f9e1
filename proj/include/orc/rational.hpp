#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace boost {

/// Under C++20 rewritten comparisons, boost's own rational == integer overloads select each
/// other and recurse forever. Non-template overloads win overload resolution outright.
#define ORC_RATIONAL_INT_EQ(T)                                                      \
  constexpr bool operator==(const rational<std::int64_t>& r, T i) {                \
    return r.denominator() == 1 && r.numerator() == static_cast<std::int64_t>(i); \
  }
ORC_RATIONAL_INT_EQ(int)
ORC_RATIONAL_INT_EQ(long)
ORC_RATIONAL_INT_EQ(long long)
ORC_RATIONAL_INT_EQ(unsigned)
#undef ORC_RATIONAL_INT_EQ

}  // namespace boost

namespace orc {

/// Exact rational scalar. Always normalized: positive denominator, coprime parts.
using Rational = boost::rational<std::int64_t>;

/// Floor of a / b, rounding toward negative infinity. b must be nonzero.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

/// Ceiling of a / b, rounding toward positive infinity. b must be nonzero.
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

std::int64_t floor(const Rational& r);
std::int64_t ceil(const Rational& r);

/// "7" for integers, "-3/2" otherwise.
std::string to_string(const Rational& r);

/// Accepts "3", "-3", "3/4". Throws InputError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

}  // namespace orc
