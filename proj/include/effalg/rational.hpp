#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace effalg {

/// Exact rational scalar used throughout the library. No floating point is
/// ever involved in state or polytope computations.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical lowest-terms text: "0", "1", "-3/7".
std::string to_string(const Rational& value);

std::string to_string(const RationalVector& values);

/// Least common multiple of the denominators (1 for an empty vector).
std::int64_t denominator_lcm(const RationalVector& values);

} // namespace effalg
