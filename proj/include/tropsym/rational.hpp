#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tropsym {

/// Exact rational number (always kept in lowest terms).
using Rational = mpq_class;

/// "p/q" in lowest terms, or "p" when integral.
std::string toString(const Rational& value);

/// Parses "p", "-p" or "p/q". Throws Error(kInvalidArgument) on malformed text
/// or a zero denominator.
Rational parseRational(std::string_view text);

inline Rational fromInt(std::int64_t value) { return Rational(static_cast<long>(value)); }

using Point = std::vector<Rational>;

}  // namespace tropsym
