#pragma once

#include <compare>
#include <optional>
#include <string>

#include "tropsym/rational.hpp"

namespace tropsym {

/// An element of the min-plus semiring: an exact rational or the additive
/// identity INF (+infinity).
class TropScalar {
 public:
  /// Finite zero, the multiplicative identity.
  TropScalar() : value_(Rational(0)) {}
  TropScalar(const Rational& value) : value_(value) {}  // NOLINT(implicit)

  static TropScalar inf() { return TropScalar(std::nullopt); }

  bool isInf() const { return !value_.has_value(); }
  bool isFinite() const { return value_.has_value(); }

  /// Requires isFinite().
  const Rational& value() const;

  friend bool operator==(const TropScalar& a, const TropScalar& b) {
    return a.value_ == b.value_;
  }
  /// Ordinary order on R with INF as the top element.
  friend std::strong_ordering operator<=>(const TropScalar& a, const TropScalar& b);

 private:
  explicit TropScalar(std::nullopt_t) : value_(std::nullopt) {}
  std::optional<Rational> value_;
};

/// a (+) b = min(a, b).
TropScalar tropAdd(const TropScalar& a, const TropScalar& b);
/// a (.) b = a + b, INF absorbing.
TropScalar tropMul(const TropScalar& a, const TropScalar& b);
/// a^-1 = -a. Throws Error(kInfInverse) for INF.
TropScalar tropInv(const TropScalar& a);
/// a^k for integer k; negative k requires finite a.
TropScalar tropPow(const TropScalar& a, long k);

std::string toString(const TropScalar& a);

}  // namespace tropsym
