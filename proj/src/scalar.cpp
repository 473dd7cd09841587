#include "tropsym/scalar.hpp"

#include "tropsym/error.hpp"

namespace tropsym {

const Rational& TropScalar::value() const {
  if (!value_) throw Error(ErrorCode::kInvalidArgument, "INF has no finite value");
  return *value_;
}

std::strong_ordering operator<=>(const TropScalar& a, const TropScalar& b) {
  if (a.isInf() || b.isInf()) {
    if (a.isInf() && b.isInf()) return std::strong_ordering::equal;
    return a.isInf() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  int c = cmp(*a.value_, *b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

TropScalar tropAdd(const TropScalar& a, const TropScalar& b) { return b < a ? b : a; }

TropScalar tropMul(const TropScalar& a, const TropScalar& b) {
  if (a.isInf() || b.isInf()) return TropScalar::inf();
  return TropScalar(Rational(a.value() + b.value()));
}

TropScalar tropInv(const TropScalar& a) {
  if (a.isInf()) throw Error(ErrorCode::kInfInverse, "no tropical inverse of INF");
  return TropScalar(Rational(-a.value()));
}

TropScalar tropPow(const TropScalar& a, long k) {
  if (a.isInf()) {
    if (k < 0) throw Error(ErrorCode::kInfInverse, "no tropical inverse of INF");
    return k == 0 ? TropScalar() : TropScalar::inf();
  }
  return TropScalar(Rational(a.value() * k));
}

std::string toString(const TropScalar& a) { return a.isInf() ? "INF" : toString(a.value()); }

}  // namespace tropsym
