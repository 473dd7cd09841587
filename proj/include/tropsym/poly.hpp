#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tropsym/rational.hpp"
#include "tropsym/scalar.hpp"

namespace tropsym {

/// Integer exponent vector of a Laurent monomial.
using Exponents = std::vector<std::int64_t>;

/// coeff (.) x1^e1 (.) ... (.) xn^en, i.e. the affine map x -> coeff + <e, x>.
struct Monomial {
  Rational coeff;
  Exponents exps;

  std::int64_t totalDegree() const;
  Rational evaluate(std::span<const Rational> x) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.coeff == b.coeff && a.exps == b.exps;
  }
};

/// A tropical polynomial expression: a finite nonempty (+)-sum of monomials.
///
/// Always held dedup-normalized: monomials sorted lexicographically by
/// exponent vector, pairwise distinct exponents, each carrying the minimum
/// coefficient among the duplicates it replaced. Dedup never changes the
/// function.
class Poly {
 public:
  Poly(std::size_t nVars, std::vector<Monomial> monomials);

  static Poly constant(std::size_t nVars, const Rational& c);
  static Poly monomial(std::size_t nVars, const Rational& c, Exponents exps);
  static Poly variable(std::size_t nVars, std::size_t index);

  std::size_t nVars() const { return nVars_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }

  /// Maximum total degree over the monomials.
  std::int64_t degree() const;
  /// Smallest exponent of any variable in any monomial.
  std::int64_t minExponent() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nVars_ == b.nVars_ && a.monomials_ == b.monomials_;
  }

 private:
  std::size_t nVars_;
  std::vector<Monomial> monomials_;
};

Poly polyAdd(const Poly& p, const Poly& q);
Poly polyMul(const Poly& p, const Poly& q);
/// p^k for k >= 0 by repeated (.); p^0 is the constant 0.
Poly polyPow(const Poly& p, std::int64_t k);
/// k-th power via (a (+) b)^k = a^k (+) b^k: each monomial is raised to k.
/// Equal to polyPow as a function, with no cross terms.
Poly frobeniusPow(const Poly& p, std::int64_t k);
/// c (.) x^exps (.) p.
Poly mulMonomial(const Poly& p, const Rational& c, const Exponents& exps);
/// Adds c to every coefficient.
Poly scale(const Poly& p, const Rational& c);

/// Returns q with q(x1..xn) = p(x_perm[0], ..., x_perm[n-1]), i.e. the
/// variable i of p is renamed to perm[i].
Poly permuteVariables(const Poly& p, std::span<const std::size_t> perm);

/// Exact evaluation at a finite point.
Rational evalPoly(const Poly& p, std::span<const Rational> x);
/// Evaluation with INF inputs allowed for variables that only carry
/// nonnegative exponents.
TropScalar evalPoly(const Poly& p, std::span<const TropScalar> x);

/// p (.) q^-1 with q an R-tropical expression (finite coefficients).
struct TropRational {
  Poly num;
  Poly den;

  TropRational(Poly numerator, Poly denominator);
  static TropRational fromPoly(const Poly& p);

  std::size_t nVars() const { return num.nVars(); }
  Rational evaluate(std::span<const Rational> x) const;
};

TropRational ratMul(const TropRational& r, const TropRational& s);
/// Common-denominator sum: (p1 q2 (+) p2 q1) / (q1 q2).
TropRational ratAdd(const TropRational& r, const TropRational& s);
TropRational ratInv(const TropRational& r);

/// Factors joined by (.); with block set, variable 2(i-1)+(j-1) prints as x[i,j].
std::string toString(const Monomial& m, bool block = false);
std::string toString(const Poly& p, bool block = false);
std::string toString(const TropRational& r, bool block = false);

/// Overflow-checked exponent arithmetic.
std::int64_t checkedAdd(std::int64_t a, std::int64_t b);
std::int64_t checkedMul(std::int64_t a, std::int64_t b);

}  // namespace tropsym
