#include "tropsym/poly.hpp"

#include <algorithm>
#include <sstream>

#include "tropsym/error.hpp"

namespace tropsym {

std::int64_t checkedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::kResourceCap, "exponent overflow");
  }
  return r;
}

std::int64_t checkedMul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::kResourceCap, "exponent overflow");
  }
  return r;
}

std::int64_t Monomial::totalDegree() const {
  std::int64_t d = 0;
  for (auto e : exps) d = checkedAdd(d, e);
  return d;
}

Rational Monomial::evaluate(std::span<const Rational> x) const {
  Rational v = coeff;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] != 0) v += x[i] * exps[i];
  }
  return v;
}

namespace {

void requireSameVars(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::kDimensionMismatch,
                "dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

Poly::Poly(std::size_t nVars, std::vector<Monomial> monomials)
    : nVars_(nVars), monomials_(std::move(monomials)) {
  if (nVars_ == 0) throw Error(ErrorCode::kInvalidArgument, "polynomial needs at least one variable");
  if (monomials_.empty()) throw Error(ErrorCode::kInvalidArgument, "polynomial needs at least one monomial");
  for (const auto& m : monomials_) requireSameVars(m.exps.size(), nVars_);
  std::sort(monomials_.begin(), monomials_.end(), [](const Monomial& a, const Monomial& b) {
    if (a.exps != b.exps) return a.exps < b.exps;
    return a.coeff < b.coeff;
  });
  // Sorted by (exps, coeff): the first of every run carries the minimum.
  auto last = std::unique(monomials_.begin(), monomials_.end(),
                          [](const Monomial& a, const Monomial& b) { return a.exps == b.exps; });
  monomials_.erase(last, monomials_.end());
}

Poly Poly::constant(std::size_t nVars, const Rational& c) {
  return Poly(nVars, {Monomial{c, Exponents(nVars, 0)}});
}

Poly Poly::monomial(std::size_t nVars, const Rational& c, Exponents exps) {
  return Poly(nVars, {Monomial{c, std::move(exps)}});
}

Poly Poly::variable(std::size_t nVars, std::size_t index) {
  if (index >= nVars) throw Error(ErrorCode::kUnknownVariable, "variable index out of range");
  Exponents e(nVars, 0);
  e[index] = 1;
  return monomial(nVars, Rational(0), std::move(e));
}

std::int64_t Poly::degree() const {
  std::int64_t d = monomials_.front().totalDegree();
  for (const auto& m : monomials_) d = std::max(d, m.totalDegree());
  return d;
}

std::int64_t Poly::minExponent() const {
  std::int64_t lo = 0;
  bool first = true;
  for (const auto& m : monomials_) {
    for (auto e : m.exps) {
      if (first || e < lo) lo = e;
      first = false;
    }
  }
  return lo;
}

Poly polyAdd(const Poly& p, const Poly& q) {
  requireSameVars(p.nVars(), q.nVars());
  std::vector<Monomial> all = p.monomials();
  all.insert(all.end(), q.monomials().begin(), q.monomials().end());
  return Poly(p.nVars(), std::move(all));
}

Poly polyMul(const Poly& p, const Poly& q) {
  requireSameVars(p.nVars(), q.nVars());
  std::vector<Monomial> out;
  out.reserve(p.size() * q.size());
  for (const auto& a : p.monomials()) {
    for (const auto& b : q.monomials()) {
      Exponents e(p.nVars());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = checkedAdd(a.exps[i], b.exps[i]);
      out.push_back(Monomial{a.coeff + b.coeff, std::move(e)});
    }
  }
  return Poly(p.nVars(), std::move(out));
}

Poly polyPow(const Poly& p, std::int64_t k) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative power of a polynomial");
  Poly result = Poly::constant(p.nVars(), Rational(0));
  Poly base = p;
  while (k > 0) {
    if (k & 1) result = polyMul(result, base);
    k >>= 1;
    if (k > 0) base = polyMul(base, base);
  }
  return result;
}

Poly frobeniusPow(const Poly& p, std::int64_t k) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative power of a polynomial");
  if (k == 0) return Poly::constant(p.nVars(), Rational(0));
  std::vector<Monomial> out;
  out.reserve(p.size());
  for (const auto& m : p.monomials()) {
    Monomial r{m.coeff * k, m.exps};
    for (auto& e : r.exps) e = checkedMul(e, k);
    out.push_back(std::move(r));
  }
  return Poly(p.nVars(), std::move(out));
}

Poly mulMonomial(const Poly& p, const Rational& c, const Exponents& exps) {
  requireSameVars(p.nVars(), exps.size());
  std::vector<Monomial> out;
  out.reserve(p.size());
  for (const auto& m : p.monomials()) {
    Exponents e(m.exps.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = checkedAdd(m.exps[i], exps[i]);
    out.push_back(Monomial{m.coeff + c, std::move(e)});
  }
  return Poly(p.nVars(), std::move(out));
}

Poly scale(const Poly& p, const Rational& c) {
  return mulMonomial(p, c, Exponents(p.nVars(), 0));
}

Poly permuteVariables(const Poly& p, std::span<const std::size_t> perm) {
  requireSameVars(p.nVars(), perm.size());
  std::vector<Monomial> out;
  out.reserve(p.size());
  for (const auto& m : p.monomials()) {
    Exponents e(m.exps.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) e[perm[i]] = m.exps[i];
    out.push_back(Monomial{m.coeff, std::move(e)});
  }
  return Poly(p.nVars(), std::move(out));
}

Rational evalPoly(const Poly& p, std::span<const Rational> x) {
  requireSameVars(p.nVars(), x.size());
  Rational best = p[0].evaluate(x);
  for (std::size_t j = 1; j < p.size(); ++j) {
    Rational v = p[j].evaluate(x);
    if (v < best) best = v;
  }
  return best;
}

TropScalar evalPoly(const Poly& p, std::span<const TropScalar> x) {
  requireSameVars(p.nVars(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].isInf()) continue;
    for (const auto& m : p.monomials()) {
      if (m.exps[i] < 0) {
        throw Error(ErrorCode::kNegativeExponentAtInf,
                    "negative exponent of x" + std::to_string(i + 1) + " evaluated at INF");
      }
    }
  }
  TropScalar best = TropScalar::inf();
  for (const auto& m : p.monomials()) {
    TropScalar v(m.coeff);
    for (std::size_t i = 0; i < x.size() && !v.isInf(); ++i) {
      if (m.exps[i] != 0) v = tropMul(v, tropPow(x[i], m.exps[i]));
    }
    best = tropAdd(best, v);
  }
  return best;
}

TropRational::TropRational(Poly numerator, Poly denominator)
    : num(std::move(numerator)), den(std::move(denominator)) {
  requireSameVars(num.nVars(), den.nVars());
}

TropRational TropRational::fromPoly(const Poly& p) {
  return TropRational(p, Poly::constant(p.nVars(), Rational(0)));
}

Rational TropRational::evaluate(std::span<const Rational> x) const {
  return evalPoly(num, x) - evalPoly(den, x);
}

TropRational ratMul(const TropRational& r, const TropRational& s) {
  return TropRational(polyMul(r.num, s.num), polyMul(r.den, s.den));
}

TropRational ratAdd(const TropRational& r, const TropRational& s) {
  return TropRational(polyAdd(polyMul(r.num, s.den), polyMul(s.num, r.den)),
                      polyMul(r.den, s.den));
}

TropRational ratInv(const TropRational& r) { return TropRational(r.den, r.num); }

std::string toString(const Monomial& m, bool block) {
  std::ostringstream out;
  bool any = false;
  if (m.coeff != 0) {
    out << toString(m.coeff);
    any = true;
  }
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (any) out << " ⊙ ";
    if (block) {
      out << "x[" << (i / 2 + 1) << "," << (i % 2 + 1) << "]";
    } else {
      out << "x" << (i + 1);
    }
    if (m.exps[i] != 1) out << "^" << m.exps[i];
    any = true;
  }
  if (!any) out << "0";
  return out.str();
}

std::string toString(const Poly& p, bool block) {
  std::string s;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j) s += " ⊕ ";
    s += toString(p[j], block);
  }
  return s;
}

std::string toString(const TropRational& r, bool block) {
  return "(" + toString(r.num, block) + ") ⊙ (" + toString(r.den, block) + ")^-1";
}

}  // namespace tropsym
