#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tropsym/poly.hpp"
#include "tropsym/rational.hpp"

namespace tropsym {

/// The affine function x -> constant + <linear, x>.
struct AffineForm {
  Rational constant;
  std::vector<Rational> linear;

  Rational evaluate(std::span<const Rational> x) const;
};

/// Finds a rational point where every form is strictly positive, or returns
/// nullopt when none exists. Decided exactly by LP: maximize t <= 1 subject
/// to g_k(x) >= t. The returned point is re-checked exactly.
std::optional<Point> strictFeasiblePoint(std::span<const AffineForm> forms, std::size_t dim);

struct EssentialityCertificate {
  std::size_t monomialIndex = 0;
  bool essential = false;
  /// Point where the monomial is the strict unique minimizer.
  std::optional<Point> witness;
};

/// Decides whether monomial j of p is the strict unique minimizer somewhere.
EssentialityCertificate isEssential(const Poly& p, std::size_t j);

/// The essential monomials of p: the canonical form, unique per function.
Poly minimalRepresentation(const Poly& p);

struct EquivResult {
  bool equivalent = false;
  /// When not equivalent, a point where the two sides evaluate differently.
  std::optional<Point> witness;
};

EquivResult polyEquiv(const Poly& p, const Poly& q);

/// r = s iff r.num (.) s.den = s.num (.) r.den as functions on R^n.
EquivResult rationalEquiv(const TropRational& r, const TropRational& s);

/// Reduces numerator and denominator to canonical form separately.
TropRational canonicalize(const TropRational& r);

}  // namespace tropsym
