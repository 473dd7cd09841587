#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropsym/canon.hpp"
#include "tropsym/poly.hpp"

namespace tropsym {

/// Caps on permutation-group enumeration.
struct SymLimits {
  std::size_t factorialCap = 8;

  /// Default limits, with factorialCap overridden by TROPSYM_FACTORIAL_CAP
  /// when that variable holds a positive integer.
  static SymLimits fromEnvironment();
};

/// (+) over all variable permutations of p. Throws kResourceCap when
/// nVars exceeds the factorial cap.
Poly symmetrize(const Poly& p, const SymLimits& limits = SymLimits::fromEnvironment());

/// e_k in n variables: (+) of the (.)-products over all k-subsets.
Poly elementary(std::size_t k, std::size_t n);

struct SymmetryCheck {
  bool symmetric = true;
  /// First adjacent transposition (i, i+1) that changes the function, and a
  /// point where it does.
  std::optional<std::pair<std::size_t, std::size_t>> transposition;
  std::optional<Point> witness;
};

SymmetryCheck checkSymmetric(const Poly& p);
SymmetryCheck checkSymmetric(const TropRational& r);
inline bool isSymmetric(const Poly& p) { return checkSymmetric(p).symmetric; }

/// coeff (.) e_1^g1 (.) ... (.) e_n^gn.
struct GeneratorTerm {
  Rational coeff;
  Exponents eExps;

  friend bool operator==(const GeneratorTerm&, const GeneratorTerm&) = default;
};

/// A tropical polynomial in e_1..e_n and e_n^-1.
struct GeneratorExpr {
  std::size_t n = 0;
  std::vector<GeneratorTerm> terms;

  friend bool operator==(const GeneratorExpr&, const GeneratorExpr&) = default;
};

/// Substitutes the elementary polynomials and expands.
Poly expand(const GeneratorExpr& g);

/// Rewrites a symmetric polynomial in the elementary generators. The input
/// is first reduced to its canonical form, and the output has one term per
/// orbit of canonical monomials.
GeneratorExpr decomposeSymmetric(const Poly& p);

/// r = Sym(num) (.) Sym(den)^-1, each side decomposed.
std::pair<GeneratorExpr, GeneratorExpr> decomposeSymmetricRational(
    const TropRational& r, const SymLimits& limits = SymLimits::fromEnvironment());

/// For each term of g, a point where deleting that term changes the
/// expanded function, or nullopt if the term is redundant.
std::vector<std::optional<Point>> termDeletionWitnesses(const GeneratorExpr& g);

/// (e_1(x), ..., e_n(x)), i.e. the prefix sums of the sorted coordinates.
std::vector<Rational> orbitFingerprint(std::span<const Rational> x);

/// "e1^2 ⊙ e2" style rendering; terms joined by " ⊕ ".
std::string toString(const GeneratorExpr& g);

}  // namespace tropsym
