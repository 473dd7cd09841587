#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropsym/canon.hpp"
#include "tropsym/poly.hpp"
#include "tropsym/sym.hpp"

namespace tropsym {

/// Row (x[i,1] exponent, x[i,2] exponent) of a block exponent matrix.
using BlockRow = std::array<std::int64_t, 2>;
using BlockRows = std::vector<BlockRow>;

/// Flat index of x[i,j] (1-based i and j) among the 2n variables.
inline std::size_t blockIndex(std::size_t i, std::size_t j) { return 2 * (i - 1) + (j - 1); }

/// A row-permutation orbit of nonzero {0,1} n x 2 matrices, stored as its
/// sorted row multiset.
class OrbitRep {
 public:
  /// Rows must be {0,1} pairs, not all zero. They are sorted on entry.
  explicit OrbitRep(BlockRows rows);

  /// Parses "[(1,0)(1,1)]", "[(0,1)^3]" etc. Rows may come in any order;
  /// (0,0) rows may be written or omitted (padded up to n).
  static OrbitRep parse(std::string_view label, std::size_t n);

  std::size_t n() const { return rows_.size(); }
  const BlockRows& rows() const { return rows_; }
  /// Number of rows equal to (a, b).
  std::size_t count(int a, int b) const;

  /// Nonzero rows in increasing order (0,1) < (1,0) < (1,1), with ^k for
  /// repeats: "[(1,0)(1,1)]", "[(0,1)^2]".
  std::string label() const;

  friend auto operator<=>(const OrbitRep&, const OrbitRep&) = default;

 private:
  BlockRows rows_;
};

/// All C(n+3,3) - 1 orbits. Throws kResourceCap above n = 8.
std::vector<OrbitRep> enumerateOrbits(std::size_t n);

/// (+) of P(E) over the distinct row arrangements E of the orbit, over 2n
/// variables.
Poly elementary2(const OrbitRep& orbit);

/// (+) over all block permutations of p (nVars = 2n). Throws kResourceCap
/// when n exceeds the factorial cap.
Poly symmetrize2(const Poly& p, const SymLimits& limits = SymLimits::fromEnvironment());

/// coeff (.) prod x[i,j]^rows[i][j] with nonnegative exponents.
struct BlockMonomial {
  Rational coeff;
  BlockRows rows;

  std::size_t n() const { return rows.size(); }
  std::int64_t degree() const;
  /// Number of nonzero entries.
  std::size_t spread() const;
  Monomial toMonomial() const;
  static BlockMonomial fromMonomial(const Monomial& m);
};

/// <0 when a <_S b, 0 when equal, >0 when a >_S b. Higher degree ranks
/// higher, then smaller spread, then the lexicographically larger tuple
/// (j11, j12, j21, j22, ...).
int compareS(const BlockMonomial& a, const BlockMonomial& b);

/// Sym2 of a single monomial with nonnegative exponents.
Poly symmetrize2(const BlockMonomial& m, const SymLimits& limits = SymLimits::fromEnvironment());

/// Rational expression over 2-symmetric generators.
class Gen2Expr {
 public:
  enum class Kind { kConst, kGen, kAdd, kMul, kInv };

  static Gen2Expr constant(std::size_t n, const Rational& c);
  /// e_orbit^exponent; a negative exponent means the inverse power.
  static Gen2Expr generator(const OrbitRep& orbit, std::int64_t exponent);
  static Gen2Expr add(std::vector<Gen2Expr> terms);
  static Gen2Expr mul(std::vector<Gen2Expr> factors);
  static Gen2Expr inv(Gen2Expr child);

  Kind kind() const { return kind_; }
  std::size_t n() const { return n_; }
  const Rational& value() const { return value_; }
  const std::optional<OrbitRep>& orbit() const { return orbit_; }
  std::int64_t exponent() const { return exponent_; }
  const std::vector<Gen2Expr>& children() const { return children_; }

  /// Number of nodes.
  std::size_t size() const;

 private:
  Kind kind_ = Kind::kConst;
  std::size_t n_ = 0;
  Rational value_;
  std::optional<OrbitRep> orbit_;
  std::int64_t exponent_ = 0;
  std::vector<Gen2Expr> children_;
};

/// Substitutes the generators, reducing to canonical form at each node.
TropRational expand(const Gen2Expr& g);
/// Exact value at a point of R^{2n}.
Rational evaluate(const Gen2Expr& g, std::span<const Rational> x);
std::string toString(const Gen2Expr& g);

/// The correction terms of one inductive step on m: e = Sym2(P(supp m)),
/// a = smallest positive entry, m' = m - a*supp(m).
struct InductiveStep {
  BlockMonomial monomial;
  OrbitRep support;
  std::int64_t a = 0;
  BlockMonomial shifted;
  /// Orbit representatives of rho(a*E) + pi(m') over pairs with
  /// pi(supp m') not inside rho(E): one per row-permutation orbit.
  std::vector<BlockMonomial> corrections;
  /// Remaining non-m-orbit products (pi(supp m') inside rho(E)).
  std::vector<BlockMonomial> residual;
  /// Every correction has Deg = Deg(m) and spread >= spread(m) + 1.
  bool descentInvariant = false;
};

InductiveStep inductiveStep(const BlockMonomial& m);

struct Decompose2Stats {
  std::size_t recursiveCalls = 0;
  std::size_t maxDepth = 0;
  /// Every recursive argument was strictly <_S its caller.
  bool strictDescent = true;
  std::size_t inductiveSteps = 0;
  std::size_t coverSteps = 0;
};

struct Decompose2Options {
  /// Largest exponent allowed in any intermediate matrix.
  std::int64_t maxDegree = 64;
  std::size_t maxCoverRounds = 40;
  SymLimits limits = SymLimits::fromEnvironment();
};

/// Writes Sym2(m) as a rational expression in the elementary 2-symmetric
/// polynomials. Every Gen2Expr returned has been certified equivalent to
/// Sym2(m) by exact canonical-form comparison. Throws kDecompositionFailed
/// when no certified expression is found (possible for n >= 3).
Gen2Expr decompose2Symmetric(const BlockMonomial& m, const Decompose2Options& options = {},
                             Decompose2Stats* stats = nullptr);

/// r = Sym2(p) (.) Sym2(q)^-1, decomposed termwise.
Gen2Expr decompose2SymmetricRational(const TropRational& r, const Decompose2Options& options = {},
                                     Decompose2Stats* stats = nullptr);

/// Multiset of (birth, death) intervals, i.e. a point of R^{2n} up to row
/// permutation.
struct Barcode {
  std::vector<std::pair<Rational, Rational>> intervals;

  Point toPoint() const;
};

/// Value of every elementary 2-symmetric polynomial at the barcode, keyed by
/// orbit.
std::map<OrbitRep, Rational> orbitFingerprint2(const Barcode& barcode);

struct NonGenerationWitness {
  std::int64_t d = 0;
  struct Entry {
    std::int64_t a = 0;
    /// (x11, x12, x21, x22)
    Point point;
    /// min{(d-a)(x11 - x21), a(x21 - x11) + x22 - x12} at the point, > 0.
    Rational minValue;
    /// x11^a x12 x21^(d-a) and x11^d x12 (+) x21^d x22 at the point.
    Rational crossTerm;
    Rational polynomial;
  };
  std::vector<Entry> entries;
  /// Both monomials of x11^d x12 (+) x21^d x22 are essential.
  std::array<EssentialityCertificate, 2> essential;
  bool minimal = false;
};

NonGenerationWitness nonGenerationWitness(std::int64_t d);

}  // namespace tropsym
