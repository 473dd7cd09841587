#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "support.hpp"
#include "tropsym/error.hpp"
#include "tropsym/sym.hpp"

using namespace tropsym;
using namespace tropsym::testing;

namespace {

// Symmetric input: Sym of a random polynomial.
Poly randomSymmetric(Rng& rng, std::size_t n, std::size_t count, std::int64_t lo, std::int64_t hi) {
  return symmetrize(randomPoly(rng, n, count, lo, hi));
}

GeneratorExpr randomGenerators(Rng& rng, std::size_t n, std::size_t count) {
  GeneratorExpr g;
  g.n = n;
  for (std::size_t i = 0; i < count; ++i) {
    Exponents e = randomExponents(rng, n, 0, 2);
    e[n - 1] = std::uniform_int_distribution<std::int64_t>(-2, 2)(rng);
    g.terms.push_back(GeneratorTerm{randomRational(rng, 3, 1), e});
  }
  return g;
}

}  // namespace

TEST(Symmetrize, Examples) {
  EXPECT_EQ(symmetrize(Poly::variable(3, 0)), elementary(1, 3));
  Poly m(2, {Monomial{0, {2, 1}}});
  EXPECT_EQ(symmetrize(m), Poly(2, {Monomial{0, {2, 1}}, Monomial{0, {1, 2}}}));
  Poly sym(3, {Monomial{0, {2, 0, 0}}, Monomial{0, {0, 2, 0}}, Monomial{0, {0, 0, 2}}});
  EXPECT_TRUE(polyEquiv(symmetrize(sym), sym).equivalent);
}

TEST(Symmetrize, FactorialCap) {
  Poly big = Poly::variable(9, 0);
  try {
    symmetrize(big, SymLimits{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResourceCap);
  }
  EXPECT_EQ(symmetrize(big, SymLimits{9}).size(), 9u);
  ::setenv("TROPSYM_FACTORIAL_CAP", "9", 1);
  EXPECT_EQ(SymLimits::fromEnvironment().factorialCap, 9u);
  ::setenv("TROPSYM_FACTORIAL_CAP", "junk", 1);
  EXPECT_EQ(SymLimits::fromEnvironment().factorialCap, 8u);
  ::unsetenv("TROPSYM_FACTORIAL_CAP");
}

TEST(Symmetrize, AdditiveScalarIdempotent) {
  Rng rng(21);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 2 + rng() % 2;
    Poly p = randomPoly(rng, n, 1 + rng() % 3, -2, 2);
    Poly q = randomPoly(rng, n, 1 + rng() % 3, -2, 2);
    Rational a = randomRational(rng);
    EXPECT_EQ(minimalRepresentation(symmetrize(symmetrize(p))), minimalRepresentation(symmetrize(p)));
    EXPECT_TRUE(polyEquiv(symmetrize(polyAdd(p, q)), polyAdd(symmetrize(p), symmetrize(q))).equivalent);
    EXPECT_TRUE(polyEquiv(scale(symmetrize(p), a), symmetrize(scale(p, a))).equivalent);
  }
}

TEST(Symmetrize, MonomialOrbitIsItsOwnCanonicalForm) {
  Rng rng(22);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 1 + rng() % 4;
    Exponents e = randomExponents(rng, n, -3, 3);
    Poly c = minimalRepresentation(symmetrize(Poly(n, {Monomial{0, e}})));
    std::set<Exponents> perms;
    Exponents s = e;
    std::sort(s.begin(), s.end());
    do perms.insert(s);
    while (std::next_permutation(s.begin(), s.end()));
    ASSERT_EQ(c.size(), perms.size());
    for (const auto& m : c.monomials()) EXPECT_TRUE(perms.count(m.exps));
  }
}

TEST(Elementary, Examples) {
  EXPECT_EQ(elementary(2, 3), Poly(3, {Monomial{0, {1, 1, 0}}, Monomial{0, {1, 0, 1}}, Monomial{0, {0, 1, 1}}}));
  EXPECT_EQ(elementary(3, 3), Poly(3, {Monomial{0, {1, 1, 1}}}));
  EXPECT_EQ(evalPoly(elementary(2, 3), Point{1, 2, 3}), 3);
  EXPECT_THROW(elementary(0, 3), Error);
  EXPECT_THROW(elementary(4, 3), Error);
}

TEST(Elementary, SumOfSmallestCoordinates) {
  Rng rng(23);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 1 + rng() % 5;
    Point x = randomPoint(rng, n);
    Point sorted = x;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 1; k <= n; ++k) {
      Rational sum = 0;
      for (std::size_t i = 0; i < k; ++i) sum += sorted[i];
      ASSERT_EQ(evalPoly(elementary(k, n), x), sum);
    }
  }
}

TEST(IsSymmetric, Examples) {
  EXPECT_TRUE(isSymmetric(Poly(3, {Monomial{0, {2, 0, 0}}, Monomial{0, {0, 2, 0}}, Monomial{0, {0, 0, 2}}})));
  EXPECT_TRUE(isSymmetric(Poly(3, {Monomial{0, {1, 1, 1}}})));
  Poly p(2, {Monomial{0, {2, 0}}, Monomial{0, {0, 1}}});
  SymmetryCheck c = checkSymmetric(p);
  EXPECT_FALSE(c.symmetric);
  ASSERT_TRUE(c.witness);
  std::vector<std::size_t> swap{1, 0};
  EXPECT_NE(evalPoly(p, *c.witness), evalPoly(permuteVariables(p, swap), *c.witness));
}

TEST(Decompose, Examples) {
  GeneratorExpr g = decomposeSymmetric(symmetrize(Poly(2, {Monomial{0, {2, 1}}})));
  EXPECT_EQ(g, (GeneratorExpr{2, {GeneratorTerm{0, {1, 1}}}}));

  GeneratorExpr sq = decomposeSymmetric(polyPow(elementary(1, 2), 2));
  EXPECT_EQ(sq, (GeneratorExpr{2, {GeneratorTerm{0, {2, 0}}}}));

  GeneratorExpr inv = decomposeSymmetric(Poly(2, {Monomial{0, {-1, 0}}, Monomial{0, {0, -1}}}));
  EXPECT_EQ(inv, (GeneratorExpr{2, {GeneratorTerm{0, {1, -1}}}}));
  EXPECT_EQ(toString(inv), "e1 ⊙ e2^-1");

  try {
    decomposeSymmetric(Poly(2, {Monomial{0, {2, 0}}, Monomial{0, {0, 1}}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSymmetric);
  }
}

// Independent check of min(2x1 + x2, x1 + 2x2) = (x1 + x2) + min(x1, x2).
TEST(Decompose, CaseSplitOracle) {
  Rng rng(24);
  for (int t = 0; t < 200; ++t) {
    Point x = randomPoint(rng, 2);
    Rational lhs = std::min<Rational>(2 * x[0] + x[1], x[0] + 2 * x[1]);
    Rational rhs = (x[0] + x[1]) + std::min<Rational>(x[0], x[1]);
    ASSERT_EQ(lhs, rhs);
    ASSERT_EQ(evalPoly(expand(GeneratorExpr{2, {GeneratorTerm{0, {1, 1}}}}), x), lhs);
  }
}

TEST(Decompose, PeelingIdentity) {
  Rng rng(25);
  for (int t = 0; t < 80; ++t) {
    std::size_t n = 1 + rng() % 4;
    Exponents e = randomExponents(rng, n, 0, 5);
    std::sort(e.rbegin(), e.rend());
    std::size_t k = 0;
    std::int64_t a = 0;
    for (auto v : e) {
      if (v > 0) {
        ++k;
        a = a == 0 ? v : std::min(a, v);
      }
    }
    if (k == 0) continue;
    Exponents shifted = e;
    for (std::size_t i = 0; i < k; ++i) shifted[i] -= a;
    Poly lhs = polyMul(polyPow(elementary(k, n), a), symmetrize(Poly(n, {Monomial{0, shifted}})));
    EXPECT_TRUE(polyEquiv(lhs, symmetrize(Poly(n, {Monomial{0, e}}))).equivalent);
  }
}

TEST(Decompose, RoundTrip) {
  Rng rng(26);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng() % 4;
    Poly p = randomSymmetric(rng, n, 1 + rng() % 6, -4, 4);
    GeneratorExpr g = decomposeSymmetric(p);
    ASSERT_TRUE(polyEquiv(expand(g), p).equivalent) << toString(p);
    for (const auto& term : g.terms) {
      for (std::size_t k = 0; k + 1 < n; ++k) EXPECT_GE(term.eExps[k], 0);
    }
  }
}

TEST(Decompose, MinimalInputGivesMinimalOutput) {
  Rng rng(27);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 1 + rng() % 4;
    Poly p = minimalRepresentation(randomSymmetric(rng, n, 1 + rng() % 6, -4, 4));
    GeneratorExpr g = decomposeSymmetric(p);
    auto witnesses = termDeletionWitnesses(g);
    for (std::size_t i = 0; i < witnesses.size(); ++i) ASSERT_TRUE(witnesses[i]) << toString(g) << " term " << i;
  }
}

TEST(DecomposeRational, Examples) {
  TropRational r(elementary(1, 2), elementary(2, 2));
  auto [num, den] = decomposeSymmetricRational(r);
  EXPECT_EQ(num, (GeneratorExpr{2, {GeneratorTerm{0, {1, 0}}}}));
  EXPECT_EQ(den, (GeneratorExpr{2, {GeneratorTerm{0, {0, 1}}}}));

  Poly p = symmetrize(Poly(3, {Monomial{1, {2, 0, 1}}}));
  auto [a, b] = decomposeSymmetricRational(TropRational(p, p));
  EXPECT_TRUE(rationalEquiv(TropRational(expand(a), expand(b)), TropRational::fromPoly(Poly::constant(3, 0))).equivalent);

  TropRational bad(Poly::variable(2, 0), Poly::constant(2, 0));
  EXPECT_THROW(decomposeSymmetricRational(bad), Error);
}

TEST(DecomposeRational, ScrambledGeneratorRoundTrip) {
  Rng rng(28);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 2 + rng() % 2;
    GeneratorExpr gp = randomGenerators(rng, n, 1 + rng() % 2);
    GeneratorExpr gq = randomGenerators(rng, n, 1 + rng() % 2);
    // Scramble: multiply both sides by a common non-symmetric polynomial.
    Poly t1 = randomPoly(rng, n, 2, 0, 1);
    TropRational r(polyMul(expand(gp), t1), polyMul(expand(gq), t1));
    auto [a, b] = decomposeSymmetricRational(r);
    EXPECT_TRUE(rationalEquiv(TropRational(expand(a), expand(b)), r).equivalent);
  }
}

TEST(Fingerprint, Examples) {
  EXPECT_EQ(orbitFingerprint(Point{3, 1, 2}), (std::vector<Rational>{1, 3, 6}));
  EXPECT_EQ(orbitFingerprint(Point{2, 3, 1}), orbitFingerprint(Point{3, 1, 2}));
  EXPECT_EQ(orbitFingerprint(Point{0, 0}), (std::vector<Rational>{0, 0}));
  EXPECT_EQ(orbitFingerprint(Point{0, 1}), (std::vector<Rational>{0, 1}));
}

TEST(Fingerprint, SeparatesOrbits) {
  Rng rng(29);
  int same = 0;
  for (int t = 0; t < 600; ++t) {
    std::size_t n = 1 + rng() % 5;
    Point x = randomPoint(rng, n, 2, 1);
    Point y = (t % 3 == 0) ? x : randomPoint(rng, n, 2, 1);
    std::shuffle(y.begin(), y.end(), rng);
    Point sx = x, sy = y;
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    bool orbitEqual = sx == sy;
    same += orbitEqual;
    EXPECT_EQ(orbitFingerprint(x) == orbitFingerprint(y), orbitEqual);
  }
  EXPECT_GT(same, 150);
}
