#include <gtest/gtest.h>

#include "support.hpp"
#include "tropsym/canon.hpp"
#include "tropsym/error.hpp"
#include "tropsym/expr.hpp"
#include "tropsym/poly.hpp"
#include "tropsym/scalar.hpp"

using namespace tropsym;
using namespace tropsym::testing;

namespace {

TropScalar randomScalar(Rng& rng) {
  if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) return TropScalar::inf();
  return randomRational(rng);
}

ErrorCode codeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

}  // namespace

TEST(Scalar, AddIsMinMulIsSum) {
  EXPECT_EQ(tropAdd(Rational(3), Rational(5)), TropScalar(Rational(3)));
  EXPECT_EQ(tropMul(Rational(3), Rational(5)), TropScalar(Rational(8)));
  EXPECT_EQ(tropAdd(TropScalar::inf(), Rational(7)), TropScalar(Rational(7)));
  EXPECT_TRUE(tropMul(TropScalar::inf(), Rational(7)).isInf());
}

TEST(Scalar, InverseOfInfIsAnError) {
  EXPECT_EQ(tropInv(Rational(4)), TropScalar(Rational(-4)));
  try {
    tropInv(TropScalar::inf());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfInverse);
    EXPECT_STREQ(e.what(), "no tropical inverse of INF");
  }
  EXPECT_EQ(codeOf([] { tropPow(TropScalar::inf(), -1); }), ErrorCode::kInfInverse);
  EXPECT_EQ(tropPow(TropScalar::inf(), 0), TropScalar(Rational(0)));
}

TEST(Scalar, SemiringLaws) {
  Rng rng(1);
  for (int i = 0; i < 2000; ++i) {
    TropScalar a = randomScalar(rng), b = randomScalar(rng), c = randomScalar(rng);
    EXPECT_EQ(tropAdd(a, a), a);
    EXPECT_EQ(tropAdd(a, b), tropAdd(b, a));
    EXPECT_EQ(tropMul(a, b), tropMul(b, a));
    EXPECT_EQ(tropAdd(tropAdd(a, b), c), tropAdd(a, tropAdd(b, c)));
    EXPECT_EQ(tropMul(tropMul(a, b), c), tropMul(a, tropMul(b, c)));
    EXPECT_EQ(tropMul(a, tropAdd(b, c)), tropAdd(tropMul(a, b), tropMul(a, c)));
    EXPECT_EQ(tropAdd(TropScalar::inf(), a), a);
    EXPECT_EQ(tropMul(TropScalar(), a), a);
  }
}

TEST(Scalar, FrobeniusOnScalars) {
  Rng rng(2);
  std::uniform_int_distribution<long> pw(1, 10);
  for (int i = 0; i < 1000; ++i) {
    TropScalar a = randomRational(rng), b = randomRational(rng);
    long n = pw(rng);
    EXPECT_EQ(tropPow(tropAdd(a, b), n), tropAdd(tropPow(a, n), tropPow(b, n)));
  }
}

TEST(Poly, EvaluatesMonomialsAndMinima) {
  Poly m(3, {Monomial{0, {2, 3, 1}}});
  EXPECT_EQ(evalPoly(m, Point{1, 1, 1}), 6);
  Poly p(2, {Monomial{0, {2, 0}}, Monomial{0, {0, 2}}});
  EXPECT_EQ(evalPoly(p, Point{3, 1}), 2);
  Poly q(2, {Monomial{0, {2, 0}}, Monomial{0, {0, 2}}, Monomial{0, {1, 1}}});
  EXPECT_EQ(evalPoly(q, Point{3, 1}), 2);
}

TEST(Poly, EvaluationAtInf) {
  Poly p(2, {Monomial{0, {2, 0}}, Monomial{1, {0, 1}}});
  std::vector<TropScalar> x{TropScalar::inf(), Rational(4)};
  EXPECT_EQ(evalPoly(p, x), TropScalar(Rational(5)));
  std::vector<TropScalar> all{TropScalar::inf(), TropScalar::inf()};
  EXPECT_TRUE(evalPoly(p, all).isInf());
  Poly laurent(2, {Monomial{0, {-1, 0}}, Monomial{0, {0, 1}}});
  EXPECT_EQ(codeOf([&] { evalPoly(laurent, x); }), ErrorCode::kNegativeExponentAtInf);
  EXPECT_EQ(codeOf([&] { evalPoly(p, Point{1, 2, 3}); }), ErrorCode::kDimensionMismatch);
}

TEST(Poly, DedupKeepsMinimumCoefficient) {
  Poly p(1, {Monomial{3, {1}}, Monomial{-2, {1}}, Monomial{0, {0}}});
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0], (Monomial{0, {0}}));
  EXPECT_EQ(p[1], (Monomial{-2, {1}}));
  EXPECT_EQ(polyAdd(p, p), p);
  EXPECT_EQ(codeOf([] { Poly(2, {Monomial{0, {1}}}); }), ErrorCode::kDimensionMismatch);
  EXPECT_EQ(codeOf([] { Poly(2, {}); }), ErrorCode::kInvalidArgument);
}

TEST(Poly, Distributivity) {
  Poly s(2, {Monomial{0, {1, 0}}, Monomial{0, {0, 1}}});
  Poly sq = polyMul(s, s);
  EXPECT_EQ(sq, Poly(2, {Monomial{0, {2, 0}}, Monomial{0, {1, 1}}, Monomial{0, {0, 2}}}));
  EXPECT_EQ(polyPow(s, 2), sq);
  Poly cube = polyPow(s, 3);
  EXPECT_TRUE(polyEquiv(cube, Poly(2, {Monomial{0, {3, 0}}, Monomial{0, {0, 3}}})).equivalent);
  EXPECT_EQ(codeOf([&] { polyMul(s, Poly::variable(3, 0)); }), ErrorCode::kDimensionMismatch);
}

TEST(Poly, ProductAndSumEvaluateHomomorphically) {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 1 + rng() % 3;
    Poly p = randomPoly(rng, n, 1 + rng() % 4, -3, 3);
    Poly q = randomPoly(rng, n, 1 + rng() % 4, -3, 3);
    Point x = randomPoint(rng, n);
    EXPECT_EQ(evalPoly(polyMul(p, q), x), evalPoly(p, x) + evalPoly(q, x));
    EXPECT_EQ(evalPoly(polyAdd(p, q), x), std::min(evalPoly(p, x), evalPoly(q, x)));
  }
}

TEST(Poly, DedupNeverChangesValues) {
  Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 1 + rng() % 3;
    auto raw = randomMonomials(rng, n, 1 + rng() % 8, -2, 2);
    Poly p(n, raw);
    for (int k = 0; k < 5; ++k) {
      Point x = randomPoint(rng, n);
      EXPECT_EQ(evalPoly(p, x), bruteEval(raw, x));
    }
  }
}

TEST(Poly, PermuteVariablesRenames) {
  Poly p(3, {Monomial{1, {2, 0, 1}}});
  std::vector<std::size_t> perm{1, 2, 0};
  Poly q = permuteVariables(p, perm);
  EXPECT_EQ(q, Poly(3, {Monomial{1, {1, 2, 0}}}));
}

TEST(Poly, ExponentOverflowIsReported) {
  Poly p(1, {Monomial{0, {INT64_MAX / 2 + 1}}});
  EXPECT_EQ(codeOf([&] { polyMul(p, p); }), ErrorCode::kResourceCap);
}

TEST(Rational, StringRoundTrip) {
  EXPECT_EQ(toString(parseRational("6/4")), "3/2");
  EXPECT_EQ(toString(parseRational("-4/2")), "-2");
  EXPECT_EQ(toString(parseRational("0")), "0");
  EXPECT_EQ(codeOf([] { parseRational("1/0"); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(codeOf([] { parseRational("1.5"); }), ErrorCode::kInvalidArgument);
}

TEST(Parse, MinOfSums) {
  ParsedExpr e = parseExpr("min(x1+x1, x2+x2)");
  EXPECT_EQ(e.nVars, 2u);
  Expr expected = Expr::min({Expr::add({Expr::variable(0), Expr::variable(0)}),
                             Expr::add({Expr::variable(1), Expr::variable(1)})});
  EXPECT_EQ(e.ast, expected);
}

TEST(Parse, UnaryMinus) {
  ParsedExpr e = parseExpr("-min(x2+x1, x1)");
  EXPECT_EQ(e.ast.kind, Expr::Kind::kNeg);
  EXPECT_EQ(e.ast.children.front().kind, Expr::Kind::kMin);
}

TEST(Parse, BlockVariables) {
  ParsedExpr e = parseExpr("3/2 + x[1,2]", VariableSpace{std::nullopt, true});
  EXPECT_EQ(e.ast, Expr::add({Expr::constant(Rational(3, 2)), Expr::variable(1)}));
  EXPECT_EQ(e.nVars, 2u);
  EXPECT_EQ(parseExpr("x[2,1]", VariableSpace{3, true}).nVars, 6u);
}

TEST(Parse, BinaryMinusIsSugar) {
  ParsedExpr e = parseExpr("x1 - x2");
  EXPECT_EQ(e.ast, Expr::add({Expr::variable(0), Expr::neg(Expr::variable(1))}));
}

TEST(Parse, Errors) {
  try {
    parseExpr("min(x1,, x2)");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 7u);
  }
  EXPECT_EQ(codeOf([] { parseExpr("x3", VariableSpace{2, false}); }), ErrorCode::kUnknownVariable);
  EXPECT_EQ(codeOf([] { parseExpr("x[1,3]", VariableSpace{2, true}); }), ErrorCode::kUnknownVariable);
  EXPECT_EQ(codeOf([] { parseExpr("x[1,1]"); }), ErrorCode::kUnknownVariable);
  EXPECT_EQ(codeOf([] { parseExpr("x1 +"); }), ErrorCode::kSyntax);
  EXPECT_EQ(codeOf([] { parseExpr("y1"); }), ErrorCode::kSyntax);
}

TEST(Normalize, Constant) {
  TropRational r = normalizeToRational(Expr::constant(5), 1);
  EXPECT_EQ(r.num, Poly::constant(1, 5));
  EXPECT_EQ(r.den, Poly::constant(1, 0));
}

TEST(Normalize, MaxIsNegatedMinOfNegations) {
  TropRational r = normalizeToRational(Expr::max({Expr::variable(0), Expr::variable(1)}), 2);
  // max(x1, x2) = 0 - min(-x1, -x2)
  TropRational expected(Poly::constant(2, 0), Poly(2, {Monomial{0, {-1, 0}}, Monomial{0, {0, -1}}}));
  EXPECT_TRUE(rationalEquiv(r, expected).equivalent);
  EXPECT_EQ(r.evaluate(Point{3, 7}), 7);
}

TEST(Normalize, NestedQuotientNormalizesToCommonDenominator) {
  ParsedExpr e = parseExpr("min(-x1 + x2, -x2, -min(x2 + x1, x1))");
  TropRational r = normalizeToRational(e.ast, e.nVars);
  // min(3x2, 2x2, x1 + x2, x1, x2) - min(2x2 + x1, x1 + x2)
  TropRational common(Poly(2, {Monomial{0, {0, 3}}, Monomial{0, {0, 2}}, Monomial{0, {1, 1}}, Monomial{0, {1, 0}},
                               Monomial{0, {0, 1}}}),
                      Poly(2, {Monomial{0, {1, 2}}, Monomial{0, {1, 1}}}));
  EXPECT_TRUE(rationalEquiv(r, common).equivalent);
  // Dropping x1 x2 from that numerator changes the function: (-3, -1) is
  // a point where it is the unique minimizer.
  TropRational dropped(Poly(2, {Monomial{0, {0, 3}}, Monomial{0, {1, 0}}, Monomial{0, {0, 1}}}),
                       Poly(2, {Monomial{0, {1, 2}}, Monomial{0, {1, 1}}}));
  EXPECT_FALSE(rationalEquiv(r, dropped).equivalent);
  EXPECT_EQ(r.evaluate(Point{-3, -1}), 1);
  EXPECT_EQ(dropped.evaluate(Point{-3, -1}), 2);
}

TEST(Normalize, MatchesDirectEvaluation) {
  Rng rng(5);
  std::function<Expr(int, std::size_t)> gen = [&](int depth, std::size_t n) -> Expr {
    int kind = depth <= 0 ? static_cast<int>(rng() % 2) : static_cast<int>(rng() % 6);
    switch (kind) {
      case 0: return Expr::constant(randomRational(rng, 5, 3));
      case 1: return Expr::variable(rng() % n);
      case 2: return Expr::neg(gen(depth - 1, n));
      default: {
        std::vector<Expr> kids;
        std::size_t k = 1 + rng() % 3;
        for (std::size_t i = 0; i < k; ++i) kids.push_back(gen(depth - 1, n));
        if (kind == 3) return Expr::add(std::move(kids));
        if (kind == 4) return Expr::min(std::move(kids));
        return Expr::max(std::move(kids));
      }
    }
  };
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + rng() % 3;
    Expr e = gen(3, n);
    TropRational r = normalizeToRational(e, n);
    for (int k = 0; k < 100; ++k) {
      Point x = randomPoint(rng, n);
      ASSERT_EQ(r.evaluate(x), evalExpr(e, x)) << toString(e);
    }
  }
}

TEST(Normalize, ParsedTextRoundTripsThroughPrinter) {
  ParsedExpr e = parseExpr("max(x1, -x2 + 1/2, min(x1, x2))");
  ParsedExpr again = parseExpr(toString(e.ast));
  EXPECT_EQ(e.ast, again.ast);
}
