#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tropsym/poly.hpp"
#include "tropsym/rational.hpp"

namespace tropsym {

/// Expression tree over constants, variables, +, unary -, min and max.
struct Expr {
  enum class Kind { kConst, kVar, kAdd, kNeg, kMin, kMax };

  Kind kind = Kind::kConst;
  Rational value;            // kConst
  std::size_t var = 0;       // kVar
  std::vector<Expr> children;

  static Expr constant(const Rational& v);
  static Expr variable(std::size_t index);
  static Expr add(std::vector<Expr> terms);
  static Expr neg(Expr child);
  static Expr min(std::vector<Expr> args);
  static Expr max(std::vector<Expr> args);

  friend bool operator==(const Expr& a, const Expr& b);
};

/// Which variable names are legal. Flat mode accepts x1..xN; block mode
/// accepts x[i,j] with 1 <= i <= n, j in {1,2}, mapped to index 2(i-1)+(j-1).
struct VariableSpace {
  /// Flat: number of variables. Block: number of blocks. Unset: inferred
  /// from the largest index used.
  std::optional<std::size_t> n;
  bool block = false;

  std::size_t nVars(std::size_t inferredMaxIndex) const;
};

struct ParsedExpr {
  Expr ast;
  std::size_t nVars;
};

/// Grammar:
///   expr    := unary (('+' | '-') unary)*
///   unary   := '-' unary | primary
///   primary := INT ['/' INT] | var | ('min' | 'max') '(' expr (',' expr)* ')'
///            | '(' expr ')'
///   var     := 'x' INT | 'x' '[' INT ',' INT ']'
/// Binary minus a - b is read as a + (-b).
ParsedExpr parseExpr(std::string_view text, const VariableSpace& vars = {});

Rational evalExpr(const Expr& e, std::span<const Rational> x);

/// Common-denominator normalization to p (.) q^-1.
TropRational normalizeToRational(const Expr& e, std::size_t nVars);

std::string toString(const Expr& e);

}  // namespace tropsym
