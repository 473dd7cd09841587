#include "tropsym/expr.hpp"

#include <cctype>

#include "tropsym/error.hpp"

namespace tropsym {

Expr Expr::constant(const Rational& v) {
  Expr e;
  e.kind = Kind::kConst;
  e.value = v;
  return e;
}

Expr Expr::variable(std::size_t index) {
  Expr e;
  e.kind = Kind::kVar;
  e.var = index;
  return e;
}

namespace {

Expr withChildren(Expr::Kind kind, std::vector<Expr> children) {
  if (children.empty()) throw Error(ErrorCode::kInvalidArgument, "operator needs at least one argument");
  Expr e;
  e.kind = kind;
  e.children = std::move(children);
  return e;
}

}  // namespace

Expr Expr::add(std::vector<Expr> terms) { return withChildren(Kind::kAdd, std::move(terms)); }
Expr Expr::neg(Expr child) { return withChildren(Kind::kNeg, {std::move(child)}); }
Expr Expr::min(std::vector<Expr> args) { return withChildren(Kind::kMin, std::move(args)); }
Expr Expr::max(std::vector<Expr> args) { return withChildren(Kind::kMax, std::move(args)); }

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::kConst: return a.value == b.value;
    case Expr::Kind::kVar: return a.var == b.var;
    default: return a.children == b.children;
  }
}

std::size_t VariableSpace::nVars(std::size_t inferredMaxIndex) const {
  if (n) return block ? 2 * *n : *n;
  return inferredMaxIndex;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VariableSpace& vars) : text_(text), vars_(vars) {}

  ParsedExpr run() {
    Expr e = parseSum();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    std::size_t nVars = vars_.nVars(maxIndex_);
    if (nVars == 0) nVars = vars_.block ? 2 : 1;
    return ParsedExpr{std::move(e), nVars};
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool acceptWord(std::string_view w) {
    skipSpace();
    if (text_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  std::string digits() {
    skipSpace();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t index() {
    std::string d = digits();
    if (d.size() > 9) fail("index too large");
    return static_cast<std::size_t>(std::stoul(d));
  }

  Expr parseSum() {
    std::vector<Expr> terms;
    terms.push_back(parseUnary());
    for (;;) {
      if (accept('+')) {
        terms.push_back(parseUnary());
      } else if (accept('-')) {
        terms.push_back(Expr::neg(parseUnary()));
      } else {
        break;
      }
    }
    if (terms.size() == 1) return std::move(terms.front());
    return Expr::add(std::move(terms));
  }

  Expr parseUnary() {
    if (accept('-')) return Expr::neg(parseUnary());
    return parsePrimary();
  }

  std::vector<Expr> parseArgs() {
    expect('(');
    std::vector<Expr> args;
    args.push_back(parseSum());
    while (accept(',')) args.push_back(parseSum());
    expect(')');
    return args;
  }

  Expr parseVariable() {
    std::size_t at = pos_;
    if (accept('[')) {
      std::size_t i = index();
      expect(',');
      std::size_t j = index();
      expect(']');
      if (!vars_.block) throw Error(ErrorCode::kUnknownVariable, "block variable x[" + std::to_string(i) + "," + std::to_string(j) + "] used without block mode");
      if (i == 0 || j == 0 || j > 2 || (vars_.n && i > *vars_.n)) {
        throw Error(ErrorCode::kUnknownVariable,
                    "unknown variable x[" + std::to_string(i) + "," + std::to_string(j) + "]");
      }
      maxIndex_ = std::max(maxIndex_, 2 * i);
      return Expr::variable(2 * (i - 1) + (j - 1));
    }
    skipSpace();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      pos_ = at;
      fail("expected variable index");
    }
    std::size_t k = index();
    if (vars_.block) throw Error(ErrorCode::kUnknownVariable, "flat variable x" + std::to_string(k) + " used in block mode");
    if (k == 0 || (vars_.n && k > *vars_.n)) {
      throw Error(ErrorCode::kUnknownVariable, "unknown variable x" + std::to_string(k));
    }
    maxIndex_ = std::max(maxIndex_, k);
    return Expr::variable(k - 1);
  }

  Expr parsePrimary() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (accept('/')) {
        std::string den = digits();
        return Expr::constant(parseRational(num + "/" + den));
      }
      return Expr::constant(parseRational(num));
    }
    if (acceptWord("min")) return Expr::min(parseArgs());
    if (acceptWord("max")) return Expr::max(parseArgs());
    if (c == 'x') {
      ++pos_;
      return parseVariable();
    }
    if (accept('(')) {
      Expr e = parseSum();
      expect(')');
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const VariableSpace& vars_;
  std::size_t pos_ = 0;
  std::size_t maxIndex_ = 0;
};

}  // namespace

ParsedExpr parseExpr(std::string_view text, const VariableSpace& vars) {
  return Parser(text, vars).run();
}

Rational evalExpr(const Expr& e, std::span<const Rational> x) {
  switch (e.kind) {
    case Expr::Kind::kConst: return e.value;
    case Expr::Kind::kVar:
      if (e.var >= x.size()) throw Error(ErrorCode::kDimensionMismatch, "point too short for expression");
      return x[e.var];
    case Expr::Kind::kNeg: return -evalExpr(e.children.front(), x);
    case Expr::Kind::kAdd: {
      Rational s = 0;
      for (const auto& c : e.children) s += evalExpr(c, x);
      return s;
    }
    case Expr::Kind::kMin:
    case Expr::Kind::kMax: {
      Rational best = evalExpr(e.children.front(), x);
      for (std::size_t i = 1; i < e.children.size(); ++i) {
        Rational v = evalExpr(e.children[i], x);
        if (e.kind == Expr::Kind::kMin ? v < best : v > best) best = v;
      }
      return best;
    }
  }
  throw Error(ErrorCode::kInternal, "bad expression node");
}

TropRational normalizeToRational(const Expr& e, std::size_t nVars) {
  switch (e.kind) {
    case Expr::Kind::kConst:
      return TropRational::fromPoly(Poly::constant(nVars, e.value));
    case Expr::Kind::kVar:
      return TropRational::fromPoly(Poly::variable(nVars, e.var));
    case Expr::Kind::kNeg:
      return ratInv(normalizeToRational(e.children.front(), nVars));
    case Expr::Kind::kAdd: {
      TropRational acc = normalizeToRational(e.children.front(), nVars);
      for (std::size_t i = 1; i < e.children.size(); ++i) {
        acc = ratMul(acc, normalizeToRational(e.children[i], nVars));
      }
      return acc;
    }
    case Expr::Kind::kMin: {
      TropRational acc = normalizeToRational(e.children.front(), nVars);
      for (std::size_t i = 1; i < e.children.size(); ++i) {
        acc = ratAdd(acc, normalizeToRational(e.children[i], nVars));
      }
      return acc;
    }
    case Expr::Kind::kMax: {
      // max(a, b, ...) = -min(-a, -b, ...)
      std::vector<Expr> negated;
      negated.reserve(e.children.size());
      for (const auto& c : e.children) negated.push_back(Expr::neg(c));
      return normalizeToRational(Expr::neg(Expr::min(std::move(negated))), nVars);
    }
  }
  throw Error(ErrorCode::kInternal, "bad expression node");
}

std::string toString(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kConst: return toString(e.value);
    case Expr::Kind::kVar: return "x" + std::to_string(e.var + 1);
    case Expr::Kind::kNeg: return "-(" + toString(e.children.front()) + ")";
    default: break;
  }
  std::string name = e.kind == Expr::Kind::kAdd ? "" : (e.kind == Expr::Kind::kMin ? "min" : "max");
  std::string sep = e.kind == Expr::Kind::kAdd ? " + " : ", ";
  std::string s = name + "(";
  for (std::size_t i = 0; i < e.children.size(); ++i) {
    if (i) s += sep;
    s += toString(e.children[i]);
  }
  return s + ")";
}

}  // namespace tropsym
