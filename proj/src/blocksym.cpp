#include "tropsym/blocksym.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "tropsym/error.hpp"

namespace tropsym {

namespace {

constexpr std::size_t kMaxOrbitN = 8;

bool isBinaryRow(const BlockRow& r) { return (r[0] == 0 || r[0] == 1) && (r[1] == 0 || r[1] == 1); }

BlockRows sortedRows(BlockRows rows) {
  std::sort(rows.begin(), rows.end());
  return rows;
}

// Every distinct arrangement of the rows.
std::vector<BlockRows> arrangements(BlockRows rows) {
  std::sort(rows.begin(), rows.end());
  std::vector<BlockRows> out;
  do {
    out.push_back(rows);
  } while (std::next_permutation(rows.begin(), rows.end()));
  return out;
}

Exponents flatten(const BlockRows& rows) {
  Exponents e;
  e.reserve(2 * rows.size());
  for (const auto& r : rows) {
    e.push_back(r[0]);
    e.push_back(r[1]);
  }
  return e;
}

BlockRows unflatten(const Exponents& e) {
  if (e.size() % 2 != 0) throw Error(ErrorCode::kDimensionMismatch, "block variables need an even count");
  BlockRows rows(e.size() / 2);
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = {e[2 * i], e[2 * i + 1]};
  return rows;
}

std::int64_t degreeOf(const BlockRows& rows) {
  std::int64_t d = 0;
  for (const auto& r : rows) d = checkedAdd(d, checkedAdd(r[0], r[1]));
  return d;
}

std::size_t spreadOf(const BlockRows& rows) {
  std::size_t s = 0;
  for (const auto& r : rows) s += (r[0] != 0) + (r[1] != 0);
  return s;
}

BlockRows supportOf(const BlockRows& rows) {
  BlockRows e(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) e[i] = {rows[i][0] != 0 ? 1 : 0, rows[i][1] != 0 ? 1 : 0};
  return e;
}

void checkFactorialCap(std::size_t n, const SymLimits& limits) {
  if (n > limits.factorialCap) {
    throw Error(ErrorCode::kResourceCap, "block symmetrization over n = " + std::to_string(n) +
                                             " exceeds the factorial cap of " +
                                             std::to_string(limits.factorialCap));
  }
}

// min over arrangements of <rows, X>; rows may hold any integers.
Rational sym2Value(const BlockRows& rows, std::span<const Rational> x) {
  std::optional<Rational> best;
  for (const auto& arr : arrangements(rows)) {
    Rational v = 0;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (arr[i][0] != 0) v += fromInt(arr[i][0]) * x[2 * i];
      if (arr[i][1] != 0) v += fromInt(arr[i][1]) * x[2 * i + 1];
    }
    if (!best || v < *best) best = v;
  }
  return *best;
}

}  // namespace

OrbitRep::OrbitRep(BlockRows rows) : rows_(sortedRows(std::move(rows))) {
  if (rows_.empty()) throw Error(ErrorCode::kInvalidArgument, "orbit needs n >= 1");
  bool nonzero = false;
  for (const auto& r : rows_) {
    if (!isBinaryRow(r)) throw Error(ErrorCode::kInvalidArgument, "orbit rows must be {0,1} pairs");
    nonzero = nonzero || r[0] != 0 || r[1] != 0;
  }
  if (!nonzero) throw Error(ErrorCode::kInvalidArgument, "the all-zero matrix is not an orbit generator");
}

std::size_t OrbitRep::count(int a, int b) const {
  return static_cast<std::size_t>(std::count(rows_.begin(), rows_.end(), BlockRow{a, b}));
}

std::string OrbitRep::label() const {
  std::string s = "[";
  for (const BlockRow& r : {BlockRow{0, 1}, BlockRow{1, 0}, BlockRow{1, 1}}) {
    std::size_t k = count(static_cast<int>(r[0]), static_cast<int>(r[1]));
    if (k == 0) continue;
    s += "(" + std::to_string(r[0]) + "," + std::to_string(r[1]) + ")";
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s + "]";
}

OrbitRep OrbitRep::parse(std::string_view label, std::size_t n) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < label.size() && std::isspace(static_cast<unsigned char>(label[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= label.size() || label[pos] != c) {
      throw SyntaxError(std::string("orbit label: expected '") + c + "'", pos);
    }
    ++pos;
  };
  auto number = [&]() -> std::int64_t {
    skip();
    std::size_t start = pos;
    while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) ++pos;
    if (start == pos || pos - start > 9) throw SyntaxError("orbit label: expected a number", start);
    return std::stoll(std::string(label.substr(start, pos - start)));
  };

  BlockRows rows;
  expect('[');
  skip();
  while (pos < label.size() && label[pos] == '(') {
    ++pos;
    std::int64_t a = number();
    expect(',');
    std::int64_t b = number();
    expect(')');
    std::int64_t times = 1;
    skip();
    if (pos < label.size() && label[pos] == '^') {
      ++pos;
      times = number();
    }
    for (std::int64_t t = 0; t < times; ++t) rows.push_back({a, b});
    skip();
    if (pos < label.size() && label[pos] == ',') ++pos;
    skip();
  }
  expect(']');
  skip();
  if (pos != label.size()) throw SyntaxError("orbit label: trailing characters", pos);
  // Zero rows are optional; pad them, or drop surplus ones.
  std::erase(rows, BlockRow{0, 0});
  if (rows.size() > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "orbit label " + std::string(label) + " has more than n = " + std::to_string(n) + " nonzero rows");
  }
  rows.resize(n, BlockRow{0, 0});
  return OrbitRep(std::move(rows));
}

std::vector<OrbitRep> enumerateOrbits(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "enumerateOrbits needs n >= 1");
  if (n > kMaxOrbitN) throw Error(ErrorCode::kResourceCap, "enumerateOrbits is capped at n = 8");
  std::vector<OrbitRep> out;
  // Row-type counts (c01, c10, c11), the rest (0,0).
  for (std::size_t c01 = 0; c01 <= n; ++c01) {
    for (std::size_t c10 = 0; c01 + c10 <= n; ++c10) {
      for (std::size_t c11 = 0; c01 + c10 + c11 <= n; ++c11) {
        if (c01 + c10 + c11 == 0) continue;
        BlockRows rows;
        rows.insert(rows.end(), c01, BlockRow{0, 1});
        rows.insert(rows.end(), c10, BlockRow{1, 0});
        rows.insert(rows.end(), c11, BlockRow{1, 1});
        rows.resize(n, BlockRow{0, 0});
        out.emplace_back(std::move(rows));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Poly elementary2(const OrbitRep& orbit) {
  std::vector<Monomial> monos;
  for (const auto& arr : arrangements(orbit.rows())) monos.push_back(Monomial{0, flatten(arr)});
  return Poly(2 * orbit.n(), std::move(monos));
}

Poly symmetrize2(const Poly& p, const SymLimits& limits) {
  if (p.nVars() % 2 != 0) throw Error(ErrorCode::kDimensionMismatch, "block symmetrization needs an even number of variables");
  checkFactorialCap(p.nVars() / 2, limits);
  std::vector<Monomial> out;
  for (const auto& m : p.monomials()) {
    for (const auto& arr : arrangements(unflatten(m.exps))) out.push_back(Monomial{m.coeff, flatten(arr)});
  }
  return Poly(p.nVars(), std::move(out));
}

std::int64_t BlockMonomial::degree() const { return degreeOf(rows); }
std::size_t BlockMonomial::spread() const { return spreadOf(rows); }
Monomial BlockMonomial::toMonomial() const { return Monomial{coeff, flatten(rows)}; }

BlockMonomial BlockMonomial::fromMonomial(const Monomial& m) {
  for (auto e : m.exps) {
    if (e < 0) throw Error(ErrorCode::kInvalidArgument, "block monomials need nonnegative exponents");
  }
  return BlockMonomial{m.coeff, unflatten(m.exps)};
}

int compareS(const BlockMonomial& a, const BlockMonomial& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::kDimensionMismatch, "compareS needs equal n");
  std::int64_t da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  std::size_t sa = a.spread(), sb = b.spread();
  if (sa != sb) return sa < sb ? 1 : -1;
  Exponents fa = flatten(a.rows), fb = flatten(b.rows);
  if (fa == fb) return 0;
  return fa > fb ? 1 : -1;
}

Poly symmetrize2(const BlockMonomial& m, const SymLimits& limits) {
  return symmetrize2(Poly(2 * m.n(), {m.toMonomial()}), limits);
}

// ---------------------------------------------------------------------------
// Gen2Expr

Gen2Expr Gen2Expr::constant(std::size_t n, const Rational& c) {
  Gen2Expr g;
  g.kind_ = Kind::kConst;
  g.n_ = n;
  g.value_ = c;
  return g;
}

Gen2Expr Gen2Expr::generator(const OrbitRep& orbit, std::int64_t exponent) {
  Gen2Expr g;
  g.kind_ = Kind::kGen;
  g.n_ = orbit.n();
  g.orbit_ = orbit;
  g.exponent_ = exponent;
  return g;
}

namespace {

Gen2Expr nary(Gen2Expr::Kind kind, std::vector<Gen2Expr> children,
              Gen2Expr (*build)(Gen2Expr::Kind, std::size_t, std::vector<Gen2Expr>)) {
  if (children.empty()) throw Error(ErrorCode::kInvalidArgument, "generator expression node needs children");
  std::size_t n = children.front().n();
  for (const auto& c : children) {
    if (c.n() != n) throw Error(ErrorCode::kDimensionMismatch, "generator expressions over different n");
  }
  if (children.size() == 1) return std::move(children.front());
  return build(kind, n, std::move(children));
}

}  // namespace

Gen2Expr Gen2Expr::add(std::vector<Gen2Expr> terms) {
  return nary(Kind::kAdd, std::move(terms), [](Kind k, std::size_t n, std::vector<Gen2Expr> c) {
    Gen2Expr g;
    g.kind_ = k;
    g.n_ = n;
    g.children_ = std::move(c);
    return g;
  });
}

Gen2Expr Gen2Expr::mul(std::vector<Gen2Expr> factors) {
  // Constant-zero factors are the identity and are dropped.
  std::vector<Gen2Expr> kept;
  for (auto& f : factors) {
    if (f.kind() == Kind::kMul) {
      kept.insert(kept.end(), f.children_.begin(), f.children_.end());
    } else if (!(f.kind() == Kind::kConst && sgn(f.value()) == 0)) {
      kept.push_back(std::move(f));
    }
  }
  if (kept.empty() && !factors.empty()) return constant(factors.front().n(), 0);
  return nary(Kind::kMul, std::move(kept), [](Kind k, std::size_t n, std::vector<Gen2Expr> c) {
    Gen2Expr g;
    g.kind_ = k;
    g.n_ = n;
    g.children_ = std::move(c);
    return g;
  });
}

Gen2Expr Gen2Expr::inv(Gen2Expr child) {
  if (child.kind() == Kind::kConst) return constant(child.n(), -child.value());
  if (child.kind() == Kind::kGen) return generator(*child.orbit(), -child.exponent());
  if (child.kind() == Kind::kInv) return std::move(child.children_.front());
  if (child.kind() == Kind::kMul) {
    std::vector<Gen2Expr> factors;
    for (auto& c : child.children_) factors.push_back(inv(std::move(c)));
    return mul(std::move(factors));
  }
  Gen2Expr g;
  g.kind_ = Kind::kInv;
  g.n_ = child.n();
  g.children_.push_back(std::move(child));
  return g;
}

std::size_t Gen2Expr::size() const {
  std::size_t s = 1;
  for (const auto& c : children_) s += c.size();
  return s;
}

TropRational expand(const Gen2Expr& g) {
  const std::size_t nv = 2 * g.n();
  switch (g.kind()) {
    case Gen2Expr::Kind::kConst:
      return TropRational::fromPoly(Poly::constant(nv, g.value()));
    case Gen2Expr::Kind::kGen: {
      std::int64_t k = g.exponent();
      Poly base = elementary2(*g.orbit());
      Poly power = frobeniusPow(base, k < 0 ? -k : k);
      if (k >= 0) return TropRational::fromPoly(power);
      return TropRational(Poly::constant(nv, 0), power);
    }
    case Gen2Expr::Kind::kInv:
      return ratInv(expand(g.children().front()));
    case Gen2Expr::Kind::kAdd:
    case Gen2Expr::Kind::kMul: {
      TropRational acc = expand(g.children().front());
      for (std::size_t i = 1; i < g.children().size(); ++i) {
        TropRational next = expand(g.children()[i]);
        acc = canonicalize(g.kind() == Gen2Expr::Kind::kAdd ? ratAdd(acc, next) : ratMul(acc, next));
      }
      return acc;
    }
  }
  throw Error(ErrorCode::kInternal, "bad generator expression node");
}

Rational evaluate(const Gen2Expr& g, std::span<const Rational> x) {
  switch (g.kind()) {
    case Gen2Expr::Kind::kConst: return g.value();
    case Gen2Expr::Kind::kGen: return fromInt(g.exponent()) * sym2Value(g.orbit()->rows(), x);
    case Gen2Expr::Kind::kInv: return -evaluate(g.children().front(), x);
    case Gen2Expr::Kind::kAdd: {
      Rational best = evaluate(g.children().front(), x);
      for (std::size_t i = 1; i < g.children().size(); ++i) best = std::min(best, evaluate(g.children()[i], x));
      return best;
    }
    case Gen2Expr::Kind::kMul: {
      Rational s = 0;
      for (const auto& c : g.children()) s += evaluate(c, x);
      return s;
    }
  }
  throw Error(ErrorCode::kInternal, "bad generator expression node");
}

std::string toString(const Gen2Expr& g) {
  switch (g.kind()) {
    case Gen2Expr::Kind::kConst: return toString(g.value());
    case Gen2Expr::Kind::kGen: {
      std::string s = "e" + g.orbit()->label();
      if (g.exponent() != 1) s += "^" + std::to_string(g.exponent());
      return s;
    }
    case Gen2Expr::Kind::kInv: {
      const Gen2Expr& c = g.children().front();
      std::string inner = toString(c);
      return (c.kind() == Gen2Expr::Kind::kAdd ? inner : "(" + inner + ")") + "^-1";
    }
    default: break;
  }
  std::string sep = g.kind() == Gen2Expr::Kind::kAdd ? " ⊕ " : " ⊙ ";
  std::string s = "(";
  for (std::size_t i = 0; i < g.children().size(); ++i) {
    if (i) s += sep;
    s += toString(g.children()[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// One inductive step, instrumented.

InductiveStep inductiveStep(const BlockMonomial& m) {
  const std::size_t n = m.n();
  checkFactorialCap(n, SymLimits::fromEnvironment());
  BlockRows e = supportOf(m.rows);
  std::int64_t a = 0;
  for (const auto& r : m.rows) {
    for (auto v : r) {
      if (v > 0) a = (a == 0) ? v : std::min(a, v);
    }
  }
  if (a == 0) throw Error(ErrorCode::kInvalidArgument, "inductive step needs a monomial of positive degree");

  InductiveStep step{m, OrbitRep(e), a, BlockMonomial{0, m.rows}, {}, {}, true};
  BlockRows shifted = m.rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (int j = 0; j < 2; ++j) shifted[i][j] -= a * e[i][j];
  }
  step.shifted.rows = shifted;
  const BlockRows shiftedSupport = supportOf(shifted);
  const BlockRows mOrbit = sortedRows(m.rows);

  std::vector<std::size_t> rho(n);
  std::iota(rho.begin(), rho.end(), 0);
  std::vector<BlockRows> corrections, residual;
  do {
    std::vector<std::size_t> rhoInv(n);
    for (std::size_t r = 0; r < n; ++r) rhoInv[rho[r]] = r;
    std::vector<std::size_t> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    do {
      // Row r of rho(M) is row rho^-1(r) of M; build by scattering.
      BlockRows term(n, BlockRow{0, 0});
      bool inside = true;
      for (std::size_t r = 0; r < n; ++r) {
        for (int j = 0; j < 2; ++j) {
          term[rho[r]][j] += a * e[r][j];
          term[pi[r]][j] += shifted[r][j];
        }
      }
      for (std::size_t r = 0; r < n; ++r) {
        for (int j = 0; j < 2; ++j) {
          if (shiftedSupport[r][j] != 0 && e[rhoInv[pi[r]]][j] == 0) inside = false;
        }
      }
      BlockRows key = sortedRows(term);
      if (!inside) {
        corrections.push_back(key);
      } else if (key != mOrbit) {
        residual.push_back(key);
      }
    } while (std::next_permutation(pi.begin(), pi.end()));
  } while (std::next_permutation(rho.begin(), rho.end()));

  auto dedupe = [](std::vector<BlockRows>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(corrections);
  dedupe(residual);
  for (auto& rows : corrections) {
    BlockMonomial c{m.coeff, rows};
    if (c.degree() != m.degree() || c.spread() < m.spread() + 1) step.descentInvariant = false;
    step.corrections.push_back(std::move(c));
  }
  for (auto& rows : residual) step.residual.push_back(BlockMonomial{m.coeff, rows});
  return step;
}

// ---------------------------------------------------------------------------
// Decomposition of Sym2 of a monomial.
//
// For any matrix P and any row arrangement,
//   Sym2(M) <= Sym2(P) + max_pi <M - P, pi X> = Sym2(P) (.) Sym2(P - M)^-1,
// so each P gives an upper bound. With P = c*E for a {0,1} matrix E the
// first factor is the generator power e_E^c, and P - M reduces by column
// shifts to a matrix that is smaller in >_S. Sym2(M) is then the (+) of a
// family of such bounds that touches it everywhere, found on sample points
// and certified by exact canonical-form comparison.

namespace {

bool isBaseMatrix(const BlockRows& rows) {
  std::int64_t value = 0;
  for (const auto& r : rows) {
    for (auto v : r) {
      if (v == 0) continue;
      if (value != 0 && v != value) return false;
      value = v;
    }
  }
  return true;
}

// (s1, s2) column minima.
BlockRow columnMinima(const BlockRows& rows) {
  BlockRow s = rows.front();
  for (const auto& r : rows) {
    s[0] = std::min(s[0], r[0]);
    s[1] = std::min(s[1], r[1]);
  }
  return s;
}

// e_[(1,0)^n]^s1 (.) e_[(0,1)^n]^s2: the single monomials sum_i x[i,1] and
// sum_i x[i,2].
std::vector<Gen2Expr> columnShift(std::size_t n, const BlockRow& s) {
  std::vector<Gen2Expr> out;
  if (s[0] != 0) out.push_back(Gen2Expr::generator(OrbitRep(BlockRows(n, BlockRow{1, 0})), s[0]));
  if (s[1] != 0) out.push_back(Gen2Expr::generator(OrbitRep(BlockRows(n, BlockRow{0, 1})), s[1]));
  return out;
}

// Generator power for a Deg 0, {0,1} or single-valued matrix.
Gen2Expr baseExpr(const BlockRows& rows) {
  std::int64_t value = 0;
  for (const auto& r : rows) {
    for (auto v : r) {
      if (v != 0) value = v;
    }
  }
  if (value == 0) return Gen2Expr::constant(rows.size(), 0);
  return Gen2Expr::generator(OrbitRep(supportOf(rows)), value);
}

struct Candidate {
  BlockRows e;
  std::int64_t c = 0;
  BlockRows reduced;  // P - M minus its column minima
  BlockRow shift{};
};

class Decomposer {
 public:
  Decomposer(const Decompose2Options& options, Decompose2Stats& stats) : options_(options), stats_(stats) {}

  Gen2Expr run(const BlockRows& input, std::size_t depth) {
    stats_.maxDepth = std::max(stats_.maxDepth, depth);
    BlockRows m = sortedRows(input);
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    if (failed_.count(m)) throw Error(ErrorCode::kDecompositionFailed, "no certified decomposition for " + describe(m));
    try {
      Gen2Expr g = compute(m, depth);
      memo_.emplace(m, g);
      return g;
    } catch (const Error& err) {
      if (err.code() == ErrorCode::kDecompositionFailed) failed_.insert(m);
      throw;
    }
  }

 private:
  // Every recursive call must go strictly down in >_S.
  Gen2Expr recurse(const BlockRows& child, const BlockRows& parent, std::size_t depth) {
    ++stats_.recursiveCalls;
    if (compareS(BlockMonomial{0, child}, BlockMonomial{0, parent}) >= 0) {
      stats_.strictDescent = false;
      throw Error(ErrorCode::kInternal, "recursion did not descend in >_S");
    }
    return run(child, depth + 1);
  }

  Gen2Expr compute(const BlockRows& m, std::size_t depth) {
    const std::size_t n = m.size();
    if (degreeOf(m) == 0 || isBaseMatrix(m)) return baseExpr(m);

    BlockRow s = columnMinima(m);
    if (s[0] > 0 || s[1] > 0) {
      BlockRows rest = m;
      for (auto& r : rest) {
        r[0] -= s[0];
        r[1] -= s[1];
      }
      std::vector<Gen2Expr> factors = columnShift(n, s);
      factors.push_back(isBaseMatrix(rest) ? baseExpr(rest) : recurse(rest, m, depth));
      return Gen2Expr::mul(std::move(factors));
    }

    InductiveStep step = inductiveStep(BlockMonomial{0, m});
    if (!step.descentInvariant) {
      stats_.strictDescent = false;
      throw Error(ErrorCode::kInternal, "correction term violates the descent invariant");
    }
    // e^a (.) Sym2(m') = Sym2(m) (+) corrections, so the step is exact
    // exactly when the corrections never undercut Sym2(m).
    Poly target = symmetrize2(BlockMonomial{0, m}, options_.limits);
    Poly product = polyMul(symmetrize2(BlockMonomial{0, scaledSupport(step)}, options_.limits),
                           symmetrize2(step.shifted, options_.limits));
    if (polyEquiv(product, target).equivalent) {
      ++stats_.inductiveSteps;
      const BlockRows& rest = step.shifted.rows;
      return Gen2Expr::mul({Gen2Expr::generator(step.support, step.a),
                            isBaseMatrix(rest) ? baseExpr(rest) : recurse(rest, m, depth)});
    }

    ++stats_.coverSteps;
    return cover(m, target, depth);
  }

  static BlockRows scaledSupport(const InductiveStep& step) {
    BlockRows e = supportOf(step.monomial.rows);
    for (auto& r : e) {
      r[0] *= step.a;
      r[1] *= step.a;
    }
    return e;
  }

  std::vector<Candidate> candidates(const BlockRows& m) const {
    const std::size_t n = m.size();
    std::int64_t maxEntry = 0;
    for (const auto& r : m) maxEntry = std::max({maxEntry, r[0], r[1]});
    std::vector<Candidate> out;
    const std::size_t cells = 2 * n;
    for (std::size_t mask = 1; mask < (std::size_t{1} << cells); ++mask) {
      BlockRows e(n, BlockRow{0, 0});
      for (std::size_t bit = 0; bit < cells; ++bit) {
        if (mask & (std::size_t{1} << bit)) e[bit / 2][bit % 2] = 1;
      }
      for (std::int64_t c = 1; c <= maxEntry + 1; ++c) {
        BlockRows z(n);
        for (std::size_t i = 0; i < n; ++i) {
          for (int j = 0; j < 2; ++j) z[i][j] = c * e[i][j] - m[i][j];
        }
        BlockRow s = columnMinima(z);
        for (auto& r : z) {
          r[0] -= s[0];
          r[1] -= s[1];
        }
        bool tooLarge = false;
        for (const auto& r : z) tooLarge = tooLarge || r[0] > options_.maxDegree || r[1] > options_.maxDegree;
        if (tooLarge) continue;
        bool smaller = compareS(BlockMonomial{0, z}, BlockMonomial{0, m}) < 0 &&
                       (degreeOf(z) < degreeOf(m) || spreadOf(z) > spreadOf(m));
        if (!isBaseMatrix(z) && !smaller) continue;
        out.push_back(Candidate{e, c, z, s});
      }
    }
    return out;
  }

  // c * e_E(X) - Sym2(P - M)(X).
  static Rational boundValue(const Candidate& cand, std::span<const Rational> x) {
    Rational v = fromInt(cand.c) * sym2Value(cand.e, x) - sym2Value(cand.reduced, x);
    for (std::size_t i = 0; i < cand.reduced.size(); ++i) {
      v -= fromInt(cand.shift[0]) * x[2 * i] + fromInt(cand.shift[1]) * x[2 * i + 1];
    }
    return v;
  }

  Gen2Expr boundExpr(const Candidate& cand, const BlockRows& m, std::size_t depth) {
    std::vector<Gen2Expr> den = columnShift(m.size(), cand.shift);
    den.push_back(isBaseMatrix(cand.reduced) ? baseExpr(cand.reduced) : recurse(cand.reduced, m, depth));
    return Gen2Expr::mul({Gen2Expr::generator(OrbitRep(cand.e), cand.c), Gen2Expr::inv(Gen2Expr::mul(std::move(den)))});
  }

  Gen2Expr cover(const BlockRows& m, const Poly& target, std::size_t depth) {
    const std::size_t n = m.size();
    std::vector<Candidate> cands = candidates(m);
    std::vector<bool> usable(cands.size(), true);
    std::vector<std::optional<Gen2Expr>> exprs(cands.size());

    std::mt19937_64 rng(0x2b10c0 + std::hash<std::string>{}(describe(m)));
    std::uniform_int_distribution<long> num(-60, 60);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<Point> samples;
    for (int k = 0; k < 48; ++k) {
      Point x(2 * n);
      for (auto& v : x) {
        v = Rational(num(rng), den(rng));
        v.canonicalize();
      }
      samples.push_back(std::move(x));
    }

    for (std::size_t round = 0; round < options_.maxCoverRounds; ++round) {
      // hits[c][s]: bound c is tight at sample s.
      std::vector<std::vector<bool>> hits(cands.size(), std::vector<bool>(samples.size()));
      for (std::size_t s = 0; s < samples.size(); ++s) {
        Rational f = sym2Value(m, samples[s]);
        for (std::size_t c = 0; c < cands.size(); ++c) {
          if (!usable[c]) continue;
          Rational u = boundValue(cands[c], samples[s]);
          if (u < f) throw Error(ErrorCode::kInternal, "upper bound undercuts Sym2 at a sample point");
          hits[c][s] = (u == f);
        }
      }

      std::vector<std::size_t> chosen = greedyCover(hits, usable, samples.size());
      if (chosen.empty()) break;

      std::vector<Gen2Expr> terms;
      bool dropped = false;
      for (std::size_t c : chosen) {
        if (!exprs[c]) {
          try {
            exprs[c] = boundExpr(cands[c], m, depth);
          } catch (const Error& err) {
            if (err.code() != ErrorCode::kDecompositionFailed) throw;
            usable[c] = false;
            dropped = true;
            break;
          }
        }
        terms.push_back(*exprs[c]);
      }
      if (dropped) continue;

      Gen2Expr g = Gen2Expr::add(std::move(terms));
      EquivResult eq = rationalEquiv(expand(g), TropRational::fromPoly(target));
      if (eq.equivalent) return g;
      samples.push_back(*eq.witness);
    }
    throw Error(ErrorCode::kDecompositionFailed, "no certified decomposition for " + describe(m));
  }

  // Greedy set cover; empty when some sample is not covered at all.
  static std::vector<std::size_t> greedyCover(const std::vector<std::vector<bool>>& hits,
                                              const std::vector<bool>& usable, std::size_t nSamples) {
    std::vector<bool> covered(nSamples, false);
    std::size_t remaining = nSamples;
    std::vector<std::size_t> chosen;
    while (remaining > 0) {
      std::size_t best = hits.size(), bestGain = 0;
      for (std::size_t c = 0; c < hits.size(); ++c) {
        if (!usable[c]) continue;
        std::size_t gain = 0;
        for (std::size_t s = 0; s < nSamples; ++s) gain += hits[c][s] && !covered[s];
        if (gain > bestGain) {
          best = c;
          bestGain = gain;
        }
      }
      if (bestGain == 0) return {};
      chosen.push_back(best);
      for (std::size_t s = 0; s < nSamples; ++s) {
        if (hits[best][s] && !covered[s]) {
          covered[s] = true;
          --remaining;
        }
      }
    }
    return chosen;
  }

  static std::string describe(const BlockRows& m) {
    std::string s = "[";
    for (const auto& r : m) s += "(" + std::to_string(r[0]) + "," + std::to_string(r[1]) + ")";
    return s + "]";
  }

  const Decompose2Options& options_;
  Decompose2Stats& stats_;
  std::map<BlockRows, Gen2Expr> memo_;
  std::set<BlockRows> failed_;
};

Gen2Expr withCoefficient(const Rational& c, Gen2Expr g) {
  if (sgn(c) == 0) return g;
  std::size_t n = g.n();
  return Gen2Expr::mul({Gen2Expr::constant(n, c), std::move(g)});
}

void checkDecomposable(const BlockRows& rows, const Decompose2Options& options) {
  for (const auto& r : rows) {
    if (r[0] < 0 || r[1] < 0) throw Error(ErrorCode::kInvalidArgument, "decompose2Symmetric needs nonnegative exponents");
    if (r[0] > options.maxDegree || r[1] > options.maxDegree) {
      throw Error(ErrorCode::kResourceCap, "exponent exceeds the configured maximum degree");
    }
  }
}

}  // namespace

Gen2Expr decompose2Symmetric(const BlockMonomial& m, const Decompose2Options& options, Decompose2Stats* stats) {
  checkDecomposable(m.rows, options);
  if (m.rows.empty()) throw Error(ErrorCode::kInvalidArgument, "block monomial needs n >= 1");
  checkFactorialCap(m.n(), options.limits);
  Decompose2Stats local;
  Decomposer d(options, stats ? *stats : local);
  return withCoefficient(m.coeff, d.run(m.rows, 0));
}

Gen2Expr decompose2SymmetricRational(const TropRational& r, const Decompose2Options& options, Decompose2Stats* stats) {
  const std::size_t nv = r.nVars();
  if (nv % 2 != 0) throw Error(ErrorCode::kDimensionMismatch, "2-symmetric functions need an even number of variables");
  const std::size_t n = nv / 2;
  checkFactorialCap(n, options.limits);

  // Adjacent block swaps generate S_n.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<std::size_t> perm(nv);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[2 * i], perm[2 * i + 2]);
    std::swap(perm[2 * i + 1], perm[2 * i + 3]);
    TropRational s(permuteVariables(r.num, perm), permuteVariables(r.den, perm));
    EquivResult eq = rationalEquiv(r, s);
    if (!eq.equivalent) {
      throw Error(ErrorCode::kNotSymmetric, "rational function is not 2-symmetric under the block swap (" +
                                                std::to_string(i + 1) + " " + std::to_string(i + 2) + ")");
    }
  }

  // Clear negative exponents with a common monomial factor; then
  // r = Sym2(num) (.) Sym2(den)^-1 because r is 2-symmetric.
  Exponents shift(nv, 0);
  for (const Poly* p : {&r.num, &r.den}) {
    for (const auto& m : p->monomials()) {
      for (std::size_t v = 0; v < nv; ++v) shift[v] = std::max(shift[v], -m.exps[v]);
    }
  }
  Poly num = mulMonomial(r.num, 0, shift);
  Poly den = mulMonomial(r.den, 0, shift);

  Decompose2Stats local;
  Decomposer d(options, stats ? *stats : local);
  auto side = [&](const Poly& p) {
    // Sym2 is additive and only depends on each monomial's row orbit.
    std::map<BlockRows, Rational> orbits;
    for (const auto& m : p.monomials()) {
      BlockRows key = sortedRows(unflatten(m.exps));
      auto it = orbits.find(key);
      if (it == orbits.end() || m.coeff < it->second) orbits[key] = m.coeff;
    }
    std::vector<Gen2Expr> terms;
    for (const auto& [rows, coeff] : orbits) {
      checkDecomposable(rows, options);
      terms.push_back(withCoefficient(coeff, d.run(rows, 0)));
    }
    return Gen2Expr::add(std::move(terms));
  };
  Gen2Expr top = side(num);
  if (den.size() == 1 && den[0].exps == Exponents(nv, 0)) {
    return withCoefficient(-den[0].coeff, std::move(top));
  }
  return Gen2Expr::mul({std::move(top), Gen2Expr::inv(side(den))});
}

// ---------------------------------------------------------------------------

Point Barcode::toPoint() const {
  Point x;
  x.reserve(2 * intervals.size());
  for (const auto& [birth, death] : intervals) {
    x.push_back(birth);
    x.push_back(death);
  }
  return x;
}

std::map<OrbitRep, Rational> orbitFingerprint2(const Barcode& barcode) {
  if (barcode.intervals.empty()) throw Error(ErrorCode::kInvalidArgument, "barcode needs at least one interval");
  Point x = barcode.toPoint();
  std::map<OrbitRep, Rational> out;
  for (const auto& orbit : enumerateOrbits(barcode.intervals.size())) out.emplace(orbit, sym2Value(orbit.rows(), x));
  return out;
}

NonGenerationWitness nonGenerationWitness(std::int64_t d) {
  if (d < 2) throw Error(ErrorCode::kInvalidArgument, "non-generation witness needs d >= 2");
  NonGenerationWitness w;
  w.d = d;
  // Variables (x11, x12, x21, x22).
  Poly poly(4, {Monomial{0, {d, 1, 0, 0}}, Monomial{0, {0, 0, d, 1}}});
  for (std::int64_t a = 0; a < d; ++a) {
    std::array<AffineForm, 2> forms{
        AffineForm{0, {fromInt(d - a), 0, fromInt(a - d), 0}},
        AffineForm{0, {fromInt(-a), -1, fromInt(a), 1}},
    };
    std::optional<Point> x = strictFeasiblePoint(forms, 4);
    if (!x) throw Error(ErrorCode::kInternal, "no witness point for a = " + std::to_string(a));
    NonGenerationWitness::Entry e;
    e.a = a;
    e.point = *x;
    e.minValue = std::min(forms[0].evaluate(e.point), forms[1].evaluate(e.point));
    e.crossTerm = Monomial{0, {a, 1, d - a, 0}}.evaluate(e.point);
    e.polynomial = evalPoly(poly, e.point);
    w.entries.push_back(std::move(e));
  }
  w.essential = {isEssential(poly, 0), isEssential(poly, 1)};
  w.minimal = minimalRepresentation(poly) == poly;
  return w;
}

}  // namespace tropsym
