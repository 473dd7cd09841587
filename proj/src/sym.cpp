#include "tropsym/sym.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "tropsym/error.hpp"

namespace tropsym {

SymLimits SymLimits::fromEnvironment() {
  SymLimits limits;
  if (const char* env = std::getenv("TROPSYM_FACTORIAL_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) limits.factorialCap = static_cast<std::size_t>(v);
  }
  return limits;
}

Poly symmetrize(const Poly& p, const SymLimits& limits) {
  if (p.nVars() > limits.factorialCap) {
    throw Error(ErrorCode::kResourceCap, "symmetrization over " + std::to_string(p.nVars()) +
                                             " variables exceeds the factorial cap of " +
                                             std::to_string(limits.factorialCap));
  }
  // Permuting the variables of a monomial permutes its exponent vector, so
  // the orbit is the set of distinct rearrangements of that vector.
  std::vector<Monomial> out;
  for (const auto& m : p.monomials()) {
    Exponents e = m.exps;
    std::sort(e.begin(), e.end());
    do {
      out.push_back(Monomial{m.coeff, e});
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return Poly(p.nVars(), std::move(out));
}

Poly elementary(std::size_t k, std::size_t n) {
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "elementary e_" + std::to_string(k) + " needs 1 <= k <= n = " + std::to_string(n));
  }
  Exponents e(n, 0);
  std::fill(e.end() - static_cast<std::ptrdiff_t>(k), e.end(), 1);
  std::vector<Monomial> out;
  do {
    out.push_back(Monomial{0, e});
  } while (std::next_permutation(e.begin(), e.end()));
  return Poly(n, std::move(out));
}

namespace {

std::vector<std::size_t> adjacentSwap(std::size_t n, std::size_t i) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[i], perm[i + 1]);
  return perm;
}

}  // namespace

SymmetryCheck checkSymmetric(const Poly& p) {
  SymmetryCheck check;
  for (std::size_t i = 0; i + 1 < p.nVars(); ++i) {
    auto perm = adjacentSwap(p.nVars(), i);
    EquivResult eq = polyEquiv(p, permuteVariables(p, perm));
    if (!eq.equivalent) {
      check.symmetric = false;
      check.transposition = std::make_pair(i, i + 1);
      check.witness = eq.witness;
      return check;
    }
  }
  return check;
}

SymmetryCheck checkSymmetric(const TropRational& r) {
  SymmetryCheck check;
  for (std::size_t i = 0; i + 1 < r.nVars(); ++i) {
    auto perm = adjacentSwap(r.nVars(), i);
    TropRational s(permuteVariables(r.num, perm), permuteVariables(r.den, perm));
    EquivResult eq = rationalEquiv(r, s);
    if (!eq.equivalent) {
      check.symmetric = false;
      check.transposition = std::make_pair(i, i + 1);
      check.witness = eq.witness;
      return check;
    }
  }
  return check;
}

Poly expand(const GeneratorExpr& g) {
  if (g.n == 0) throw Error(ErrorCode::kInvalidArgument, "generator expression needs n >= 1");
  if (g.terms.empty()) throw Error(ErrorCode::kInvalidArgument, "generator expression has no terms");
  std::vector<Poly> elem;
  for (std::size_t k = 1; k <= g.n; ++k) elem.push_back(elementary(k, g.n));
  std::map<std::pair<std::size_t, std::int64_t>, Poly> powers;
  auto power = [&](std::size_t k, std::int64_t a) -> const Poly& {
    auto it = powers.find({k, a});
    if (it == powers.end()) it = powers.emplace(std::make_pair(k, a), frobeniusPow(elem[k], a)).first;
    return it->second;
  };

  std::vector<Monomial> out;
  for (const auto& t : g.terms) {
    if (t.eExps.size() != g.n) throw Error(ErrorCode::kDimensionMismatch, "generator exponent vector has wrong length");
    Poly acc = Poly::constant(g.n, t.coeff);
    for (std::size_t k = 0; k < g.n; ++k) {
      std::int64_t a = t.eExps[k];
      if (a == 0) continue;
      if (a < 0) {
        if (k + 1 != g.n) throw Error(ErrorCode::kInvalidArgument, "only e_n may carry a negative exponent");
        // e_n is the single monomial x1...xn, so its inverse is x1^-1...xn^-1.
        acc = mulMonomial(acc, 0, Exponents(g.n, a));
      } else {
        acc = polyMul(acc, power(k, a));
      }
    }
    out.insert(out.end(), acc.monomials().begin(), acc.monomials().end());
  }
  return Poly(g.n, std::move(out));
}

GeneratorExpr decomposeSymmetric(const Poly& p) {
  SymmetryCheck check = checkSymmetric(p);
  if (!check.symmetric) {
    throw Error(ErrorCode::kNotSymmetric,
                "polynomial is not symmetric under the transposition (x" +
                    std::to_string(check.transposition->first + 1) + " x" +
                    std::to_string(check.transposition->second + 1) + ")");
  }
  const std::size_t n = p.nVars();
  Poly canon = minimalRepresentation(p);
  const std::int64_t shift = std::max<std::int64_t>(0, -canon.minExponent());

  GeneratorExpr g;
  g.n = n;
  // The canonical form of a symmetric function is closed under permutation,
  // so each orbit has exactly one member with non-increasing exponents.
  for (const auto& m : canon.monomials()) {
    if (!std::is_sorted(m.exps.rbegin(), m.exps.rend())) continue;
    Exponents e(m.exps);
    for (auto& v : e) v = checkedAdd(v, shift);
    GeneratorTerm t{m.coeff, Exponents(n, 0)};
    // Peel e_k^a with k the support size and a the smallest positive
    // exponent, until nothing is left.
    for (;;) {
      std::size_t k = 0;
      std::int64_t a = 0;
      for (auto v : e) {
        if (v > 0) {
          ++k;
          a = (a == 0) ? v : std::min(a, v);
        }
      }
      if (k == 0) break;
      t.eExps[k - 1] += a;
      for (std::size_t i = 0; i < k; ++i) e[i] -= a;
    }
    t.eExps[n - 1] = checkedAdd(t.eExps[n - 1], -shift);
    g.terms.push_back(std::move(t));
  }
  return g;
}

std::pair<GeneratorExpr, GeneratorExpr> decomposeSymmetricRational(const TropRational& r,
                                                                   const SymLimits& limits) {
  SymmetryCheck check = checkSymmetric(r);
  if (!check.symmetric) {
    throw Error(ErrorCode::kNotSymmetric,
                "rational function is not symmetric under the transposition (x" +
                    std::to_string(check.transposition->first + 1) + " x" +
                    std::to_string(check.transposition->second + 1) + ")");
  }
  return {decomposeSymmetric(symmetrize(r.num, limits)), decomposeSymmetric(symmetrize(r.den, limits))};
}

std::vector<std::optional<Point>> termDeletionWitnesses(const GeneratorExpr& g) {
  Poly full = expand(g);
  std::vector<std::optional<Point>> out;
  for (std::size_t i = 0; i < g.terms.size(); ++i) {
    if (g.terms.size() == 1) {
      // Deleting the only term leaves the empty sum, INF everywhere.
      out.emplace_back(Point(g.n, Rational(0)));
      continue;
    }
    GeneratorExpr reduced = g;
    reduced.terms.erase(reduced.terms.begin() + static_cast<std::ptrdiff_t>(i));
    EquivResult eq = polyEquiv(expand(reduced), full);
    out.push_back(eq.equivalent ? std::nullopt : eq.witness);
  }
  return out;
}

std::vector<Rational> orbitFingerprint(std::span<const Rational> x) {
  std::vector<Rational> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Rational> out(sorted.size());
  Rational acc = 0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    acc += sorted[k];
    out[k] = acc;
  }
  return out;
}

std::string toString(const GeneratorExpr& g) {
  std::string s;
  for (std::size_t i = 0; i < g.terms.size(); ++i) {
    if (i) s += " ⊕ ";
    const auto& t = g.terms[i];
    std::vector<std::string> factors;
    if (sgn(t.coeff) != 0) factors.push_back(toString(t.coeff));
    for (std::size_t k = 0; k < t.eExps.size(); ++k) {
      if (t.eExps[k] == 0) continue;
      std::string f = "e" + std::to_string(k + 1);
      if (t.eExps[k] != 1) f += "^" + std::to_string(t.eExps[k]);
      factors.push_back(f);
    }
    if (factors.empty()) factors.push_back("0");
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (j) s += " ⊙ ";
      s += factors[j];
    }
  }
  return s;
}

}  // namespace tropsym
