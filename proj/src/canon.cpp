#include "tropsym/canon.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "tropsym/error.hpp"
#include "tropsym/simplex.hpp"

namespace tropsym {

Rational AffineForm::evaluate(std::span<const Rational> x) const {
  Rational v = constant;
  for (std::size_t i = 0; i < linear.size(); ++i) {
    if (sgn(linear[i]) != 0) v += linear[i] * x[i];
  }
  return v;
}

std::optional<Point> strictFeasiblePoint(std::span<const AffineForm> forms, std::size_t dim) {
  if (forms.empty()) return Point(dim, Rational(0));
  for (const auto& f : forms) {
    if (f.linear.size() != dim) throw Error(ErrorCode::kDimensionMismatch, "affine form dimension mismatch");
  }
  // Dual of  max t  s.t.  c_k + d_k.x >= t, t <= 1:
  //   min sum c_k y_k + z  s.t.  sum y_k d_k = 0, sum y_k + z = 1, y, z >= 0.
  // Its multipliers pi give the primal point x = -pi_x, t = pi_t.
  const std::size_t k = forms.size();
  StandardLp lp;
  lp.a.assign(dim + 1, std::vector<Rational>(k + 1));
  lp.b.assign(dim + 1, Rational(0));
  lp.c.resize(k + 1);
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t i = 0; i < dim; ++i) lp.a[i][s] = forms[s].linear[i];
    lp.a[dim][s] = 1;
    lp.c[s] = forms[s].constant;
  }
  lp.a[dim][k] = 1;
  lp.c[k] = 1;
  lp.b[dim] = 1;

  LpResult res = solveLp(lp);
  if (res.status != LpResult::Status::kOptimal) {
    throw Error(ErrorCode::kInternal, "strict feasibility LP did not reach an optimum");
  }
  if (sgn(res.value) <= 0) return std::nullopt;

  Point x(dim);
  for (std::size_t i = 0; i < dim; ++i) x[i] = -res.dual[i];
  for (const auto& f : forms) {
    if (sgn(f.evaluate(x)) <= 0) throw Error(ErrorCode::kInternal, "LP witness failed exact verification");
  }
  return x;
}

namespace {

// g(x) = (b + <v,x>) - (a + <u,x>) for monomials a x^u and b x^v.
AffineForm difference(const Monomial& lower, const Monomial& upper) {
  AffineForm f;
  f.constant = upper.coeff - lower.coeff;
  f.linear.resize(lower.exps.size());
  for (std::size_t i = 0; i < lower.exps.size(); ++i) {
    f.linear[i] = fromInt(upper.exps[i] - lower.exps[i]);
  }
  return f;
}

std::optional<Point> strictMinimizerPoint(const std::vector<Monomial>& monos, std::size_t j,
                                          std::size_t nVars) {
  std::vector<AffineForm> forms;
  forms.reserve(monos.size());
  for (std::size_t s = 0; s < monos.size(); ++s) {
    if (s != j) forms.push_back(difference(monos[j], monos[s]));
  }
  return strictFeasiblePoint(forms, nVars);
}

// Deterministic probe points: small random rationals on a fixed seed.
std::vector<Point> probePoints(std::size_t nVars, std::size_t count) {
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 7);
  std::vector<Point> pts(count, Point(nVars));
  for (auto& p : pts) {
    for (auto& v : p) {
      v = Rational(num(rng), den(rng));
      v.canonicalize();
    }
  }
  return pts;
}

// Index of the strict unique minimizer at x, if any.
std::optional<std::size_t> uniqueArgmin(const std::vector<Monomial>& monos, std::span<const Rational> x) {
  std::optional<std::size_t> best;
  Rational bestVal;
  bool tie = false;
  for (std::size_t s = 0; s < monos.size(); ++s) {
    Rational v = monos[s].evaluate(x);
    if (!best || v < bestVal) {
      best = s;
      bestVal = v;
      tie = false;
    } else if (v == bestVal) {
      tie = true;
    }
  }
  if (tie) return std::nullopt;
  return best;
}

}  // namespace

EssentialityCertificate isEssential(const Poly& p, std::size_t j) {
  if (j >= p.size()) throw Error(ErrorCode::kInvalidArgument, "monomial index out of range");
  EssentialityCertificate cert;
  cert.monomialIndex = j;
  cert.witness = strictMinimizerPoint(p.monomials(), j, p.nVars());
  cert.essential = cert.witness.has_value();
  return cert;
}

namespace {

// Adjacent variable swaps and adjacent block swaps (pairs of variables) that
// map p to itself. Essentiality is constant on orbits of these permutations.
std::vector<std::vector<std::size_t>> formalSymmetries(const Poly& p) {
  const std::size_t n = p.nVars();
  std::vector<std::vector<std::size_t>> candidates;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<std::size_t> perm(n);
    for (std::size_t v = 0; v < n; ++v) perm[v] = v;
    std::swap(perm[i], perm[i + 1]);
    candidates.push_back(std::move(perm));
  }
  if (n % 2 == 0) {
    for (std::size_t i = 0; i + 3 < n; i += 2) {
      std::vector<std::size_t> perm(n);
      for (std::size_t v = 0; v < n; ++v) perm[v] = v;
      std::swap(perm[i], perm[i + 2]);
      std::swap(perm[i + 1], perm[i + 3]);
      candidates.push_back(std::move(perm));
    }
  }
  std::vector<std::vector<std::size_t>> fixing;
  for (auto& perm : candidates) {
    if (permuteVariables(p, perm) == p) fixing.push_back(std::move(perm));
  }
  return fixing;
}

// Indices of the monomials in the orbit of monos[start]; monos is sorted by
// exponents and closed under every permutation in gens.
std::vector<std::size_t> monomialOrbit(const std::vector<Monomial>& monos, std::size_t start,
                                       const std::vector<std::vector<std::size_t>>& gens) {
  auto indexOf = [&](const Exponents& e) {
    auto it = std::lower_bound(monos.begin(), monos.end(), e,
                               [](const Monomial& m, const Exponents& v) { return m.exps < v; });
    if (it == monos.end() || it->exps != e) throw Error(ErrorCode::kInternal, "symmetry maps a monomial outside p");
    return static_cast<std::size_t>(it - monos.begin());
  };
  std::vector<std::size_t> orbit{start};
  std::set<std::size_t> seen{start};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& perm : gens) {
      const Exponents& src = monos[orbit[head]].exps;
      Exponents e(src.size());
      for (std::size_t v = 0; v < e.size(); ++v) e[perm[v]] = src[v];
      std::size_t j = indexOf(e);
      if (seen.insert(j).second) orbit.push_back(j);
    }
  }
  return orbit;
}

}  // namespace

Poly minimalRepresentation(const Poly& p) {
  if (p.size() == 1) return p;
  const auto& monos = p.monomials();
  std::vector<bool> known(monos.size(), false);
  for (const auto& x : probePoints(p.nVars(), 16)) {
    if (auto s = uniqueArgmin(monos, x)) known[*s] = true;
  }
  const auto gens = formalSymmetries(p);
  // A redundant monomial can be dropped before testing the rest: it never
  // undercuts the others, so essentiality against the remainder is unchanged.
  // The same holds for a whole orbit of redundant monomials at once.
  std::vector<bool> removed(monos.size(), false);
  std::vector<bool> decided(monos.size(), false);
  for (std::size_t i = monos.size(); i-- > 0;) {
    if (decided[i]) continue;
    std::vector<std::size_t> orbit = gens.empty() ? std::vector<std::size_t>{i} : monomialOrbit(monos, i, gens);
    bool essential = false;
    for (std::size_t j : orbit) essential = essential || known[j];
    if (!essential) {
      std::vector<Monomial> kept;
      std::size_t at = 0;
      for (std::size_t j = 0; j < monos.size(); ++j) {
        if (removed[j]) continue;
        if (j == i) at = kept.size();
        kept.push_back(monos[j]);
      }
      essential = strictMinimizerPoint(kept, at, p.nVars()).has_value();
    }
    for (std::size_t j : orbit) {
      decided[j] = true;
      removed[j] = !essential;
    }
  }
  std::vector<Monomial> out;
  for (std::size_t j = 0; j < monos.size(); ++j) {
    if (!removed[j]) out.push_back(monos[j]);
  }
  return Poly(p.nVars(), std::move(out));
}

namespace {

std::optional<Point> firstDifference(const Poly& p, const Poly& q) {
  for (const auto& x : probePoints(p.nVars(), 8)) {
    if (evalPoly(p, x) != evalPoly(q, x)) return x;
  }
  return std::nullopt;
}

bool contains(const Poly& p, const Monomial& m) {
  for (const auto& n : p.monomials()) {
    if (n == m) return true;
  }
  return false;
}

// mu is essential in cp and absent from cq. Finds x with p(x) != q(x).
Point separatingPoint(const Poly& cp, const Poly& cq, const Monomial& mu) {
  const std::size_t n = cp.nVars();
  std::vector<Monomial> both(cp.monomials());
  both.insert(both.end(), cq.monomials().begin(), cq.monomials().end());
  Poly joint(n, both);
  for (std::size_t j = 0; j < joint.size(); ++j) {
    if (joint[j] == mu) {
      if (auto x = strictMinimizerPoint(joint.monomials(), j, n)) return *x;
      break;
    }
  }
  // On the region where mu is p's strict minimizer, q must dip below mu.
  std::vector<AffineForm> region;
  for (const auto& m : cp.monomials()) {
    if (!(m == mu)) region.push_back(difference(mu, m));
  }
  for (const auto& nu : cq.monomials()) {
    std::vector<AffineForm> forms(region);
    forms.push_back(difference(nu, mu));
    if (auto x = strictFeasiblePoint(forms, n)) return *x;
  }
  throw Error(ErrorCode::kInternal, "no separating point for distinct canonical forms");
}

}  // namespace

EquivResult polyEquiv(const Poly& p, const Poly& q) {
  if (p.nVars() != q.nVars()) throw Error(ErrorCode::kDimensionMismatch, "polynomials have different nVars");
  EquivResult res;
  if (p == q) {
    res.equivalent = true;
    return res;
  }
  if (auto x = firstDifference(p, q)) {
    res.witness = std::move(x);
    return res;
  }
  Poly cp = minimalRepresentation(p);
  Poly cq = minimalRepresentation(q);
  if (cp == cq) {
    res.equivalent = true;
    return res;
  }
  for (const auto& mu : cp.monomials()) {
    if (!contains(cq, mu)) {
      res.witness = separatingPoint(cp, cq, mu);
      return res;
    }
  }
  for (const auto& mu : cq.monomials()) {
    if (!contains(cp, mu)) {
      res.witness = separatingPoint(cq, cp, mu);
      return res;
    }
  }
  throw Error(ErrorCode::kInternal, "canonical forms differ without a distinguishing monomial");
}

EquivResult rationalEquiv(const TropRational& r, const TropRational& s) {
  if (r.nVars() != s.nVars()) throw Error(ErrorCode::kDimensionMismatch, "rational expressions have different nVars");
  return polyEquiv(polyMul(r.num, s.den), polyMul(s.num, r.den));
}

TropRational canonicalize(const TropRational& r) {
  return TropRational(minimalRepresentation(r.num), minimalRepresentation(r.den));
}

}  // namespace tropsym
