#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "tropsym/poly.hpp"

namespace tropsym::testing {

using Rng = std::mt19937_64;

inline Rational randomRational(Rng& rng, long numRange = 20, long denMax = 6) {
  std::uniform_int_distribution<long> num(-numRange, numRange);
  std::uniform_int_distribution<long> den(1, denMax);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Point randomPoint(Rng& rng, std::size_t n, long numRange = 20, long denMax = 6) {
  Point x(n);
  for (auto& v : x) v = randomRational(rng, numRange, denMax);
  return x;
}

inline Exponents randomExponents(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  Exponents e(n);
  for (auto& v : e) v = d(rng);
  return e;
}

inline std::vector<Monomial> randomMonomials(Rng& rng, std::size_t n, std::size_t count, std::int64_t lo,
                                             std::int64_t hi, long coeffRange = 5) {
  std::vector<Monomial> out;
  std::uniform_int_distribution<long> c(-coeffRange, coeffRange);
  for (std::size_t i = 0; i < count; ++i) out.push_back(Monomial{Rational(c(rng)), randomExponents(rng, n, lo, hi)});
  return out;
}

inline Poly randomPoly(Rng& rng, std::size_t n, std::size_t count, std::int64_t lo, std::int64_t hi,
                       long coeffRange = 5) {
  return Poly(n, randomMonomials(rng, n, count, lo, hi, coeffRange));
}

// min over the raw monomial list, with no normalization at all.
inline Rational bruteEval(const std::vector<Monomial>& monos, const Point& x) {
  Rational best = monos.front().evaluate(x);
  for (const auto& m : monos) best = std::min(best, m.evaluate(x));
  return best;
}

// Integer grid [-r, r]^n with step 1/den.
inline std::vector<Point> grid(std::size_t n, long r, long den) {
  std::vector<Point> pts{Point{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Point> next;
    for (const auto& p : pts) {
      for (long k = -r * den; k <= r * den; ++k) {
        Point q = p;
        Rational v(k, den);
        v.canonicalize();
        q.push_back(v);
        next.push_back(std::move(q));
      }
    }
    pts = std::move(next);
  }
  return pts;
}

}  // namespace tropsym::testing
