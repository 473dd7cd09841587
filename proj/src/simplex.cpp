#include "tropsym/simplex.hpp"

#include <optional>

#include "tropsym/error.hpp"

namespace tropsym {

namespace {

// Dense tableau. Columns [0, nReal) are the LP's own variables, columns
// [nReal, nReal + m) the Phase I artificials (one per row, initially basic).
class Tableau {
 public:
  Tableau(const StandardLp& lp) : m_(lp.b.size()), nReal_(lp.c.size()) {
    rows_.assign(m_, std::vector<Rational>(nReal_ + m_));
    rhs_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      bool flip = lp.b[i] < 0;
      for (std::size_t j = 0; j < nReal_; ++j) rows_[i][j] = flip ? Rational(-lp.a[i][j]) : lp.a[i][j];
      rows_[i][nReal_ + i] = 1;
      rhs_[i] = flip ? Rational(-lp.b[i]) : lp.b[i];
      flipped_.push_back(flip);
    }
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) basis_[i] = nReal_ + i;
    active_.assign(m_, true);
  }

  // Runs simplex for cost vector `cost` (length nReal + m) over columns
  // allowed by `enterable`. Returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost, std::size_t enterLimit) {
    for (;;) {
      std::vector<Rational> reduced = reducedCosts(cost);
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < enterLimit; ++j) {
        if (isBasic(j)) continue;
        if (reduced[j] < 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return true;
      // Ratio test, ties broken by the lowest basic variable index.
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!active_[i] || sgn(rows_[i][*enter]) <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  std::vector<Rational> reducedCosts(const std::vector<Rational>& cost) const {
    std::vector<Rational> reduced(cost);
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i]) continue;
      const Rational& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < reduced.size(); ++j) {
        if (sgn(rows_[i][j]) != 0) reduced[j] -= cb * rows_[i][j];
      }
    }
    return reduced;
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (active_[i]) v += cost[basis_[i]] * rhs_[i];
    }
    return v;
  }

  // After Phase I: pivot every artificial still basic (at level zero) onto a
  // real column, or retire its row as redundant.
  void driveOutArtificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i] || basis_[i] < nReal_) continue;
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < nReal_; ++j) {
        if (!isBasic(j) && sgn(rows_[i][j]) != 0) {
          col = j;
          break;
        }
      }
      if (col) {
        pivot(i, *col);
      } else {
        active_[i] = false;
      }
    }
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> y(nReal_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (active_[i] && basis_[i] < nReal_) y[basis_[i]] = rhs_[i];
    }
    return y;
  }

  // pi_i = -(reduced cost of artificial i), undone for flipped rows.
  std::vector<Rational> dual(const std::vector<Rational>& cost) const {
    std::vector<Rational> reduced = reducedCosts(cost);
    std::vector<Rational> pi(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      pi[i] = -reduced[nReal_ + i];
      if (flipped_[i]) pi[i] = -pi[i];
    }
    return pi;
  }

  std::size_t rows() const { return m_; }
  std::size_t realColumns() const { return nReal_; }

 private:
  bool isBasic(std::size_t j) const {
    for (std::size_t i = 0; i < m_; ++i) {
      if (active_[i] && basis_[i] == j) return true;
    }
    return false;
  }

  void pivot(std::size_t r, std::size_t q) {
    Rational inv = 1 / rows_[r][q];
    for (auto& v : rows_[r]) {
      if (sgn(v) != 0) v *= inv;
    }
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || sgn(rows_[i][q]) == 0) continue;
      Rational f = rows_[i][q];
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        if (sgn(rows_[r][j]) != 0) rows_[i][j] -= f * rows_[r][j];
      }
      rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = q;
  }

  std::size_t m_;
  std::size_t nReal_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<bool> flipped_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
};

}  // namespace

LpResult solveLp(const StandardLp& lp) {
  const std::size_t m = lp.b.size();
  const std::size_t n = lp.c.size();
  if (lp.a.size() != m) throw Error(ErrorCode::kDimensionMismatch, "LP row count mismatch");
  for (const auto& row : lp.a) {
    if (row.size() != n) throw Error(ErrorCode::kDimensionMismatch, "LP column count mismatch");
  }

  Tableau t(lp);
  LpResult result;

  std::vector<Rational> phase1(n + m);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  t.optimize(phase1, n);
  if (sgn(t.objective(phase1)) > 0) {
    result.status = LpResult::Status::kInfeasible;
    return result;
  }
  t.driveOutArtificials();

  std::vector<Rational> cost(n + m);
  for (std::size_t j = 0; j < n; ++j) cost[j] = lp.c[j];
  if (!t.optimize(cost, n)) {
    result.status = LpResult::Status::kUnbounded;
    return result;
  }
  result.status = LpResult::Status::kOptimal;
  result.value = t.objective(cost);
  result.primal = t.primal();
  result.dual = t.dual(cost);
  return result;
}

}  // namespace tropsym
