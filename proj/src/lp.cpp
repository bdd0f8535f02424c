#include "resloc/lp.hpp"

#include "resloc/error.hpp"

namespace resloc {

namespace {

// Dense tableau simplex with Bland's rule. Rows: A x = b (b >= 0), x >= 0.
class Tableau {
 public:
  Tableau(const Mat& a, const Vec& b, size_t nvars) : m_(a.size()), n_(nvars) {
    t_.assign(m_ + 1, Vec(n_ + 1));
    for (size_t i = 0; i < m_; ++i) {
      for (size_t j = 0; j < n_; ++j) t_[i][j] = a[i][j];
      t_[i][n_] = b[i];
    }
    basis_.assign(m_, SIZE_MAX);
  }

  // Maximize obj.x from the current basis. Returns false if unbounded.
  bool optimize(const Vec& obj, const std::vector<bool>& allowed) {
    set_objective(obj);
    while (true) {
      size_t enter = SIZE_MAX;
      for (size_t j = 0; j < n_; ++j)
        if (allowed[j] && sgn(t_[m_][j]) < 0) {
          enter = j;
          break;
        }
      if (enter == SIZE_MAX) return true;
      size_t leave = SIZE_MAX;
      Rational best;
      for (size_t i = 0; i < m_; ++i) {
        if (sgn(t_[i][enter]) <= 0) continue;
        Rational ratio = t_[i][n_] / t_[i][enter];
        if (leave == SIZE_MAX || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == SIZE_MAX) return false;
      pivot(leave, enter);
    }
  }

  void pivot(size_t r, size_t c) {
    Rational inv = 1 / t_[r][c];
    for (auto& x : t_[r]) x *= inv;
    for (size_t i = 0; i <= m_; ++i) {
      if (i == r || sgn(t_[i][c]) == 0) continue;
      Rational f = t_[i][c];
      for (size_t j = 0; j <= n_; ++j)
        if (sgn(t_[r][j]) != 0) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  void set_objective(const Vec& obj) {
    Vec& z = t_[m_];
    for (size_t j = 0; j <= n_; ++j) z[j] = j < n_ ? Rational(-obj[j]) : Rational(0);
    for (size_t i = 0; i < m_; ++i) {
      size_t b = basis_[i];
      if (b == SIZE_MAX || sgn(z[b]) == 0) continue;
      Rational f = z[b];
      for (size_t j = 0; j <= n_; ++j) z[j] -= f * t_[i][j];
    }
  }

  Rational value() const { return t_[m_][n_]; }
  Vec solution() const {
    Vec x(n_);
    for (size_t i = 0; i < m_; ++i)
      if (basis_[i] != SIZE_MAX) x[basis_[i]] = t_[i][n_];
    return x;
  }
  size_t rows() const { return m_; }
  size_t basis(size_t i) const { return basis_[i]; }
  void set_basis(size_t i, size_t j) { basis_[i] = j; }
  const Rational& at(size_t i, size_t j) const { return t_[i][j]; }

 private:
  size_t m_, n_;
  Mat t_;
  std::vector<size_t> basis_;
};

}  // namespace

LpResult lp_maximize(const Vec& c, const Mat& a_le, const Vec& b_le, const Mat& a_eq, const Vec& b_eq,
                     const std::vector<bool>& free_vars) {
  size_t n = c.size();
  // column layout: x (free vars split into +/-), slacks, artificials
  std::vector<size_t> pos(n), neg(n, SIZE_MAX);
  size_t cols = 0;
  for (size_t j = 0; j < n; ++j) {
    pos[j] = cols++;
    if (free_vars[j]) neg[j] = cols++;
  }
  size_t nslack = a_le.size(), nrows = a_le.size() + a_eq.size();
  size_t slack0 = cols, art0 = cols + nslack, total = art0 + nrows;
  Mat a(nrows, Vec(total));
  Vec b(nrows);
  auto fill = [&](size_t r, const Vec& row, const Rational& rhs) {
    for (size_t j = 0; j < n; ++j) {
      a[r][pos[j]] = row[j];
      if (neg[j] != SIZE_MAX) a[r][neg[j]] = -row[j];
    }
    b[r] = rhs;
  };
  for (size_t i = 0; i < a_le.size(); ++i) {
    fill(i, a_le[i], b_le[i]);
    a[i][slack0 + i] = 1;
  }
  for (size_t i = 0; i < a_eq.size(); ++i) fill(a_le.size() + i, a_eq[i], b_eq[i]);
  for (size_t r = 0; r < nrows; ++r) {
    if (sgn(b[r]) < 0) {
      for (auto& x : a[r]) x = -x;
      b[r] = -b[r];
    }
    a[r][art0 + r] = 1;
  }
  Tableau tab(a, b, total);
  for (size_t r = 0; r < nrows; ++r) tab.set_basis(r, art0 + r);
  // phase 1: maximize -sum(artificials)
  Vec obj1(total);
  for (size_t r = 0; r < nrows; ++r) obj1[art0 + r] = -1;
  std::vector<bool> all(total, true);
  tab.optimize(obj1, all);
  if (sgn(tab.value()) != 0) return {LpResult::Status::Infeasible, {}, 0};
  // drive artificials out of the basis where possible
  for (size_t r = 0; r < nrows; ++r) {
    if (tab.basis(r) < art0) continue;
    for (size_t j = 0; j < art0; ++j)
      if (sgn(tab.at(r, j)) != 0) {
        tab.pivot(r, j);
        break;
      }
  }
  std::vector<bool> allowed(total, true);
  for (size_t j = art0; j < total; ++j) allowed[j] = false;
  Vec obj2(total);
  for (size_t j = 0; j < n; ++j) {
    obj2[pos[j]] = c[j];
    if (neg[j] != SIZE_MAX) obj2[neg[j]] = -c[j];
  }
  if (!tab.optimize(obj2, allowed)) return {LpResult::Status::Unbounded, {}, 0};
  Vec sol = tab.solution(), x(n);
  for (size_t j = 0; j < n; ++j) {
    x[j] = sol[pos[j]];
    if (neg[j] != SIZE_MAX) x[j] -= sol[neg[j]];
  }
  return {LpResult::Status::Optimal, x, tab.value()};
}

std::optional<StrictWitness> lp_strict_feasible(size_t dim, const Mat& eq_a, const Vec& eq_b,
                                                const std::vector<StrictConstraint>& strict) {
  // variables: x (free), t in [0, 1]; maximize t
  size_t n = dim + 1;
  Mat a_le;
  Vec b_le;
  for (const auto& s : strict) {
    if (s.coeffs.size() != dim) throw Error(ErrorKind::InvalidInput, "constraint dimension mismatch");
    if (s.upper) {  // c.x + t <= upper
      Vec row(s.coeffs);
      row.push_back(1);
      a_le.push_back(row);
      b_le.push_back(*s.upper);
    }
    if (s.lower) {  // -c.x + t <= -lower
      Vec row = scale(s.coeffs, -1);
      row.push_back(1);
      a_le.push_back(row);
      b_le.push_back(-*s.lower);
    }
  }
  Vec cap(n);
  cap[dim] = 1;
  a_le.push_back(cap);
  b_le.push_back(1);
  Mat a_eq;
  for (const auto& row : eq_a) {
    Vec r(row);
    r.push_back(0);
    a_eq.push_back(r);
  }
  std::vector<bool> free_vars(n, true);
  free_vars[dim] = false;
  Vec obj(n);
  obj[dim] = 1;
  LpResult res = lp_maximize(obj, a_le, b_le, a_eq, eq_b, free_vars);
  if (res.status != LpResult::Status::Optimal || sgn(res.value) <= 0) return std::nullopt;
  Vec x(res.x.begin(), res.x.begin() + static_cast<long>(dim));
  return StrictWitness{x, res.value};
}

}  // namespace resloc
