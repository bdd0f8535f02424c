#include "resloc/linalg.hpp"

#include <utility>

#include "resloc/error.hpp"

namespace resloc {

Mat identity_matrix(size_t n) {
  Mat m(n, Vec(n));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat transpose(const Mat& m) {
  if (m.empty()) return {};
  Mat t(m[0].size(), Vec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

Mat matmul(const Mat& a, const Mat& b) {
  Mat r(a.size(), Vec(b.empty() ? 0 : b[0].size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (size_t j = 0; j < b[k].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Vec row_times(const Vec& row, const Mat& m) {
  Vec r(m.empty() ? 0 : m[0].size());
  for (size_t k = 0; k < m.size(); ++k) {
    if (sgn(row[k]) == 0) continue;
    for (size_t j = 0; j < r.size(); ++j) r[j] += row[k] * m[k][j];
  }
  return r;
}

Vec times_col(const Mat& m, const Vec& col) {
  Vec r(m.size());
  for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], col);
  return r;
}

std::vector<size_t> rref(Mat& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (size_t k = c; k < cols; ++k) m[r][k] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t rank_of(const Mat& rows) {
  Mat m(rows);
  return rref(m).size();
}

Rational determinant(Mat m) {
  size_t n = m.size();
  Rational det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return det;
}

std::optional<Mat> inverse(const Mat& m) {
  size_t n = m.size();
  Mat aug(n, Vec(2 * n));
  for (size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error(ErrorKind::InvalidInput, "inverse of non-square matrix");
    for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, Vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::optional<Vec> solve_square(const Mat& m, const Vec& b) {
  auto inv = inverse(m);
  if (!inv) return std::nullopt;
  return times_col(*inv, b);
}

Mat kernel(const Mat& m) {
  if (m.empty()) return {};
  Mat r(m);
  auto piv = rref(r);
  size_t cols = m[0].size();
  std::vector<bool> is_piv(cols, false);
  for (auto p : piv) is_piv[p] = true;
  Mat basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Vec v(cols);
    v[f] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r[i][f];
    basis.push_back(v);
  }
  return basis;
}

bool in_row_span(const Mat& rows, const Vec& v) {
  Mat m(rows);
  size_t r0 = rank_of(m);
  m.push_back(v);
  return rank_of(m) == r0;
}

namespace {

IMat int_identity(size_t n) {
  IMat m(n, IVec(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void swap_rows(IMat& m, size_t a, size_t b) { std::swap(m[a], m[b]); }
void swap_cols(IMat& m, size_t a, size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}
// row a -= q * row b
void add_row(IMat& m, size_t a, size_t b, const Integer& q) {
  for (size_t j = 0; j < m[a].size(); ++j) m[a][j] -= q * m[b][j];
}
void add_col(IMat& m, size_t a, size_t b, const Integer& q) {
  for (auto& row : m) row[a] -= q * row[b];
}

}  // namespace

SmithForm smith_normal_form(const IMat& input) {
  size_t rows = input.size(), cols = rows ? input[0].size() : 0;
  SmithForm s{int_identity(rows), input, int_identity(cols)};
  IMat& d = s.d;
  for (size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // smallest nonzero entry in the trailing block becomes the pivot
      size_t pr = rows, pc = cols;
      for (size_t i = t; i < rows; ++i)
        for (size_t j = t; j < cols; ++j)
          if (d[i][j] != 0 && (pr == rows || abs(d[i][j]) < abs(d[pr][pc]))) pr = i, pc = j;
      if (pr == rows) return s;
      swap_rows(d, t, pr);
      swap_rows(s.u, t, pr);
      swap_cols(d, t, pc);
      swap_cols(s.v, t, pc);
      bool clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (d[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d[i][t].get_mpz_t(), d[t][t].get_mpz_t());
        add_row(d, i, t, q);
        add_row(s.u, i, t, q);
        if (d[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (d[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d[t][j].get_mpz_t(), d[t][t].get_mpz_t());
        add_col(d, j, t, q);
        add_col(s.v, j, t, q);
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the remaining block
      bool divides = true;
      for (size_t i = t + 1; i < rows && divides; ++i)
        for (size_t j = t + 1; j < cols; ++j)
          if (d[i][j] % d[t][t] != 0) {
            add_row(d, t, i, Integer(-1));
            add_row(s.u, t, i, Integer(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : s.u[t]) x = -x;
    }
  }
  return s;
}

bool in_lattice_span(const Mat& generators, const Vec& y) {
  if (generators.empty()) return is_zero(y);
  Integer l = lcm_of_denominators(y);
  for (const auto& g : generators) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), lcm_of_denominators(g).get_mpz_t());
  IMat g(generators.size(), IVec(y.size()));
  for (size_t i = 0; i < generators.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j) {
      Rational v = generators[i][j] * l;
      g[i][j] = v.get_num();
    }
  IVec yy(y.size());
  for (size_t j = 0; j < y.size(); ++j) yy[j] = Rational(y[j] * l).get_num();
  // x g = y  <=>  (x u^-1) d = y v
  SmithForm s = smith_normal_form(g);
  size_t rows = g.size(), cols = y.size();
  IVec yv(cols, 0);
  for (size_t j = 0; j < cols; ++j)
    for (size_t k = 0; k < cols; ++k) yv[j] += yy[k] * s.v[k][j];
  for (size_t j = 0; j < cols; ++j) {
    Integer dj = j < rows ? s.d[j][j] : Integer(0);
    if (dj == 0) {
      if (yv[j] != 0) return false;
    } else if (yv[j] % dj != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace resloc
