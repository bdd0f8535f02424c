#include "resloc/lattice.hpp"

#include <functional>
#include <set>
#include <string>

#include "resloc/error.hpp"

namespace resloc {

Lattice::Lattice(Mat basis) : basis_(std::move(basis)) {
  auto inv = inverse(basis_);
  if (!inv) throw Error(ErrorKind::InvalidInput, "lattice basis is singular");
  inv_ = std::move(*inv);
}

Lattice Lattice::standard(size_t n) { return Lattice(identity_matrix(n)); }

Lattice Lattice::from_generators(const Mat& gens) {
  if (gens.empty()) throw Error(ErrorKind::InvalidInput, "no generators");
  size_t n = gens[0].size();
  Integer l = 1;
  for (const auto& g : gens) {
    Integer d = lcm_of_denominators(g);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  IMat m;
  for (const auto& g : gens) {
    IVec row(n);
    for (size_t j = 0; j < n; ++j) row[j] = Rational(g[j] * l).get_num();
    m.push_back(row);
  }
  // Row-style Hermite reduction by repeated Euclid steps on each column.
  size_t r = 0;
  for (size_t c = 0; c < n && r < m.size(); ++c) {
    for (;;) {
      size_t best = m.size();
      for (size_t i = r; i < m.size(); ++i)
        if (sgn(m[i][c]) != 0 && (best == m.size() || abs(m[i][c]) < abs(m[best][c]))) best = i;
      if (best == m.size()) break;
      std::swap(m[r], m[best]);
      bool done = true;
      for (size_t i = r + 1; i < m.size(); ++i) {
        if (sgn(m[i][c]) == 0) continue;
        Integer qt;
        mpz_fdiv_q(qt.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        for (size_t j = 0; j < n; ++j) m[i][j] -= qt * m[r][j];
        if (sgn(m[i][c]) != 0) done = false;
      }
      if (done) break;
    }
    if (r < m.size() && sgn(m[r][c]) != 0) ++r;
  }
  if (r != n) throw Error(ErrorKind::InvalidInput, "generators do not have full rank");
  Mat basis(n, Vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) basis[i][j] = Rational(m[i][j]) / Rational(l);
  return Lattice(basis);
}

Lattice Lattice::dual() const { return Lattice(transpose(inv_)); }

Lattice Lattice::scaled(const Rational& c) const {
  Mat b(basis_);
  for (auto& row : b) row = scale(row, c);
  return Lattice(b);
}

Vec Lattice::coordinates(const Vec& v) const {
  if (v.size() != dim()) throw Error(ErrorKind::InvalidInput, "dimension mismatch with lattice");
  return row_times(v, inv_);
}

bool Lattice::contains(const Vec& v) const {
  for (const auto& c : coordinates(v))
    if (!is_integer(c)) return false;
  return true;
}

bool Lattice::contains(const Lattice& sub) const {
  for (const auto& b : sub.basis())
    if (!contains(b)) return false;
  return true;
}

Vec Lattice::reduce(const Vec& v) const {
  Vec c = coordinates(v);
  for (auto& x : c) x = frac_of(x);
  return row_times(c, basis_);
}

Rational Lattice::covolume() const { return abs(determinant(basis_)); }

std::vector<Vec> quotient_representatives(const Lattice& sub, const Lattice& sup) {
  if (!sup.contains(sub)) throw Error(ErrorKind::NotInLattice, "sublattice is not contained in the lattice");
  size_t n = sup.dim();
  IMat m(n, IVec(n));
  for (size_t i = 0; i < n; ++i) {
    Vec c = sup.coordinates(sub.basis()[i]);
    for (size_t j = 0; j < n; ++j) m[i][j] = c[j].get_num();
  }
  SmithForm s = smith_normal_form(m);
  Mat vinv;
  {
    Mat v(n, Vec(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) v[i][j] = s.v[i][j];
    vinv = *inverse(v);
  }
  Integer count = 1;
  for (size_t i = 0; i < n; ++i) count *= s.d[i][i];
  if (count > 10000000) throw Error(ErrorKind::TooLarge, "quotient has too many elements");
  std::vector<Vec> reps;
  std::vector<long> y(n, 0);
  while (true) {
    Vec yv(n);
    for (size_t i = 0; i < n; ++i) yv[i] = y[i];
    Vec x = row_times(yv, vinv);
    reps.push_back(sub.reduce(row_times(x, sup.basis())));
    size_t i = 0;
    for (; i < n; ++i) {
      if (++y[i] < s.d[i][i].get_si()) break;
      y[i] = 0;
    }
    if (i == n) break;
  }
  return reps;
}

Integer minimal_multiple(const Vec& x, const Lattice& lambda_dual) {
  if (is_zero(x)) throw Error(ErrorKind::InvalidInput, "minimal multiple of zero");
  return lcm_of_denominators(lambda_dual.coordinates(x));
}

Rational primitive_multiple(const Vec& x, const Lattice& lat) {
  if (is_zero(x)) throw Error(ErrorKind::InvalidInput, "primitive multiple of zero");
  Vec c = lat.coordinates(x);
  Integer l = lcm_of_denominators(c), g = 0;
  for (const auto& v : c) {
    Rational s = v * l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  return Rational(l) / Rational(g);
}

std::vector<Mat> maximal_flats(const Mat& forms, size_t n) {
  size_t r = rank_of(forms);
  size_t target = std::min(r, n - 1);
  std::vector<Mat> flats;
  std::set<std::vector<std::string>> seen;
  if (target == 0) {
    flats.push_back({});
    return flats;
  }
  std::vector<size_t> idx;
  // enumerate independent subsets of size target
  std::function<void(size_t)> rec = [&](size_t start) {
    if (idx.size() == target) {
      Mat m;
      for (auto i : idx) m.push_back(forms[i]);
      if (rank_of(m) != target) return;
      rref(m);
      std::vector<std::string> key;
      for (const auto& row : m) key.push_back(vec_to_string(row));
      if (seen.insert(key).second) flats.push_back(m);
      return;
    }
    for (size_t i = start; i < forms.size(); ++i) {
      idx.push_back(i);
      Mat m;
      for (auto j : idx) m.push_back(forms[j]);
      if (rank_of(m) == idx.size()) rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
  return flats;
}

bool is_special(const Vec& t, const Lattice& lat, const Mat& forms) {
  size_t n = lat.dim();
  for (const auto& flat : maximal_flats(forms, n)) {
    // annihilator of the flat, then test membership of the image
    Mat ann = flat.empty() ? identity_matrix(n) : kernel(flat);
    Mat gens;
    for (const auto& b : lat.basis()) gens.push_back(times_col(ann, b));
    if (in_lattice_span(gens, times_col(ann, t))) return true;
  }
  return false;
}

Rational box_volume(const Mat& forms, const Lattice& lat) {
  Mat c;
  for (const auto& f : forms) {
    if (!lat.contains(f)) throw Error(ErrorKind::NotInLattice, "box form not in lattice: " + vec_to_string(f));
    c.push_back(lat.coordinates(f));
  }
  return abs(determinant(c));
}

std::vector<Vec> box_characters(const Mat& forms, const Lattice& lat, const Vec& t, const Vec& mu) {
  size_t n = lat.dim();
  if (forms.size() != n) throw Error(ErrorKind::InvalidInput, "box needs n forms");
  if (sgn(box_volume(forms, lat)) == 0) throw Error(ErrorKind::DependentTuple, "box forms are dependent");
  Lattice span_lat(forms);
  Mat yinv = *inverse(forms);
  std::vector<Vec> out;
  for (const auto& r : quotient_representatives(span_lat, lat)) {
    Vec nu = row_times(sub(add(t, r), mu), yinv);
    Vec shift(n);
    for (size_t i = 0; i < n; ++i) {
      if (is_integer(nu[i]))
        throw Error(ErrorKind::BoundaryHit, "character lies on the boundary of the box");
      shift[i] = -floor_of(nu[i]);
    }
    out.push_back(add(add(t, r), row_times(shift, forms)));
  }
  return out;
}

}  // namespace resloc
