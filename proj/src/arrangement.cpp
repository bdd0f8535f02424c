#include "resloc/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "resloc/error.hpp"

namespace resloc {

bool AffineForm::operator<(const AffineForm& o) const {
  if (linear != o.linear) return linear < o.linear;
  return constant < o.constant;
}

Mat Arrangement::directions() const {
  Mat m;
  for (const auto& f : forms) m.push_back(f.linear);
  return m;
}

Mat Vertex::directions() const {
  Mat m;
  for (const auto& f : forms) m.push_back(f.local.linear);
  return m;
}

bool proportional(const Vec& a, const Vec& b) { return rank_of({a, b}) <= 1; }

bool is_independent(const Mat& directions, const Tuple& tuple) {
  Mat m;
  for (auto i : tuple) m.push_back(directions.at(i));
  return rank_of(m) == tuple.size();
}

namespace {

std::vector<size_t> representatives(const Mat& dirs) {
  std::vector<size_t> reps;
  for (size_t i = 0; i < dirs.size(); ++i) {
    if (is_zero(dirs[i])) continue;
    bool dup = false;
    for (auto r : reps)
      if (proportional(dirs[r], dirs[i])) {
        dup = true;
        break;
      }
    if (!dup) reps.push_back(i);
  }
  return reps;
}

void for_each_subset(size_t n, size_t k, const std::function<void(const Tuple&)>& fn) {
  Tuple idx;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (idx.size() == k) {
      fn(idx);
      return;
    }
    for (size_t i = start; i + (k - idx.size()) <= n; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<Tuple> nbc_bases(const Mat& directions) {
  if (directions.empty()) return {};
  size_t n = directions[0].size();
  auto reps = representatives(directions);
  if (rank_of(directions) < n) throw Error(ErrorKind::InvalidInput, "arrangement directions do not span");
  std::vector<Tuple> out;
  for_each_subset(reps.size(), n, [&](const Tuple& sub) {
    Tuple ba;
    for (auto i : sub) ba.push_back(reps[i]);
    if (!is_independent(directions, ba)) return;
    for (auto h : reps) {
      if (std::find(ba.begin(), ba.end(), h) != ba.end()) continue;
      Tuple test{h};
      for (auto g : ba)
        if (g > h) test.push_back(g);
      if (!is_independent(directions, test)) return;
    }
    out.push_back(ba);
  });
  return out;
}

namespace {

bool same_span(const Mat& a, const Mat& b) {
  size_t ra = rank_of(a);
  if (ra != rank_of(b)) return false;
  Mat ab(a);
  ab.insert(ab.end(), b.begin(), b.end());
  return rank_of(ab) == ra;
}

// Is there an ordering of b with the same flag as a? The flag of a is the chain
// span(a_n) < span(a_{n-1}, a_n) < ... .
bool flag_match(const Mat& dirs, const Tuple& a, const Tuple& b) {
  size_t n = a.size();
  std::vector<bool> used(n, false);
  Mat chosen;
  std::function<bool(size_t)> rec = [&](size_t level) -> bool {
    if (level == n) return true;
    Mat target;
    for (size_t i = n - 1 - level; i < n; ++i) target.push_back(dirs[a[i]]);
    for (size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      Mat cand(chosen);
      cand.push_back(dirs[b[j]]);
      if (!same_span(cand, target)) continue;
      used[j] = true;
      chosen.push_back(dirs[b[j]]);
      if (rec(level + 1)) return true;
      chosen.pop_back();
      used[j] = false;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

bool is_orthogonal_basis(const Mat& directions, const std::vector<Tuple>& basis) {
  if (basis.size() != nbc_bases(directions).size()) return false;
  for (const auto& t : basis)
    if (!is_independent(directions, t) || t.size() != directions[0].size()) return false;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j)
      if (i != j && flag_match(directions, basis[i], basis[j])) return false;
  return true;
}

bool circuit_precedes(const Tuple& a, const Tuple& b) {
  // compare from the last element backwards; a longer sequence ending in b precedes b
  size_t la = a.size(), lb = b.size();
  for (size_t k = 0; k < std::min(la, lb); ++k) {
    size_t x = a[la - 1 - k], y = b[lb - 1 - k];
    if (x != y) return x < y;
  }
  return la > lb;
}

std::optional<Tuple> greatest_broken_circuit(const Mat& directions, const Tuple& support) {
  Tuple sup(support);
  std::sort(sup.begin(), sup.end());
  std::optional<Tuple> best;
  size_t n = directions.empty() ? 0 : directions[0].size();
  for (size_t k = 1; k <= std::min(n, sup.size()); ++k) {
    for_each_subset(sup.size(), k, [&](const Tuple& sub) {
      Tuple s;
      for (auto i : sub) s.push_back(sup[i]);
      if (!is_independent(directions, s)) return;
      for (size_t y0 = 0; y0 < s.front(); ++y0) {
        if (is_zero(directions[y0])) continue;
        Mat m;
        for (auto i : s) m.push_back(directions[i]);
        if (!in_row_span(m, directions[y0])) continue;
        bool minimal = true;
        for (size_t drop = 0; drop < s.size() && minimal; ++drop) {
          Tuple t{y0};
          for (size_t j = 0; j < s.size(); ++j)
            if (j != drop) t.push_back(s[j]);
          minimal = is_independent(directions, t);
        }
        if (minimal) {
          if (!best || circuit_precedes(*best, s)) best = s;
          return;
        }
      }
    });
  }
  return best;
}

namespace {

std::vector<LocalForm> local_forms_at(const Arrangement& a, const Vec& p, bool toric) {
  std::vector<LocalForm> out;
  for (size_t i = 0; i < a.forms.size(); ++i) {
    Rational v = a.forms[i](p);
    if (toric ? is_integer(v) : sgn(v) == 0) out.push_back({i, a.forms[i].shifted(-v)});
  }
  return out;
}

}  // namespace

std::vector<Vertex> affine_vertices(const Arrangement& a) {
  size_t n = a.dim();
  std::map<Vec, size_t> seen;
  std::vector<Vertex> out;
  Mat dirs = a.directions();
  for_each_subset(a.forms.size(), n, [&](const Tuple& t) {
    Mat m;
    Vec rhs;
    for (auto i : t) {
      m.push_back(dirs[i]);
      rhs.push_back(-a.forms[i].constant);
    }
    auto p = solve_square(m, rhs);
    if (!p || seen.count(*p)) return;
    seen[*p] = out.size();
    out.push_back({*p, local_forms_at(a, *p, false)});
  });
  if (out.empty()) throw Error(ErrorKind::NoVertices, "arrangement has no vertices");
  return out;
}

std::vector<Vertex> toric_vertices(const Arrangement& a, const Lattice& theta) {
  size_t n = a.dim();
  Lattice theta_dual = theta.dual();
  for (const auto& f : a.forms)
    if (!theta_dual.contains(f.linear))
      throw Error(ErrorKind::NotInLattice, "form direction not integral on the lattice: " + vec_to_string(f.linear));
  std::map<Vec, size_t> seen;
  std::vector<Vertex> out;
  Mat dirs = a.directions();
  for_each_subset(a.forms.size(), n, [&](const Tuple& t) {
    Mat m;
    for (auto i : t) m.push_back(dirs[i]);
    auto minv = inverse(m);
    if (!minv) return;
    // values m_i = y_i(p) range over Z^n modulo the image of theta
    Mat image;
    for (const auto& b : theta.basis()) image.push_back(times_col(m, b));
    Lattice img(image);
    for (const auto& r : quotient_representatives(img, Lattice::standard(n))) {
      Vec rhs(n);
      for (size_t k = 0; k < n; ++k) rhs[k] = r[k] - a.forms[t[k]].constant;
      Vec p = theta.reduce(times_col(*minv, rhs));
      if (seen.count(p)) continue;
      seen[p] = out.size();
      out.push_back({p, local_forms_at(a, p, true)});
    }
  });
  if (out.empty()) throw Error(ErrorKind::NoVertices, "arrangement has no vertices");
  return out;
}

}  // namespace resloc
