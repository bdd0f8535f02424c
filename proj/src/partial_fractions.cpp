#include "resloc/partial_fractions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "resloc/error.hpp"
#include "resloc/lp.hpp"

namespace resloc {

namespace {

size_t direction_index(const Mat& dirs, const Vec& linear) {
  for (size_t i = 0; i < dirs.size(); ++i)
    if (proportional(dirs[i], linear)) return i;
  throw Error(ErrorKind::InvalidInput, "denominator form " + vec_to_string(linear) + " is not in the arrangement");
}

// Ratio s with v = s * d for parallel vectors.
Rational ratio(const Vec& v, const Vec& d) {
  for (size_t i = 0; i < d.size(); ++i)
    if (sgn(d[i]) != 0) return v[i] / d[i];
  return 0;
}

// Form preceding the broken circuit and the integer relation sum lambda_j d_j = 0
// (lambda_0 for the preceding form first).
std::pair<size_t, Vec> circuit_relation(const Mat& dirs, const Tuple& bc) {
  for (size_t i = 0; i < bc.front(); ++i) {
    Mat cols{dirs[i]};
    for (auto j : bc) cols.push_back(dirs[j]);
    Mat ker = kernel(transpose(cols));
    if (ker.size() != 1) continue;
    const Vec& k = ker[0];
    if (std::any_of(k.begin(), k.end(), [](const Rational& x) { return sgn(x) == 0; })) continue;
    Integer l = lcm_of_denominators(k);
    Vec lam = scale(k, Rational(l));
    Integer g = 0;
    for (const auto& x : lam) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    return {i, scale(lam, Rational(1) / Rational(g))};
  }
  throw Error(ErrorKind::InvalidInput, "no circuit completes the broken circuit");
}

Tuple support_of(const std::map<size_t, int>& den) {
  Tuple s;
  for (const auto& [i, k] : den)
    if (k > 0) s.push_back(i);
  return s;
}

}  // namespace

std::vector<RationalSummand> rational_partial_fractions(const Arrangement& a, const RationalSummand& f) {
  if (!a.central) throw Error(ErrorKind::InvalidInput, "rational partial fractions need a central arrangement");
  Mat dirs = a.directions();
  size_t n = a.dim();
  struct Term {
    Polynomial num;
    std::map<size_t, int> den;
  };
  Term start{f.numerator, {}};
  Scalar c(1);
  for (const auto& d : f.denominator) {
    if (sgn(d.form.constant) != 0) throw Error(ErrorKind::InvalidInput, "denominator forms must be linear");
    size_t i = direction_index(dirs, d.form.linear);
    Rational s = ratio(d.form.linear, dirs[i]);
    for (int k = 0; k < d.power; ++k) c = c * Scalar(Rational(1) / s);
    start.den[i] += d.power;
  }
  start.num = start.num * Polynomial::constant(n, c);

  std::map<std::map<size_t, int>, Polynomial> done;
  std::vector<Term> stack{start};
  size_t steps = 0;
  while (!stack.empty()) {
    if (++steps > 1000000) throw Error(ErrorKind::TooLarge, "partial fraction expansion too large");
    Term t = std::move(stack.back());
    stack.pop_back();
    auto bc = greatest_broken_circuit(dirs, support_of(t.den));
    if (!bc) {
      done[t.den] += t.num;
      continue;
    }
    auto [y0, lam] = circuit_relation(dirs, *bc);
    // 1/(y_1...y_m) = -sum_i (lambda_i/lambda_0) / prod_{j != i} y_j
    for (size_t i = 0; i < bc->size(); ++i) {
      Term nt = t;
      nt.den[(*bc)[i]] -= 1;
      nt.den[y0] += 1;
      nt.num = nt.num * Polynomial::constant(n, Scalar(-lam[i + 1] / lam[0]));
      stack.push_back(std::move(nt));
    }
  }
  std::vector<RationalSummand> out;
  for (auto& [den, num] : done) {
    RationalSummand s;
    for (auto it = num.terms.begin(); it != num.terms.end();)
      it = it->second.is_zero() ? num.terms.erase(it) : std::next(it);
    if (num.terms.empty()) continue;
    s.numerator = num;
    s.underlined = f.underlined;
    for (const auto& [i, k] : den)
      if (k > 0) s.denominator.push_back({AffineForm(dirs[i]), k});
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

struct TrigTerm {
  Scalar coeff;
  Vec weight;
  std::map<AffineForm, int> den;  // constants reduced into [0, 1)
};

AffineForm canonical(const AffineForm& y) { return AffineForm(y.linear, frac_of(y.constant)); }

Scalar phase(const Rational& c) { return Scalar(Cyclotomic::root_of_unity(frac_of(c))); }

// alpha in (0,1)^m, increasing along perm, nu in (0,1) for the remaining generators,
// with mu + weight = sum nu g + sum alpha z.
bool ordered_split(const Vec& target, const Mat& rest, const Mat& z, const std::vector<size_t>& perm) {
  size_t n = target.size(), r = rest.size(), m = z.size(), vars = r + m;
  Mat eq(n, Vec(vars));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < r; ++j) eq[i][j] = rest[j][i];
    for (size_t j = 0; j < m; ++j) eq[i][r + j] = z[j][i];
  }
  std::vector<StrictConstraint> strict;
  for (size_t j = 0; j < vars; ++j) {
    Vec c(vars);
    c[j] = 1;
    strict.push_back({c, Rational(0), Rational(1)});
  }
  for (size_t k = 0; k + 1 < m; ++k) {
    Vec c(vars);
    c[r + perm[k + 1]] = 1;
    c[r + perm[k]] = -1;
    strict.push_back({c, Rational(0), std::nullopt});
  }
  return lp_strict_feasible(vars, eq, target, strict).has_value();
}

}  // namespace

TrigPartialFractions trig_partial_fractions(const Arrangement& a, const Lattice& theta, const TrigRationalFunction& f,
                                            const Vec& mu, size_t max_terms) {
  Mat dirs = a.directions();
  if (is_special(mu, theta.dual(), dirs)) throw Error(ErrorKind::ShiftNotAdmissible, "mu is special");
  if (!delta_contains(f, mu)) throw Error(ErrorKind::ShiftNotAdmissible, "mu is not in Delta_f");

  std::vector<TrigTerm> stack;
  for (const auto& w : f.numerator) {
    TrigTerm t{w.coeff, w.weight, {}};
    for (const auto& d : f.denominator) {
      direction_index(dirs, d.form.linear);
      if (d.power > 0) t.den[canonical(d.form)] += d.power;
    }
    stack.push_back(std::move(t));
  }

  std::map<std::map<AffineForm, int>, std::map<Vec, Scalar>> done;
  size_t steps = 0;
  while (!stack.empty()) {
    if (++steps > max_terms) throw Error(ErrorKind::TooLarge, "trigonometric partial fractions too large");
    TrigTerm t = std::move(stack.back());
    stack.pop_back();
    std::map<size_t, int> support_map;
    std::map<size_t, AffineForm> pick;  // first factor met in each direction
    for (const auto& [y, k] : t.den) {
      size_t i = direction_index(dirs, y.linear);
      support_map[i] += k;
      if (!pick.count(i)) pick.emplace(i, y);
    }
    auto bc = greatest_broken_circuit(dirs, support_of(support_map));
    if (!bc) {
      done[t.den][t.weight] += t.coeff;
      continue;
    }
    auto [y0, lam] = circuit_relation(dirs, *bc);
    size_t m = bc->size();
    std::vector<AffineForm> x(m);
    std::vector<Rational> s(m);
    Integer big = 1;
    for (size_t j = 0; j < m; ++j) {
      x[j] = pick.at((*bc)[j]);
      s[j] = ratio(x[j].linear, dirs[(*bc)[j]]);
      Rational q = lam[j + 1] / s[j];
      mpz_lcm(big.get_mpz_t(), big.get_mpz_t(), q.get_den_mpz_t());
    }
    std::vector<long> r(m);
    for (size_t j = 0; j < m; ++j) {
      Rational q = Rational(big) * lam[j + 1] / s[j];
      r[j] = q.get_num().get_si();
    }

    // Geometric progressions: 1/(1-e_x) = sum_i e_{ix} / (1-e_{rx}), with the sign
    // flip 1/(1-e_x) = -e_{-x}/(1-e_{-x}) when r < 0.
    struct Partial {
      Scalar coeff;
      Vec weight;
    };
    std::vector<Partial> partial{{t.coeff, t.weight}};
    std::map<AffineForm, int> rest = t.den;
    std::vector<AffineForm> z(m + 1);
    AffineForm z0(Vec(a.dim()), 0);
    for (size_t j = 0; j < m; ++j) {
      if (--rest[x[j]] == 0) rest.erase(x[j]);
      z[j + 1] = x[j].scaled(r[j]);
      z0 = AffineForm(sub(z0.linear, z[j + 1].linear), z0.constant - z[j + 1].constant);
      std::vector<Partial> next;
      long lo = r[j] > 0 ? 0 : r[j], hi = r[j] > 0 ? r[j] - 1 : -1;
      for (const auto& p : partial)
        for (long i = lo; i <= hi; ++i) {
          Scalar c = p.coeff * phase(x[j].constant * i);
          if (r[j] < 0) c = -c;
          next.push_back({c, add(p.weight, scale(x[j].linear, Rational(i)))});
        }
      partial = std::move(next);
    }
    z[0] = z0;

    Mat rest_gens;
    for (const auto& [y, k] : rest) rest_gens.push_back(scale(y.linear, Rational(k)));
    Mat zl;
    for (size_t j = 1; j <= m; ++j) zl.push_back(z[j].linear);

    for (const auto& p : partial) {
      Vec target = add(mu, p.weight);
      std::vector<size_t> perm(m);
      std::iota(perm.begin(), perm.end(), 0);
      bool found = false;
      do {
        if (ordered_split(target, rest_gens, zl, perm)) {
          found = true;
          break;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!found) throw Error(ErrorKind::ShiftNotAdmissible, "no ordered splitting of mu; perturb mu");
      // Sequence z_0, z_{perm}: 1/prod_{j>=1}(1-e_{z_j}) = -sum_{i>=1} prod_{j<i} e_{z_j} / prod_{j!=i}(1-e_{z_j}).
      std::vector<AffineForm> seq{z[0]};
      for (auto k : perm) seq.push_back(z[k + 1]);
      Scalar c = -p.coeff;
      Vec w = p.weight;
      for (size_t i = 1; i <= m; ++i) {
        c = c * phase(seq[i - 1].constant);
        w = add(w, seq[i - 1].linear);
        TrigTerm nt{c, w, rest};
        for (size_t j = 0; j <= m; ++j)
          if (j != i) nt.den[canonical(seq[j])] += 1;
        stack.push_back(std::move(nt));
      }
    }
  }

  TrigPartialFractions out;
  out.arrangement.central = false;
  std::map<AffineForm, bool> seen;
  for (auto& [den, num] : done) {
    TrigRationalFunction g;
    for (const auto& [w, c] : num)
      if (!c.is_zero()) g.numerator.push_back({w, c});
    if (g.numerator.empty()) continue;
    for (const auto& [y, k] : den) {
      g.denominator.push_back({y, k});
      if (!seen[y]) {
        seen[y] = true;
        out.arrangement.forms.push_back(y);
      }
    }
    out.terms.push_back(std::move(g));
  }
  return out;
}

}  // namespace resloc
