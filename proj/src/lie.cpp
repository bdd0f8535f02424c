#include "resloc/lie.hpp"

#include <map>
#include <set>

#include "resloc/error.hpp"
#include "resloc/parallel.hpp"

namespace resloc {

namespace {

IMat cartan_matrix(char family, size_t n) {
  IMat a(n, IVec(n, 0));
  for (size_t i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](size_t i, size_t j, long aij, long aji) {
    a[i][j] = aij;
    a[j][i] = aji;
  };
  switch (family) {
    case 'A':
      for (size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case 'B':
      for (size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -1, -2);  // last simple root short
      break;
    case 'C':
      for (size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -2, -1);  // last simple root long
      break;
    case 'D':
      for (size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 3, n - 1, -1, -1);
      break;
    case 'G':
      link(0, 1, -3, -1);  // first simple root short
      break;
  }
  return a;
}

std::vector<Rational> half_norms(char family, size_t n) {
  std::vector<Rational> d(n, Rational(1));
  if (family == 'B') d[n - 1] = Rational(1, 2);
  if (family == 'C')
    for (size_t i = 0; i + 1 < n; ++i) d[i] = Rational(1, 2);
  if (family == 'G') d[0] = Rational(1, 3);
  return d;
}

Integer weyl_group_order(char family, size_t n) {
  Integer f = 1;
  for (size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  Integer two = 1;
  for (size_t i = 0; i < n; ++i) two *= 2;
  switch (family) {
    case 'A': return f * static_cast<unsigned long>(n + 1);
    case 'B':
    case 'C': return f * two;
    case 'D': return f * two / 2;
    default: return 12;
  }
}

}  // namespace

Rational RootSystem::inner(const Vec& a, const Vec& b) const { return dot(a, times_col(gram, b)); }

Vec RootSystem::reflect(const Vec& v, size_t i) const { return sub(v, scale(simple_roots[i], v[i])); }

bool RootSystem::is_long(const Vec& root) const { return inner(root, root) == 2; }

Arrangement RootSystem::arrangement() const {
  Arrangement a;
  for (const auto& r : positive_roots) a.forms.push_back(AffineForm(r));
  return a;
}

Rational RootSystem::index_gamma_theta() const { return abs(Rational(1) / gamma.covolume()); }

bool RootSystem::in_root_lattice(const Vec& weight) const {
  return Lattice(simple_roots).contains(weight);
}

RootSystem build_root_system(char family, size_t n) {
  bool ok = (family == 'A' && n >= 1) || (family == 'B' && n >= 2) || (family == 'C' && n >= 2) ||
            (family == 'D' && n >= 3) || (family == 'G' && n == 2);
  if (!ok) throw Error(ErrorKind::UnsupportedFamily, std::string(1, family) + std::to_string(n));
  RootSystem r;
  r.family = family;
  r.rank = n;
  r.cartan = cartan_matrix(family, n);
  r.half_norms = half_norms(family, n);
  Mat a(n, Vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = Rational(r.cartan[i][j]);
  // alpha_j = sum_i <alpha_i^vee, alpha_j> omega_i: column j of the Cartan matrix.
  r.simple_roots = transpose(a);
  Mat d(n, Vec(n));
  for (size_t i = 0; i < n; ++i) d[i][i] = r.half_norms[i];
  r.gram = matmul(d, *inverse(a));

  // Roots as the Weyl orbit of the simple roots.
  std::set<Vec> roots(r.simple_roots.begin(), r.simple_roots.end());
  std::vector<Vec> queue(roots.begin(), roots.end());
  while (!queue.empty()) {
    Vec v = queue.back();
    queue.pop_back();
    for (size_t i = 0; i < n; ++i) {
      Vec w = r.reflect(v, i);
      if (roots.insert(w).second) queue.push_back(w);
    }
  }
  Mat to_simple = *inverse(r.simple_roots);  // coords in the simple-root basis: v * inv
  Rational best_height = -1;
  for (const auto& v : roots) {
    Vec c = row_times(v, to_simple);
    bool pos = true;
    Rational height = 0;
    for (const auto& x : c) {
      if (sgn(x) < 0) pos = false;
      height += x;
    }
    if (!pos) continue;
    r.positive_roots.push_back(v);
    if (height > best_height) {
      best_height = height;
      r.theta = v;
    }
  }
  r.rho = Vec(n, Rational(1));
  r.dual_coxeter = Rational(r.inner(r.theta, r.rho) + 1).get_num().get_si();
  r.weyl_order = weyl_group_order(family, n);
  r.coroots = Lattice::standard(n);
  Mat long_roots;
  for (const auto& v : r.positive_roots)
    if (r.is_long(v)) long_roots.push_back(v);
  r.gamma = Lattice::from_generators(long_roots).dual();
  return r;
}

RootSystem build_root_system(const std::string& name) {
  if (name.size() < 2) throw Error(ErrorKind::UnsupportedFamily, name);
  size_t n = 0;
  try {
    n = std::stoul(name.substr(1));
  } catch (const std::exception&) {
    throw Error(ErrorKind::UnsupportedFamily, name);
  }
  return build_root_system(static_cast<char>(std::toupper(name[0])), n);
}

TrigRationalFunction weyl_denominator_power(const RootSystem& r, int m) {
  TrigRationalFunction f;
  f.numerator.push_back({scale(r.rho, Rational(-m)), Scalar(1)});
  for (const auto& a : r.positive_roots) f.denominator.push_back({AffineForm(scale(a, Rational(-1))), m});
  return f;
}

Scalar weyl_denominator(const RootSystem& r, const Vec& v) {
  Cyclotomic d = Cyclotomic::root_of_unity(frac_of(dot(r.rho, v)));
  for (const auto& a : r.positive_roots) d = d * (Cyclotomic(1) - Cyclotomic::root_of_unity(frac_of(-dot(a, v))));
  return Scalar(d);
}

std::vector<std::pair<Vec, int>> signed_orbit(const RootSystem& r, const Vec& regular) {
  std::map<Vec, int> seen{{regular, 1}};
  std::vector<Vec> queue{regular};
  while (!queue.empty()) {
    Vec v = queue.back();
    queue.pop_back();
    int s = seen[v];
    for (size_t i = 0; i < r.rank; ++i) {
      Vec w = r.reflect(v, i);
      if (seen.emplace(w, -s).second) queue.push_back(w);
    }
  }
  return {seen.begin(), seen.end()};
}

Vec dominant_representative(const RootSystem& r, const Vec& v) {
  Vec w = v;
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < r.rank; ++i)
      if (sgn(w[i]) < 0) {
        w = r.reflect(w, i);
        changed = true;
      }
  }
  return w;
}

bool in_delta(const RootSystem& r, const Vec& v, bool strict) {
  Vec d = dominant_representative(r, v);
  for (size_t i = 0; i < r.rank; ++i) {
    Vec om(r.rank);
    om[i] = 1;
    Rational lhs = r.inner(d, om), rhs = r.inner(r.rho, om);
    if (strict ? lhs >= rhs : lhs > rhs) return false;
  }
  return true;
}

bool check_rho_condition(const RootSystem& r) {
  for (size_t i = 0; i < r.rank; ++i) {
    Vec v = r.rho;
    v[i] -= 1;
    if (!in_delta(r, v)) return false;
  }
  return true;
}

namespace {

Rational verlinde_prefactor(const RootSystem& r, int g, long level) {
  Rational base = r.index_gamma_theta();
  for (size_t i = 0; i < r.rank; ++i) base *= level;
  if (r.positive_roots.size() % 2) base = -base;
  Rational p = 1;
  for (int i = 1; i < g; ++i) p *= base;
  return p;
}

Integer as_integer(const Scalar& s, const char* what) {
  if (!s.is_rational()) throw Error(ErrorKind::InvalidInput, std::string(what) + " is not rational");
  Rational v = s.to_rational();
  if (!is_integer(v)) throw Error(ErrorKind::InvalidInput, std::string(what) + " is not an integer: " + v.get_str());
  return v.get_num();
}

void check_level(const RootSystem& r, int g, long k, const Vec& lambda) {
  if (g < 1) throw Error(ErrorKind::InvalidInput, "genus must be positive");
  if (k < 0) throw Error(ErrorKind::InvalidInput, "level must be nonnegative");
  if (lambda.size() != r.rank) throw Error(ErrorKind::InvalidInput, "weight has wrong dimension");
  for (const auto& x : lambda)
    if (!is_integer(x) || sgn(x) < 0) throw Error(ErrorKind::InvalidInput, "weight must be dominant integral");
  if (r.inner(r.theta, lambda) > k) throw Error(ErrorKind::InvalidInput, "(theta, lambda) exceeds the level");
}

}  // namespace

Integer verlinde_bruteforce(const RootSystem& r, int g, long k, const Vec& lambda, size_t guard) {
  check_level(r, g, k, lambda);
  if (!r.in_root_lattice(lambda)) return 0;
  long level = k + r.dual_coxeter;
  Lattice gk = r.gamma.scaled(Rational(1, level));
  auto reps = quotient_representatives(r.coroots, gk);
  if (reps.size() > guard) throw Error(ErrorKind::TooLarge, "too many lattice points");
  auto orbit = signed_orbit(r, add(lambda, r.rho));
  std::vector<Scalar> terms(reps.size());
  parallel_for(reps.size(), [&](size_t idx) {
    const Vec& v = reps[idx];
    for (const auto& a : r.positive_roots)
      if (is_integer(dot(a, v))) return;
    Cyclotomic num(0);
    for (const auto& [w, s] : orbit) {
      Cyclotomic e = Cyclotomic::root_of_unity(frac_of(dot(w, v)));
      num = s > 0 ? num + e : num - e;
    }
    Cyclotomic d = weyl_denominator(r, v).coefficient(0);
    Cyclotomic dp(1);
    for (int i = 0; i < 2 * g - 1; ++i) dp = dp * d;
    terms[idx] = Scalar(num / dp);
  });
  Scalar total;
  for (const auto& t : terms) total += t;
  total = total * Scalar(verlinde_prefactor(r, g, level) / Rational(r.weyl_order));
  return as_integer(total, "Verlinde sum");
}

Integer verlinde_localized(const RootSystem& r, int g, long k, const Vec& lambda, const CtOptions& opts) {
  check_level(r, g, k, lambda);
  if (!r.in_root_lattice(lambda)) return 0;
  long level = k + r.dual_coxeter;
  Lattice gk = r.gamma.scaled(Rational(1, level));
  TrigRationalFunction f = weyl_denominator_power(r, 2 * g - 1);
  Arrangement a = r.arrangement();
  Vec t = add(lambda, r.rho);
  Mat dirs = a.directions();
  Vec mu = choose_shift(f, r.coroots, &gk, &t, &dirs);
  LocalizedResult z = trig_sum_localized(a, r.coroots, gk, f, t, mu, opts);
  return as_integer(z.total * Scalar(verlinde_prefactor(r, g, level)), "localized Verlinde sum");
}

Rational Quasipolynomial::operator()(long m) const {
  const auto& p = polys[((m % period) + period) % period];
  Rational v = 0;
  for (size_t i = p.size(); i-- > 0;) v = v * m + p[i];
  return v;
}

Quasipolynomial interpolate_quasipolynomial(const std::function<Rational(long)>& value, long period, size_t degree,
                                           long first, size_t held_out) {
  Quasipolynomial q;
  q.period = period;
  q.polys.resize(period);
  for (long a = 0; a < period; ++a) {
    long m0 = first + ((a - first) % period + period) % period;
    size_t count = degree + 1 + held_out;
    std::vector<long> ms(count);
    for (size_t j = 0; j < count; ++j) ms[j] = m0 + static_cast<long>(j) * period;
    std::vector<Rational> vals(count);
    parallel_for(count, [&](size_t j) { vals[j] = value(ms[j]); });
    Mat vm(degree + 1, Vec(degree + 1));
    Vec rhs(degree + 1);
    for (size_t j = 0; j <= degree; ++j) {
      Rational p = 1;
      for (size_t e = 0; e <= degree; ++e, p *= ms[j]) vm[j][e] = p;
      rhs[j] = vals[j];
    }
    auto c = solve_square(vm, rhs);
    if (!c) throw Error(ErrorKind::InvalidInput, "interpolation system is singular");
    while (c->size() > 1 && sgn(c->back()) == 0) c->pop_back();
    q.polys[a] = *c;
    for (size_t j = degree + 1; j < count; ++j)
      if (q(ms[j]) != vals[j])
        throw Error(ErrorKind::InvalidInput, "held-out check failed at m = " + std::to_string(ms[j]));
  }
  return q;
}

long verlinde_period(const RootSystem& r, long k0, const Vec& lambda) {
  Integer l = 1;
  Lattice gamma_dual = r.gamma.dual();
  for (const auto& p : toric_vertices(r.arrangement(), r.coroots)) {
    Integer m1 = 1;
    Vec kp = scale(p.point, Rational(k0));
    if (!is_zero(kp)) {
      // least m with m * k0 * p in Gamma, i.e. integral pairing with Gamma^*.
      Integer d = 1;
      for (const auto& b : gamma_dual.basis()) {
        Rational x = dot(b, kp);
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
      }
      m1 = d;
    }
    Rational lp = dot(lambda, p.point);
    Integer m2 = lp.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m1.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m2.get_mpz_t());
  }
  return l.get_si();
}

Quasipolynomial verlinde_quasipolynomial(const RootSystem& r, int g, const Vec& lambda, long k0,
                                         const CtOptions& opts) {
  long period = verlinde_period(r, k0, lambda);
  size_t degree = (2 * g - 1) * r.positive_roots.size() + r.rank * (g - 1) + 2;
  return interpolate_quasipolynomial(
      [&](long m) { return Rational(verlinde_localized(r, g, m * k0, scale(lambda, Rational(m)), opts)); }, period,
      degree);
}

}  // namespace resloc
