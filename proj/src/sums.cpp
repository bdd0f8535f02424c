#include "resloc/sums.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "resloc/error.hpp"
#include "resloc/lp.hpp"
#include "resloc/parallel.hpp"

namespace resloc {

// ---- TrigRationalFunction ----

size_t TrigRationalFunction::dim() const {
  if (!denominator.empty()) return denominator[0].form.dim();
  if (!numerator.empty()) return numerator[0].weight.size();
  return 0;
}

FunctionExpr TrigRationalFunction::to_expr() const {
  std::map<int, std::vector<ExpTerm>> by_degree;
  for (const auto& w : numerator)
    for (const auto& [k, c] : w.coeff.terms()) by_degree[k].push_back(ExpTerm{w.weight, 0, c});
  FunctionExpr f;
  for (auto& [k, terms] : by_degree) {
    Product p;
    p.coeff = Scalar::u_power(k);
    p.atoms.push_back(Atom::exp_sum(terms, true));
    for (const auto& d : denominator) p.atoms.push_back(Atom::exp_frac(d.form, d.power, true));
    f.terms.push_back(std::move(p));
  }
  return f;
}

Scalar TrigRationalFunction::evaluate(const Vec& v) const {
  Scalar num;
  for (const auto& w : numerator) num += w.coeff * Scalar(Cyclotomic::root_of_unity(dot(w.weight, v)));
  Cyclotomic den(1);
  for (const auto& d : denominator) {
    Cyclotomic x = Cyclotomic(1) - Cyclotomic::root_of_unity(d.form(v));
    if (x.is_zero()) {
      if (d.power > 0) throw Error(ErrorKind::InvalidInput, "evaluation on a pole");
      if (d.power < 0) return Scalar();
    }
    for (int i = 0; i < std::abs(d.power); ++i) den *= (d.power > 0 ? x : x.inverse());
  }
  return num * Scalar(den.inverse());
}

void TrigRationalFunction::normalize() {
  std::map<Vec, Scalar> w;
  for (const auto& t : numerator) w[t.weight] += t.coeff;
  numerator.clear();
  for (auto& [k, c] : w)
    if (!c.is_zero()) numerator.push_back({k, c});
  std::map<AffineForm, int> d;
  std::vector<AffineForm> order;
  for (const auto& f : denominator) {
    AffineForm y(f.form.linear, frac_of(f.form.constant));
    if (!d.count(y)) order.push_back(y);
    d[y] += f.power;
  }
  denominator.clear();
  for (const auto& y : order)
    if (d[y] != 0) denominator.push_back({y, d[y]});
}

// ---- Polynomial ----

Polynomial Polynomial::constant(size_t dim, const Scalar& c) {
  Polynomial p;
  if (!c.is_zero()) p.terms[Monomial(dim, 0)] = c;
  return p;
}

Polynomial Polynomial::of_form(const AffineForm& y) {
  Polynomial p = constant(y.dim(), Scalar(y.constant));
  for (size_t i = 0; i < y.dim(); ++i) {
    if (sgn(y.linear[i]) == 0) continue;
    Monomial m(y.dim(), 0);
    m[i] = 1;
    p.terms[m] = Scalar(y.linear[i]);
  }
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms) {
    terms[m] += c;
    if (terms[m].is_zero()) terms.erase(m);
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      Monomial m(ma);
      for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      Polynomial t;
      t.terms[m] = ca * cb;
      r += t;
    }
  return r;
}

Scalar Polynomial::evaluate(const Vec& v) const {
  Scalar s;
  for (const auto& [m, c] : terms) {
    Rational x = 1;
    for (size_t i = 0; i < m.size(); ++i)
      for (int k = 0; k < m[i]; ++k) x *= v[i];
    s += c * Scalar(x);
  }
  return s;
}

// ---- RationalSummand ----

size_t RationalSummand::dim() const {
  if (!denominator.empty()) return denominator[0].form.dim();
  if (!numerator.terms.empty()) return numerator.terms.begin()->first.size();
  return 0;
}

namespace {

int den_degree(const std::vector<DenFactor>& den) {
  int d = 0;
  for (const auto& f : den) d += f.power;
  return d;
}

int mono_degree(const Monomial& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

void check_underlined(const RationalSummand& f) {
  if (!f.underlined) return;
  for (const auto& d : f.denominator)
    if (sgn(d.form.constant) != 0) throw Error(ErrorKind::Unsupported, "underlined summands need central forms");
}

}  // namespace

FunctionExpr RationalSummand::to_expr() const {
  check_underlined(*this);
  size_t n = dim();
  FunctionExpr f;
  for (const auto& [m, c] : numerator.terms) {
    Product p;
    p.coeff = underlined ? c * Scalar::u_power(mono_degree(m) - den_degree(denominator)) : c;
    for (size_t i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      Vec e(n);
      e[i] = 1;
      p.atoms.push_back(Atom::form_power(AffineForm(e, 0), m[i]));
    }
    for (const auto& d : denominator) p.atoms.push_back(Atom::form_power(d.form, -d.power));
    f.terms.push_back(std::move(p));
  }
  return f;
}

Scalar RationalSummand::evaluate(const Vec& v) const {
  check_underlined(*this);
  Scalar total;
  Rational den = 1;
  for (const auto& d : denominator) {
    Rational y = d.form(v);
    if (sgn(y) == 0) throw Error(ErrorKind::InvalidInput, "evaluation on a pole");
    for (int i = 0; i < std::abs(d.power); ++i) den *= (d.power > 0 ? y : Rational(1 / y));
  }
  for (const auto& [m, c] : numerator.terms) {
    Rational x = 1;
    for (size_t i = 0; i < m.size(); ++i)
      for (int k = 0; k < m[i]; ++k) x *= v[i];
    Scalar t = c * Scalar(x / den);
    if (underlined) t *= Scalar::u_power(mono_degree(m) - den_degree(denominator));
    total += t;
  }
  return total;
}

std::complex<double> RationalSummand::evaluate_numeric(const std::vector<double>& v) const {
  return to_expr().evaluate_numeric(v);
}

// ---- Delta ----

namespace {

Mat zonotope_generators(const TrigRationalFunction& f) {
  Mat g;
  for (const auto& d : f.denominator)
    if (d.power > 0) g.push_back(scale(d.form.linear, d.power));
  return g;
}

bool in_open_zonotope(const Mat& gens, const Vec& q) {
  size_t m = gens.size();
  if (m == 0) return is_zero(q);
  Mat eq = transpose(gens);
  std::vector<StrictConstraint> strict;
  for (size_t i = 0; i < m; ++i) {
    Vec c(m);
    c[i] = 1;
    strict.push_back({c, Rational(0), Rational(1)});
  }
  return lp_strict_feasible(m, eq, q, strict).has_value();
}

std::optional<StrictWitness> delta_interior(const TrigRationalFunction& f) {
  size_t n = f.dim();
  Mat gens = zonotope_generators(f);
  if (gens.empty() || rank_of(gens) < n) return std::nullopt;
  size_t m = gens.size(), blocks = std::max<size_t>(f.numerator.size(), 1);
  size_t vars = n + m * blocks;
  Mat eq;
  Vec rhs;
  for (size_t b = 0; b < blocks; ++b) {
    Vec w = f.numerator.empty() ? Vec(n) : f.numerator[b].weight;
    for (size_t i = 0; i < n; ++i) {
      Vec row(vars);
      row[i] = -1;
      for (size_t j = 0; j < m; ++j) row[n + b * m + j] = gens[j][i];
      eq.push_back(row);
      rhs.push_back(w[i]);
    }
  }
  std::vector<StrictConstraint> strict;
  for (size_t k = n; k < vars; ++k) {
    Vec c(vars);
    c[k] = 1;
    strict.push_back({c, Rational(0), Rational(1)});
  }
  auto w = lp_strict_feasible(vars, eq, rhs, strict);
  if (w) w->x.resize(n);
  return w;
}

const std::vector<long>& perturbation_primes() {
  static const std::vector<long> primes = {101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163,
                                           167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233,
                                           239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311};
  return primes;
}

Vec perturbation(size_t n, size_t attempt) {
  const auto& p = perturbation_primes();
  Vec d(n);
  for (size_t i = 0; i < n; ++i) {
    long prime = p[(attempt * n + i) % p.size()];
    d[i] = Rational(attempt % 2 && i % 2 ? -1 : 1) / Rational(prime);
  }
  return d;
}

Mat denominator_directions(const TrigRationalFunction& f) {
  Mat d;
  for (const auto& x : f.denominator) d.push_back(x.form.linear);
  return d;
}

}  // namespace

bool delta_contains(const TrigRationalFunction& f, const Vec& mu) {
  Mat gens = zonotope_generators(f);
  if (gens.empty() || rank_of(gens) < f.dim()) return false;
  return delta0_contains(f, mu);
}

bool delta0_contains(const TrigRationalFunction& f, const Vec& mu) {
  Mat gens = zonotope_generators(f);
  if (f.numerator.empty()) return in_open_zonotope(gens, mu);
  for (const auto& w : f.numerator)
    if (!in_open_zonotope(gens, add(mu, w.weight))) return false;
  return true;
}

std::optional<std::string> delta_violation(const TrigRationalFunction& f, const Vec& mu) {
  Mat gens = zonotope_generators(f);
  if (gens.empty() || rank_of(gens) < f.dim()) return "denominator directions do not span, Delta is empty";
  for (const auto& w : f.numerator)
    if (!in_open_zonotope(gens, add(mu, w.weight)))
      return "mu + " + vec_to_string(w.weight) + " = " + vec_to_string(add(mu, w.weight)) +
             " is not in the open zonotope of the denominator";
  return std::nullopt;
}

Vec choose_shift(const TrigRationalFunction& f, const Lattice& theta, const Lattice* gamma, const Vec* t,
                 const Mat* extra_directions) {
  auto center = delta_interior(f);
  if (!center) throw Error(ErrorKind::ShiftNotAdmissible, "Delta is empty");
  size_t n = f.dim();
  Mat dirs = denominator_directions(f);
  if (extra_directions) dirs.insert(dirs.end(), extra_directions->begin(), extra_directions->end());
  Lattice theta_dual = theta.dual();
  std::optional<Lattice> gamma_dual;
  if (gamma) gamma_dual = gamma->dual();
  for (size_t attempt = 0; attempt < 40; ++attempt) {
    Vec d = perturbation(n, attempt);
    Rational s = 1;
    for (int halving = 0; halving < 40; ++halving, s /= 2) {
      Vec mu = add(center->x, scale(d, s));
      if (!delta_contains(f, mu)) continue;
      if (is_special(mu, theta_dual, dirs)) break;
      if (gamma && t && is_special(sub(*t, mu), *gamma_dual, dirs)) break;
      return mu;
    }
  }
  throw Error(ErrorKind::ShiftNotAdmissible, "no generic shift found");
}

std::vector<TrigRationalFunction> split_unit(const TrigRationalFunction& f, const Arrangement& a) {
  size_t n = a.dim();
  std::vector<TrigRationalFunction> parts{f};
  Mat dirs = denominator_directions(f);
  for (const auto& y : a.forms) {
    if (rank_of(dirs) == n) break;
    if (!dirs.empty() && in_row_span(dirs, y.linear)) continue;
    if (dirs.empty() && is_zero(y.linear)) continue;
    dirs.push_back(y.linear);
    std::vector<TrigRationalFunction> next;
    for (const auto& g : parts) {
      TrigRationalFunction plus(g), minus(g);
      plus.denominator.push_back({AffineForm(y.linear, 0), 1});
      minus.denominator.push_back({AffineForm(scale(y.linear, -1), 0), 1});
      plus.normalize();
      minus.normalize();
      next.push_back(plus);
      next.push_back(minus);
    }
    parts = std::move(next);
  }
  if (dirs.empty() || rank_of(dirs) < n) throw Error(ErrorKind::CannotSplit, "directions do not span");
  std::vector<TrigRationalFunction> out;
  for (const auto& g : parts) {
    if (delta_interior(g)) {
      out.push_back(g);
      continue;
    }
    for (const auto& w : g.numerator) {
      TrigRationalFunction single(g);
      single.numerator = {w};
      if (!delta_interior(single)) throw Error(ErrorKind::CannotSplit, "summand with empty Delta");
      out.push_back(single);
    }
  }
  return out;
}

// ---- sums ----

namespace {

void check_character(const Lattice& theta, const Vec& t) {
  if (!theta.dual().contains(t))
    throw Error(ErrorKind::NotInLattice, "character must be integral on the lattice of periods");
}

}  // namespace

Scalar trig_sum_bruteforce(const Arrangement& a, const Lattice& theta, const Lattice& gamma,
                           const TrigRationalFunction& f, const Vec& t, size_t guard) {
  check_character(theta, t);
  Rational index = theta.covolume() / gamma.covolume();
  if (index > Rational(static_cast<long>(guard))) throw Error(ErrorKind::TooLarge, "too many summation points");
  auto reps = quotient_representatives(theta, gamma);
  size_t workers = std::max<size_t>(1, std::min<size_t>(worker_count(), reps.size()));
  std::vector<Scalar> partial(workers);
  parallel_for(workers, [&](size_t w) {
    Scalar s;
    for (size_t i = w; i < reps.size(); i += workers) {
      const Vec& g = reps[i];
      bool on = false;
      for (const auto& y : a.forms) on = on || is_integer(y(g));
      if (on) continue;
      s += Scalar(Cyclotomic::root_of_unity(dot(t, g))) * f.evaluate(g);
    }
    partial[w] = s;
  });
  Scalar total;
  for (const auto& s : partial) total += s;
  return total;
}

LocalizedResult trig_sum_localized(const Arrangement& a, const Lattice& theta, const Lattice& gamma,
                                   const TrigRationalFunction& f, const Vec& t, const Vec& mu, const CtOptions& opts) {
  check_character(theta, t);
  if (auto why = delta_violation(f, mu))
    throw Error(ErrorKind::ShiftNotAdmissible, "shift " + vec_to_string(mu) + " not in Delta: " + *why);
  Lattice gamma_dual = gamma.dual();
  Mat dirs = a.directions();
  if (is_special(sub(t, mu), gamma_dual, dirs))
    throw Error(ErrorKind::SpecialCharacter, "t - mu is special");
  FunctionExpr fe = f.to_expr();
  struct Task {
    const Vertex* v;
    Tuple local;
  };
  auto vertices = toric_vertices(a, theta);
  std::vector<Task> tasks;
  for (const auto& v : vertices)
    for (auto& tp : nbc_bases(v.directions())) tasks.push_back({&v, tp});
  size_t n = a.dim();
  std::vector<Scalar> values(tasks.size());
  parallel_for(tasks.size(), [&](size_t k) {
    const Vertex& v = *tasks[k].v;
    std::vector<AffineForm> tuple;
    for (auto i : tasks[k].local) {
      const AffineForm& y = v.forms[i].local;
      tuple.push_back(y.scaled(primitive_multiple(y.linear, gamma_dual)));
    }
    Scalar val = iterated_ct(tuple, v.point, todd_factor(gamma, tuple, t, mu) * fe, opts);
    values[k] = n % 2 ? -val : val;
  });
  LocalizedResult r;
  r.shifts.push_back(mu);
  for (size_t k = 0; k < tasks.size(); ++k) {
    std::vector<size_t> idx;
    for (auto i : tasks[k].local) idx.push_back(tasks[k].v->forms[i].index);
    r.total += values[k];
    r.pieces.push_back({tasks[k].v->point, idx, values[k]});
  }
  return r;
}

LocalizedResult trig_sum_auto(const Arrangement& a, const Lattice& theta, const Lattice& gamma,
                              const TrigRationalFunction& f, const Vec& t, const CtOptions& opts) {
  Mat dirs = a.directions();
  std::vector<TrigRationalFunction> parts;
  if (delta_interior(f)) parts.push_back(f);
  else parts = split_unit(f, a);
  LocalizedResult total;
  for (const auto& g : parts) {
    Vec mu = choose_shift(g, theta, &gamma, &t, &dirs);
    LocalizedResult r = trig_sum_localized(a, theta, gamma, g, t, mu, opts);
    total.total += r.total;
    total.pieces.insert(total.pieces.end(), r.pieces.begin(), r.pieces.end());
    total.shifts.push_back(mu);
  }
  return total;
}

Scalar bernoulli_value(const Arrangement& a, const Lattice& gamma, const RationalSummand& f, const Vec& t,
                       const Vec& mu, const CtOptions& opts) {
  Lattice gamma_dual = gamma.dual();
  Mat dirs = a.directions();
  if (is_special(sub(t, mu), gamma_dual, dirs)) throw Error(ErrorKind::SpecialBasePoint, "t - mu is special");
  std::vector<Vertex> vertices;
  if (a.central) {
    Vertex v{Vec(a.dim()), {}};
    for (size_t i = 0; i < a.forms.size(); ++i) v.forms.push_back({i, a.forms[i]});
    vertices.push_back(v);
  } else {
    vertices = affine_vertices(a);
  }
  FunctionExpr fe = f.to_expr();
  Scalar total;
  for (const auto& v : vertices) {
    std::vector<AffineForm> local;
    for (const auto& lf : v.forms) local.push_back(lf.local);
    total += deformed_ct(local, v.point, gamma, fe, t, mu, nullptr, {}, opts);
  }
  return a.dim() % 2 ? -total : total;
}

Scalar bernoulli_polynomial_value(const std::vector<AffineForm>& local_forms, const Vec& p, const Lattice& gamma,
                                  const FunctionExpr& f, const Vec& t, const Vec& u, const CtOptions& opts) {
  Scalar v = deformed_ct(local_forms, p, gamma, f, t, sub(t, u), nullptr, {}, opts);
  return p.size() % 2 ? -v : v;
}

namespace {

Rational rational_gcd(const Vec& xs) {
  Integer l = lcm_of_denominators(xs), g = 0;
  for (const auto& x : xs) {
    Rational s = x * l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  return Rational(g) / Rational(l);
}

Rational ceil_of(const Rational& r) { return -floor_of(-r); }

// Does t - s d hit lat + span(H) for some s in (0, eps]?
bool crosses_wall(const Mat& flat, const Lattice& lat, const Vec& t, const Vec& d, const Rational& eps) {
  size_t n = t.size();
  Mat ann = flat.empty() ? identity_matrix(n) : kernel(flat);
  if (ann.size() != 1) {
    // lower-dimensional flat: only the endpoint is checked
    Mat gens;
    for (const auto& b : lat.basis()) gens.push_back(times_col(ann, b));
    return in_lattice_span(gens, times_col(ann, sub(t, scale(d, eps))));
  }
  const Vec& eta = ann[0];
  Vec img;
  for (const auto& b : lat.basis()) img.push_back(dot(eta, b));
  Rational g = rational_gcd(img);
  Rational v0 = dot(eta, t), slope = dot(eta, d);
  if (sgn(slope) == 0) return sgn(g) == 0 ? sgn(v0) == 0 : is_integer(v0 / g);
  Rational v1 = v0 - eps * slope;
  Rational lo = std::min(v0, v1), hi = std::max(v0, v1);
  // integers k with k g in [lo, hi], excluding v0
  Rational k0 = ceil_of(lo / g), k1 = floor_of(hi / g);
  for (Rational k = k0; k <= k1; k += 1)
    if (k * g != v0) return true;
  return false;
}

}  // namespace

Vec choose_rational_shift(const Arrangement& a, const Lattice& gamma, const Vec& t) {
  size_t n = a.dim();
  Lattice gamma_dual = gamma.dual();
  Mat dirs = a.directions();
  auto flats = maximal_flats(dirs, n);
  for (size_t attempt = 0; attempt < 20; ++attempt) {
    Vec d = perturbation(n, attempt);
    Rational eps(1, 1000);
    for (int halving = 0; halving < 30; ++halving, eps /= 2) {
      bool ok = true;
      for (const auto& fl : flats)
        if (crosses_wall(fl, gamma_dual, t, d, eps)) {
          ok = false;
          break;
        }
      if (ok) return scale(d, eps);
    }
  }
  throw Error(ErrorKind::SpecialBasePoint, "no admissible small shift found");
}

std::complex<double> bernoulli_numeric_oracle(const Arrangement& a, const Lattice& gamma, const RationalSummand& f,
                                              const Vec& t, long cutoff) {
  size_t n = a.dim();
  const Mat& basis = gamma.basis();
  auto coeffs_of = [&](const Vec& lin, const Rational& c, std::vector<double>& out) {
    out.assign(n + 1, 0.0);
    for (size_t i = 0; i < n; ++i) out[i] = dot(lin, basis[i]).get_d();
    out[n] = c.get_d();
  };
  std::vector<std::vector<double>> den, hyper;
  std::vector<int> powers;
  for (const auto& d : f.denominator) {
    den.emplace_back();
    coeffs_of(d.form.linear, d.form.constant, den.back());
    powers.push_back(d.power);
  }
  for (const auto& y : a.forms) {
    hyper.emplace_back();
    coeffs_of(y.linear, y.constant, hyper.back());
  }
  std::vector<double> tc;
  coeffs_of(t, 0, tc);
  // coordinates of each monomial variable in gamma coordinates
  std::vector<std::vector<double>> coord(n);
  for (size_t i = 0; i < n; ++i) {
    Vec e(n);
    e[i] = 1;
    coeffs_of(e, 0, coord[i]);
  }
  std::vector<std::pair<Monomial, std::complex<double>>> mons;
  int dd = den_degree(f.denominator);
  for (const auto& [m, c] : f.numerator.terms) {
    std::complex<double> cc = c.to_complex();
    if (f.underlined) cc *= std::pow(std::complex<double>(0, 2 * M_PI), mono_degree(m) - dd);
    mons.push_back({m, cc});
  }
  long side = 2 * cutoff + 1;
  long total = 1;
  for (size_t i = 0; i < n; ++i) total *= side;
  size_t workers = std::max<size_t>(1, worker_count());
  std::vector<std::complex<long double>> partial(workers);
  parallel_for(workers, [&](size_t w) {
    std::complex<long double> acc = 0;
    std::vector<double> c(n), x(n);
    for (long idx = static_cast<long>(w); idx < total; idx += static_cast<long>(workers)) {
      long r = idx;
      for (size_t i = 0; i < n; ++i) {
        c[i] = static_cast<double>(r % side - cutoff);
        r /= side;
      }
      auto eval = [&](const std::vector<double>& k) {
        double s = k[n];
        for (size_t i = 0; i < n; ++i) s += k[i] * c[i];
        return s;
      };
      bool on = false;
      for (const auto& h : hyper)
        if (std::abs(eval(h)) < 1e-9) on = true;
      if (on) continue;
      double dv = 1;
      for (size_t j = 0; j < den.size(); ++j) dv *= std::pow(eval(den[j]), powers[j]);
      for (size_t i = 0; i < n; ++i) x[i] = eval(coord[i]);
      std::complex<double> num = 0;
      for (const auto& [m, cc] : mons) {
        double p = 1;
        for (size_t i = 0; i < n; ++i) p *= std::pow(x[i], m[i]);
        num += cc * p;
      }
      double ph = 2 * M_PI * eval(tc);
      acc += std::complex<long double>(num * std::complex<double>(std::cos(ph), std::sin(ph)) / dv);
    }
    partial[w] = acc;
  });
  std::complex<long double> s = 0;
  for (const auto& p : partial) s += p;
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

}  // namespace resloc
