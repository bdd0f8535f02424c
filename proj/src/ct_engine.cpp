#include "resloc/ct_engine.hpp"

#include <numeric>

#include "resloc/bernoulli.hpp"
#include "resloc/error.hpp"
#include "resloc/parallel.hpp"
#include "series.hpp"

namespace resloc {

using detail::Box;
using detail::Field;
using detail::LinearMono;
using detail::Series;
using detail::Uni;

namespace {

// Data of a linear form expressed in the ratio variables s.
struct Local {
  Vec c;           // coefficients in w
  Rational value;  // value at the base point
  size_t lead = 0;
};

Local localize(const Vec& linear, const Rational& value, const Mat& minv) {
  Local l{row_times(linear, minv), value, 0};
  while (l.lead < l.c.size() && sgn(l.c[l.lead]) == 0) ++l.lead;
  return l;
}

std::vector<long> prefix_exps(size_t n, size_t from, size_t to) {
  std::vector<long> e(n, 0);
  for (size_t k = from; k <= to; ++k) e[k] = 1;
  return e;
}

// sum_i c_i w_i with w_i = s_0 ... s_i
LinearMono linear_of(const Local& l, bool u_shift, const Rational& factor = 1) {
  LinearMono z;
  z.u_shift = u_shift;
  size_t n = l.c.size();
  for (size_t i = 0; i < n; ++i)
    if (sgn(l.c[i]) != 0) z.terms.push_back({prefix_exps(n, 0, i), l.c[i] * factor});
  return z;
}

// r with l = c_lead w_lead (1 + r)
LinearMono ratio_of(const Local& l) {
  LinearMono z;
  size_t n = l.c.size();
  for (size_t i = l.lead + 1; i < n; ++i)
    if (sgn(l.c[i]) != 0) z.terms.push_back({prefix_exps(n, l.lead + 1, i), l.c[i] / l.c[l.lead]});
  return z;
}

bool is_pole(const Rational& value, bool underlined) { return underlined ? is_integer(value) : sgn(value) == 0; }

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

std::vector<Rational> binomial_series(long e, size_t k) {
  std::vector<Rational> c(k + 1);
  for (size_t i = 0; i <= k; ++i) c[i] = binomial(e, static_cast<long>(i));
  return c;
}

std::vector<Rational> exp_series(size_t k) {
  std::vector<Rational> c(k + 1);
  for (size_t i = 0; i <= k; ++i) c[i] = 1 / factorial(static_cast<unsigned>(i));
  return c;
}

// (z / (e^z - 1))^m
Uni bernoulli_power(const Field& f, long m, size_t k) {
  std::vector<Rational> c(k + 1);
  for (size_t i = 0; i <= k; ++i)
    c[i] = m >= 0 ? Rational(bernoulli_number(static_cast<unsigned>(i)) / factorial(static_cast<unsigned>(i)))
                  : Rational(1 / factorial(static_cast<unsigned>(i + 1)));
  return detail::uni_pow(f, detail::uni_from_rational(f, c), std::abs(m), k);
}

struct AtomPlan {
  const Atom* atom;
  std::vector<Local> locals;  // one per form or exp term
  std::vector<long> prefactor;
  long u_offset = 0;
};

Scalar ict_product(const std::vector<AffineForm>& tuple, const Vec& p, const Mat& minv, const Product& prod,
                   const CtOptions& opts) {
  size_t n = tuple.size();
  std::vector<AtomPlan> plans;
  std::vector<long> a_total(n, 0);
  bool homogeneous = true;
  long order = 1;
  for (const auto& atom : prod.atoms) {
    AtomPlan plan{&atom, {}, std::vector<long>(n, 0), 0};
    if (atom.kind == Atom::Kind::ExpSum) {
      for (const auto& t : atom.terms) {
        Rational v = dot(t.weight, p) + t.constant;
        plan.locals.push_back(localize(t.weight, v, minv));
        if (atom.underlined) order = lcm_long(order, Cyclotomic::root_of_unity(v).order());
        else if (sgn(v) != 0) throw Error(ErrorKind::Unsupported, "plain exponential with nonzero constant");
        order = lcm_long(order, t.coeff.order());
      }
      if (!atom.underlined) homogeneous = false;
    } else {
      Local l = localize(atom.form.linear, atom.form(p), minv);
      if (l.lead == n) throw Error(ErrorKind::InvalidInput, "form with zero linear part");
      bool vanishing = atom.kind == Atom::Kind::FormPower ? sgn(l.value) == 0 : is_pole(l.value, atom.underlined);
      if (atom.kind == Atom::Kind::FormPower) {
        if (vanishing) {
          for (size_t i = 0; i <= l.lead; ++i) plan.prefactor[i] += atom.exponent;
        } else {
          homogeneous = false;
        }
      } else {
        if (!atom.underlined) homogeneous = false;
        if (vanishing) {
          for (size_t i = 0; i <= l.lead; ++i) plan.prefactor[i] -= atom.exponent;
          if (atom.underlined) plan.u_offset = -atom.exponent;
        } else if (atom.underlined) {
          order = lcm_long(order, Cyclotomic::root_of_unity(l.value).order());
        } else {
          throw Error(ErrorKind::Unsupported, "plain exponential fraction with nonzero constant");
        }
      }
      plan.locals.push_back(l);
    }
    for (size_t i = 0; i < n; ++i) a_total[i] += plan.prefactor[i];
    plans.push_back(std::move(plan));
  }
  std::vector<long> bounds(n);
  for (size_t i = 0; i < n; ++i) {
    if (-a_total[i] < 0) return Scalar();
    bounds[i] = -a_total[i] + opts.extra_window;
  }
  {
    double count = 1;
    for (auto b : bounds) count *= static_cast<double>(b + 1);
    if (count > static_cast<double>(opts.max_coefficients))
      throw Error(ErrorKind::ExpansionDepthExceeded, "truncation box too large");
  }
  Box box(bounds);
  Field field(order);
  size_t ulen = homogeneous ? 1 : static_cast<size_t>(box.total_degree() + 1);
  long u_offset = 0;
  std::vector<long> target(n);
  for (size_t i = 0; i < n; ++i) target[i] = -a_total[i];

  std::vector<Series> factors;
  for (const auto& plan : plans) {
    const Atom& atom = *plan.atom;
    u_offset += plan.u_offset;
    if (atom.kind == Atom::Kind::ExpSum) {
      Series s(field, box, ulen);
      for (size_t j = 0; j < atom.terms.size(); ++j) {
        const Local& l = plan.locals[j];
        LinearMono z = linear_of(l, atom.underlined);
        Uni g = detail::uni_from_rational(field, exp_series(detail::max_power(box, z)));
        Cyclotomic c = atom.terms[j].coeff;
        if (atom.underlined) c *= Cyclotomic::root_of_unity(l.value);
        s.add_scaled(detail::compose(field, box, ulen, g, z), field.from(c));
      }
      factors.push_back(std::move(s));
      continue;
    }
    const Local& l = plan.locals[0];
    long e = atom.exponent;
    if (atom.kind == Atom::Kind::FormPower) {
      if (sgn(l.value) != 0) {
        LinearMono z = linear_of(l, false, 1 / l.value);
        Series s = detail::compose(field, box, ulen,
                                   detail::uni_from_rational(field, binomial_series(e, detail::max_power(box, z))), z);
        Rational c = 1;
        for (long k = 0; k < std::abs(e); ++k) c *= l.value;
        s.scale(field.from(e >= 0 ? c : Rational(1 / c)));
        factors.push_back(std::move(s));
      } else {
        LinearMono r = ratio_of(l);
        Series s = detail::compose(field, box, ulen,
                                   detail::uni_from_rational(field, binomial_series(e, detail::max_power(box, r))), r);
        Rational c = 1;
        for (long k = 0; k < std::abs(e); ++k) c *= l.c[l.lead];
        s.scale(field.from(e >= 0 ? c : Rational(1 / c)));
        factors.push_back(std::move(s));
      }
      continue;
    }
    // ExpFrac: (1 - e^{k y})^{-e}
    LinearMono z = linear_of(l, atom.underlined);
    size_t kz = detail::max_power(box, z);
    if (is_pole(l.value, atom.underlined)) {
      // (1 - e^z)^{-e} = (-1)^e z^{-e} (z/(e^z-1))^e, z = k c_lead w_lead (1 + r)
      Series s = detail::compose(field, box, ulen, bernoulli_power(field, e, kz), z);
      LinearMono r = ratio_of(l);
      s = s * detail::compose(field, box, ulen,
                              detail::uni_from_rational(field, binomial_series(-e, detail::max_power(box, r))), r);
      Rational c = 1;
      for (long k = 0; k < std::abs(e); ++k) c *= l.c[l.lead];
      c = e >= 0 ? Rational(1 / c) : c;
      if (e % 2) c = -c;
      s.scale(field.from(c));
      factors.push_back(std::move(s));
    } else {
      Field::Elem big_e = field.from(Cyclotomic::root_of_unity(l.value));
      Uni base = detail::uni_from_rational(field, exp_series(kz));
      for (auto& x : base) {
        x = field.mul(x, big_e);
        for (auto& y : x) y = -y;
      }
      base[0][0] += 1;
      factors.push_back(detail::compose(field, box, ulen, detail::uni_pow(field, base, -e, kz), z));
    }
  }

  size_t idx = box.index_of(target);
  std::vector<Field::Elem> coeff;
  if (factors.empty()) {
    coeff.assign(ulen, field.zero());
    if (idx == 0) coeff[0] = field.one();
  } else {
    Series acc = factors[0];
    for (size_t i = 1; i + 1 < factors.size(); ++i) acc = acc * factors[i];
    coeff = factors.size() == 1 ? acc.coefficient(idx) : acc.product_coefficient(factors.back(), idx);
  }
  Scalar result;
  for (size_t u = 0; u < coeff.size(); ++u) {
    Cyclotomic c = field.to_cyclotomic(coeff[u]);
    if (c.is_zero()) continue;
    long upow = homogeneous ? target[0] + u_offset : static_cast<long>(u) + u_offset;
    result += Scalar::u_power(static_cast<int>(upow), c);
  }
  return result * prod.coeff;
}

}  // namespace

Scalar iterated_ct(const std::vector<AffineForm>& tuple, const Vec& p, const FunctionExpr& f, const CtOptions& opts) {
  size_t n = tuple.size();
  if (p.size() != n) throw Error(ErrorKind::InvalidInput, "tuple size must equal the dimension");
  Mat m;
  for (const auto& y : tuple) m.push_back(y.linear);
  auto minv = inverse(m);
  if (!minv) throw Error(ErrorKind::DependentTuple, "tuple forms are linearly dependent");
  Scalar total;
  for (const auto& prod : f.terms) total += ict_product(tuple, p, *minv, prod, opts);
  return total;
}

Scalar ct_univariate(const FunctionExpr& f, const CtOptions& opts) {
  return iterated_ct({AffineForm(Vec{Rational(1)})}, Vec{Rational(0)}, f, opts);
}

Scalar ct_arrangement(const Arrangement& a, const std::vector<Tuple>& basis, const FunctionExpr& f,
                      const CtOptions& opts) {
  if (!a.central) throw Error(ErrorKind::InvalidInput, "constant term at 0 needs a central arrangement");
  Mat dirs = a.directions();
  std::vector<Tuple> b = basis.empty() ? nbc_bases(dirs) : basis;
  if (!basis.empty() && !is_orthogonal_basis(dirs, basis))
    throw Error(ErrorKind::InvalidInput, "supplied basis is not orthogonal to the arrangement");
  Vec zero(a.dim());
  Scalar total;
  for (const auto& t : b) {
    std::vector<AffineForm> tuple;
    for (auto i : t) tuple.push_back(a.forms[i]);
    total += iterated_ct(tuple, zero, f, opts);
  }
  return total;
}

FunctionExpr todd_factor(const Lattice& gamma, const std::vector<AffineForm>& forms, const Vec& t, const Vec& mu) {
  Lattice gamma_dual = gamma.dual();
  Mat lin;
  for (const auto& y : forms) lin.push_back(y.linear);
  Rational vol = box_volume(lin, gamma_dual);
  std::vector<ExpTerm> chars;
  for (auto& w : box_characters(lin, gamma_dual, t, mu)) chars.push_back(ExpTerm{w, 0, Cyclotomic(1)});
  long n = static_cast<long>(forms.size());
  Product p;
  p.coeff = Scalar::u_power(static_cast<int>(n), Cyclotomic(n % 2 ? Rational(-1) / vol : Rational(1) / vol));
  p.atoms.push_back(Atom::exp_sum(chars, true));
  for (const auto& y : forms) {
    p.atoms.push_back(Atom::form_power(y, 1));
    p.atoms.push_back(Atom::exp_frac(AffineForm(y.linear, 0), 1, true));
  }
  FunctionExpr f;
  f.terms.push_back(p);
  return f;
}

Scalar deformed_ct(const std::vector<AffineForm>& local_forms, const Vec& p, const Lattice& gamma,
                   const FunctionExpr& f, const Vec& t, const Vec& mu, std::vector<DeformedTerm>* terms,
                   const std::vector<Tuple>& basis, const CtOptions& opts) {
  Mat dirs;
  for (const auto& y : local_forms) {
    if (sgn(y(p)) != 0) throw Error(ErrorKind::InvalidInput, "local forms must vanish at the base point");
    dirs.push_back(y.linear);
  }
  std::vector<Tuple> tuples = basis.empty() ? nbc_bases(dirs) : basis;
  Lattice gamma_dual = gamma.dual();
  std::vector<Scalar> values(tuples.size());
  parallel_for(tuples.size(), [&](size_t k) {
    std::vector<AffineForm> tuple;
    for (auto i : tuples[k]) tuple.push_back(local_forms[i].scaled(primitive_multiple(local_forms[i].linear, gamma_dual)));
    values[k] = iterated_ct(tuple, p, todd_factor(gamma, tuple, t, mu) * f, opts);
  });
  Scalar total;
  for (size_t k = 0; k < tuples.size(); ++k) {
    total += values[k];
    if (terms) terms->push_back({tuples[k], values[k]});
  }
  return total;
}

}  // namespace resloc
