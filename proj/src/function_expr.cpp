#include "resloc/function_expr.hpp"

#include <cmath>

#include "resloc/error.hpp"

namespace resloc {

Atom Atom::form_power(AffineForm y, int e) {
  Atom a;
  a.kind = Kind::FormPower;
  a.form = std::move(y);
  a.exponent = e;
  a.underlined = false;
  return a;
}

Atom Atom::exponential(Vec weight, Rational constant, bool underlined) {
  return exp_sum({ExpTerm{std::move(weight), std::move(constant), Cyclotomic(1)}}, underlined);
}

Atom Atom::exp_sum(std::vector<ExpTerm> terms, bool underlined) {
  Atom a;
  a.kind = Kind::ExpSum;
  a.terms = std::move(terms);
  a.underlined = underlined;
  return a;
}

Atom Atom::exp_frac(AffineForm y, int m, bool underlined) {
  Atom a;
  a.kind = Kind::ExpFrac;
  a.form = std::move(y);
  a.exponent = m;
  a.underlined = underlined;
  return a;
}

FunctionExpr FunctionExpr::constant(const Scalar& c) {
  FunctionExpr f;
  if (!c.is_zero()) f.terms.push_back(Product{c, {}});
  return f;
}

FunctionExpr FunctionExpr::of(const Atom& a, const Scalar& c) {
  FunctionExpr f;
  f.terms.push_back(Product{c, {a}});
  return f;
}

FunctionExpr& FunctionExpr::operator+=(const FunctionExpr& o) {
  terms.insert(terms.end(), o.terms.begin(), o.terms.end());
  return *this;
}

FunctionExpr operator*(const FunctionExpr& a, const FunctionExpr& b) {
  FunctionExpr r;
  for (const auto& x : a.terms)
    for (const auto& y : b.terms) {
      Product p{x.coeff * y.coeff, x.atoms};
      p.atoms.insert(p.atoms.end(), y.atoms.begin(), y.atoms.end());
      if (!p.coeff.is_zero()) r.terms.push_back(std::move(p));
    }
  return r;
}

FunctionExpr FunctionExpr::scaled(const Scalar& c) const {
  FunctionExpr r(*this);
  for (auto& t : r.terms) t.coeff *= c;
  return r;
}

size_t FunctionExpr::dim() const {
  for (const auto& t : terms)
    for (const auto& a : t.atoms) {
      if (a.kind != Atom::Kind::ExpSum) return a.form.dim();
      if (!a.terms.empty()) return a.terms[0].weight.size();
    }
  return 0;
}

namespace {

Scalar exp_value(const Rational& arg, bool underlined) {
  if (underlined) return Scalar(Cyclotomic::root_of_unity(arg));
  if (sgn(arg) != 0) throw Error(ErrorKind::Unsupported, "plain exponential of a nonzero rational is not exact");
  return Scalar(1);
}

Scalar power(const Scalar& x, int e) {
  Scalar base = e >= 0 ? x : x.inverse(), r(1);
  for (int i = 0; i < std::abs(e); ++i) r *= base;
  return r;
}

}  // namespace

Scalar FunctionExpr::evaluate(const Vec& v) const {
  Scalar total;
  for (const auto& t : terms) {
    Scalar p = t.coeff;
    for (const auto& a : t.atoms) {
      switch (a.kind) {
        case Atom::Kind::FormPower: {
          Rational y = a.form(v);
          if (sgn(y) == 0 && a.exponent < 0) throw Error(ErrorKind::InvalidInput, "evaluation on a pole");
          p *= power(Scalar(y), a.exponent);
          break;
        }
        case Atom::Kind::ExpSum: {
          Scalar s;
          for (const auto& e : a.terms) s += Scalar(e.coeff) * exp_value(dot(e.weight, v) + e.constant, a.underlined);
          p *= s;
          break;
        }
        case Atom::Kind::ExpFrac: {
          Scalar d = Scalar(1) - exp_value(a.form(v), a.underlined);
          if (d.is_zero() && a.exponent > 0) throw Error(ErrorKind::InvalidInput, "evaluation on a pole");
          Cyclotomic c = d.coefficient(0);
          p *= power(Scalar(c), -a.exponent);
          break;
        }
      }
    }
    total += p;
  }
  return total;
}

std::complex<double> FunctionExpr::evaluate_numeric(const std::vector<double>& v) const {
  const std::complex<double> u(0.0, 2.0 * M_PI);
  auto lin = [&](const Vec& w, const Rational& c) {
    double s = c.get_d();
    for (size_t i = 0; i < w.size(); ++i) s += w[i].get_d() * v[i];
    return s;
  };
  std::complex<double> total = 0;
  for (const auto& t : terms) {
    std::complex<double> p = t.coeff.to_complex();
    for (const auto& a : t.atoms) {
      std::complex<double> k = a.underlined ? u : std::complex<double>(1.0);
      switch (a.kind) {
        case Atom::Kind::FormPower:
          p *= std::pow(std::complex<double>(lin(a.form.linear, a.form.constant)), a.exponent);
          break;
        case Atom::Kind::ExpSum: {
          std::complex<double> s = 0;
          for (const auto& e : a.terms) s += e.coeff.to_complex() * std::exp(k * lin(e.weight, e.constant));
          p *= s;
          break;
        }
        case Atom::Kind::ExpFrac:
          p *= std::pow(1.0 - std::exp(k * lin(a.form.linear, a.form.constant)), -a.exponent);
          break;
      }
    }
    total += p;
  }
  return total;
}

}  // namespace resloc
