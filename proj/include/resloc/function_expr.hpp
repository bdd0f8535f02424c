#pragma once

#include <complex>
#include <vector>

#include "resloc/arrangement.hpp"
#include "resloc/scalar.hpp"

namespace resloc {

// coeff * exp(k * (weight . v + constant)), k = U when underlined, else 1
struct ExpTerm {
  Vec weight;
  Rational constant;
  Cyclotomic coeff = Cyclotomic(1);
};

struct Atom {
  enum class Kind { FormPower, ExpSum, ExpFrac };
  Kind kind = Kind::FormPower;
  AffineForm form;            // FormPower, ExpFrac
  int exponent = 1;           // y^e, or (1 - e^{k y})^{-e}
  std::vector<ExpTerm> terms;  // ExpSum
  bool underlined = true;

  static Atom form_power(AffineForm y, int e);
  static Atom exponential(Vec weight, Rational constant = 0, bool underlined = true);
  static Atom exp_sum(std::vector<ExpTerm> terms, bool underlined = true);
  static Atom exp_frac(AffineForm y, int m, bool underlined = true);
};

struct Product {
  Scalar coeff = Scalar(1);
  std::vector<Atom> atoms;
};

// Finite sum of products of atoms.
struct FunctionExpr {
  std::vector<Product> terms;

  static FunctionExpr constant(const Scalar& c);
  static FunctionExpr of(const Atom& a, const Scalar& c = Scalar(1));
  FunctionExpr& operator+=(const FunctionExpr& o);
  friend FunctionExpr operator+(FunctionExpr a, const FunctionExpr& b) { return a += b; }
  friend FunctionExpr operator*(const FunctionExpr& a, const FunctionExpr& b);
  FunctionExpr scaled(const Scalar& c) const;
  size_t dim() const;

  // Exact value at a rational point; plain exponentials must have zero argument.
  Scalar evaluate(const Vec& v) const;
  std::complex<double> evaluate_numeric(const std::vector<double>& v) const;
};

}  // namespace resloc
