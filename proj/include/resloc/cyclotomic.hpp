#pragma once

#include <complex>
#include <string>
#include <vector>

#include "resloc/rational.hpp"

namespace resloc {

long euler_phi(long n);
// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long long>& cyclotomic_polynomial(long n);

// Element of Q(zeta_N), zeta_N = exp(2 pi i / N), stored in the power basis
// 1, zeta, ..., zeta^(phi(N)-1). Rational values are always kept at order 1.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1) {}
  Cyclotomic(const Rational& r) : order_(1), coeffs_{r} {}  // NOLINT
  Cyclotomic(long v) : order_(1), coeffs_{Rational(v)} {}   // NOLINT
  Cyclotomic(long order, std::vector<Rational> coeffs);

  // exp(2 pi i q).
  static Cyclotomic root_of_unity(const Rational& q);
  static Cyclotomic zeta(long order, long power);

  long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const { return order_ == 1; }
  const Rational& rational_value() const;

  Cyclotomic lifted(long order) const;
  Cyclotomic inverse() const;
  Cyclotomic conj() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  Cyclotomic operator-() const;
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

 private:
  void normalize();
  long order_;
  std::vector<Rational> coeffs_;
};

// Reduce a polynomial in zeta (any length, exponent = index) into the power basis of order n.
std::vector<Rational> reduce_cyclotomic(long n, std::vector<Rational> poly);

}  // namespace resloc
