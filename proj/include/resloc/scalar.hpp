#pragma once

#include <complex>
#include <map>
#include <string>

#include "resloc/cyclotomic.hpp"

namespace resloc {

// Laurent polynomial in U = 2 pi i with cyclotomic coefficients.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Cyclotomic& c);  // NOLINT
  Scalar(const Rational& r) : Scalar(Cyclotomic(r)) {}  // NOLINT
  Scalar(long v) : Scalar(Cyclotomic(v)) {}  // NOLINT

  static Scalar u_power(int k, const Cyclotomic& coeff = Cyclotomic(1));

  const std::map<int, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational to_rational() const;
  Cyclotomic coefficient(int upow) const;

  Scalar inverse() const;  // monomials only
  Scalar conj() const;     // complex conjugate, U -> -U
  std::complex<double> to_complex() const;
  std::string pretty() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r(a);
    return r *= b;
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar operator-() const;
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  void add_term(int k, const Cyclotomic& c);
  std::map<int, Cyclotomic> terms_;
};

}  // namespace resloc
