#include "resloc/scalar.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "resloc/error.hpp"

namespace resloc {

Scalar::Scalar(const Cyclotomic& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

Scalar Scalar::u_power(int k, const Cyclotomic& coeff) {
  Scalar s;
  if (!coeff.is_zero()) s.terms_.emplace(k, coeff);
  return s;
}

bool Scalar::is_rational() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_rational();
}

Rational Scalar::to_rational() const {
  if (!is_rational()) throw Error(ErrorKind::InvalidInput, "scalar is not rational: " + pretty());
  return terms_.empty() ? Rational(0) : terms_.begin()->second.rational_value();
}

Cyclotomic Scalar::coefficient(int upow) const {
  auto it = terms_.find(upow);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

void Scalar::add_term(int k, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Scalar r;
  for (const auto& [a, x] : terms_)
    for (const auto& [b, y] : o.terms_) r.add_term(a + b, x * y);
  terms_ = std::move(r.terms_);
  return *this;
}

Scalar Scalar::inverse() const {
  if (terms_.size() != 1) throw Error(ErrorKind::InvalidInput, "only monomial scalars are invertible");
  const auto& [k, c] = *terms_.begin();
  return u_power(-k, c.inverse());
}

Scalar Scalar::conj() const {
  Scalar r;
  for (const auto& [k, c] : terms_) r.add_term(k, (k % 2 ? -c.conj() : c.conj()));
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }

std::complex<double> Scalar::to_complex() const {
  std::complex<double> u(0.0, 2.0 * M_PI), s = 0;
  for (const auto& [k, c] : terms_) s += c.to_complex() * std::pow(u, k);
  return s;
}

namespace {

// c * pi^k, optionally times i.
std::string pi_term(const Rational& c, int k, bool imag, bool leading) {
  std::ostringstream os;
  Rational a = abs(c);
  if (!leading) os << (sgn(c) < 0 ? " - " : " + ");
  else if (sgn(c) < 0) os << "-";
  std::string pi;
  if (k != 0) pi = std::abs(k) == 1 ? "pi" : "pi^" + std::to_string(std::abs(k));
  std::vector<std::string> num;
  if (a != 1 || (k == 0 && !imag) || (k < 0 && !imag)) num.push_back(a.get_str());
  if (imag) num.push_back("i");
  if (k > 0) num.push_back(pi);
  for (size_t i = 0; i < num.size(); ++i) os << (i ? "*" : "") << num[i];
  if (k < 0) os << "/" << pi;
  return os.str();
}

}  // namespace

std::string Scalar::pretty() const {
  if (terms_.empty()) return "0";
  bool all_rational = true;
  for (const auto& [k, c] : terms_) all_rational = all_rational && c.is_rational();
  std::ostringstream os;
  bool leading = true;
  if (all_rational) {
    // U^k = (2 pi)^k i^k
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      int k = it->first;
      Rational c = it->second.rational_value();
      Rational two_k = k >= 0 ? Rational(Integer(1) << k) : Rational(1, Integer(1) << -k);
      c *= two_k;
      int m = ((k % 4) + 4) % 4;
      if (m >= 2) c = -c;
      os << pi_term(c, k, m % 2 == 1, leading);
      leading = false;
    }
    return os.str();
  }
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!leading) os << " + ";
    leading = false;
    os << "(" << it->second.to_string() << ")";
    if (it->first != 0) os << "*(2*pi*i)^" << it->first;
  }
  return os.str();
}

}  // namespace resloc
