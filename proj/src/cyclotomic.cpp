#include "resloc/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "resloc/error.hpp"

namespace resloc {

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long long>& cyclotomic_polynomial(long n) {
  static std::mutex mu;
  static std::map<long, std::vector<long long>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  if (n < 1) throw Error(ErrorKind::InvalidInput, "cyclotomic order must be positive");
  // x^n - 1 divided by all Phi_d with d | n, d < n.
  std::vector<long long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto& den = cyclotomic_polynomial(d);
    long dn = static_cast<long>(num.size()) - 1, dd = static_cast<long>(den.size()) - 1;
    std::vector<long long> q(dn - dd + 1, 0);
    for (long i = dn; i >= dd; --i) {
      long long c = num[i];  // den is monic
      q[i - dd] = c;
      if (c == 0) continue;
      for (long j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = q;
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, num).first->second;
}

std::vector<Rational> reduce_cyclotomic(long n, std::vector<Rational> poly) {
  const auto& phi = cyclotomic_polynomial(n);
  size_t deg = phi.size() - 1;
  // fold exponents mod n first
  if (poly.size() > static_cast<size_t>(n)) {
    for (size_t i = n; i < poly.size(); ++i)
      if (sgn(poly[i]) != 0) poly[i % n] += poly[i];
    poly.resize(n);
  }
  for (size_t i = poly.size(); i-- > deg;) {
    if (sgn(poly[i]) == 0) continue;
    Rational c = poly[i];
    for (size_t j = 0; j < deg; ++j)
      if (phi[j] != 0) poly[i - deg + j] -= c * static_cast<long>(phi[j]);
    poly[i] = 0;
  }
  poly.resize(deg);
  return poly;
}

Cyclotomic::Cyclotomic(long order, std::vector<Rational> coeffs) : order_(order) {
  if (order < 1) throw Error(ErrorKind::InvalidInput, "cyclotomic order must be positive");
  coeffs_ = reduce_cyclotomic(order, std::move(coeffs));
  normalize();
}

Cyclotomic Cyclotomic::zeta(long order, long power) {
  long p = ((power % order) + order) % order;
  std::vector<Rational> c(p + 1);
  c[p] = 1;
  return Cyclotomic(order, std::move(c));
}

Cyclotomic Cyclotomic::root_of_unity(const Rational& q) {
  Rational f = frac_of(q);
  long den = f.get_den().get_si();
  long num = f.get_num().get_si();
  if (!f.get_den().fits_slong_p()) throw Error(ErrorKind::TooLarge, "root of unity order too large");
  return zeta(den, num);
}

void Cyclotomic::normalize() {
  if (order_ == 1) return;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return;
  Rational r = coeffs_.empty() ? Rational(0) : coeffs_[0];
  order_ = 1;
  coeffs_.assign(1, r);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

const Rational& Cyclotomic::rational_value() const {
  if (order_ != 1) throw Error(ErrorKind::InvalidInput, "cyclotomic number is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::lifted(long order) const {
  if (order % order_) throw Error(ErrorKind::InvalidInput, "lift order must be a multiple");
  if (order == order_) return *this;
  long step = order / order_;
  std::vector<Rational> poly(static_cast<size_t>((coeffs_.size() - 1) * step + 1));
  for (size_t j = 0; j < coeffs_.size(); ++j) poly[j * step] = coeffs_[j];
  Cyclotomic r;
  r.order_ = order;
  r.coeffs_ = reduce_cyclotomic(order, std::move(poly));
  return r;
}

namespace {
long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }
}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (order_ == o.order_) {
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  } else {
    long m = lcm_long(order_, o.order_);
    Cyclotomic a = lifted(m), b = o.lifted(m);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    *this = std::move(a);
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (order_ == 1 && o.order_ == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  if (o.order_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    normalize();
    return *this;
  }
  if (order_ == 1) {
    Rational s = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
  }
  long m = lcm_long(order_, o.order_);
  Cyclotomic a = lifted(m), b = o.lifted(m);
  std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      if (sgn(b.coeffs_[j]) != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  order_ = m;
  coeffs_ = reduce_cyclotomic(m, std::move(prod));
  normalize();
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvalidInput, "division by zero cyclotomic");
  if (order_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
  // Solve (multiplication by *this) x = 1 over Q.
  size_t d = coeffs_.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  for (size_t j = 0; j < d; ++j) {
    std::vector<Rational> col(d + j);
    for (size_t i = 0; i < d; ++i) col[i + j] = coeffs_[i];
    col = reduce_cyclotomic(order_, std::move(col));
    for (size_t i = 0; i < d; ++i) m[i][j] = col[i];
  }
  m[0][d] = 1;
  for (size_t c = 0; c < d; ++c) {
    size_t p = c;
    while (sgn(m[p][c]) == 0) ++p;
    std::swap(m[p], m[c]);
    Rational inv = 1 / m[c][c];
    for (size_t k = c; k <= d; ++k) m[c][k] *= inv;
    for (size_t r = 0; r < d; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c];
      for (size_t k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> x(d);
  for (size_t i = 0; i < d; ++i) x[i] = m[i][d];
  return Cyclotomic(order_, std::move(x));
}

Cyclotomic Cyclotomic::conj() const {
  if (order_ == 1) return *this;
  std::vector<Rational> poly(order_);
  for (size_t j = 0; j < coeffs_.size(); ++j) poly[(order_ - static_cast<long>(j)) % order_] += coeffs_[j];
  return Cyclotomic(order_, std::move(poly));
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> s = 0;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    double ang = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(order_);
    s += coeffs_[j].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

std::string Cyclotomic::to_string() const {
  if (order_ == 1) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    if (j == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "zeta" << order_;
    if (j > 1) os << "^" << j;
  }
  return os.str();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  return (a - b).is_zero();
}

}  // namespace resloc
