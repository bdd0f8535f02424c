#include "resloc/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace resloc {

Rational factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(long n, long k) {
  if (k < 0) return 0;
  Rational r = 1;
  for (long i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
  return r;
}

Rational bernoulli_number(unsigned m) {
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= m) {
    unsigned k = static_cast<unsigned>(cache.size());
    Rational s = 0;
    for (unsigned j = 0; j < k; ++j) s += binomial(k + 1, j) * cache[j];
    cache.push_back(-s / Rational(k + 1));
  }
  return cache[m];
}

Rational bernoulli_polynomial(unsigned m, const Rational& x) {
  Rational s = 0, xp = 1;
  // sum_k C(m,k) B_{m-k} x^k
  for (unsigned k = 0; k <= m; ++k) {
    s += binomial(m, k) * bernoulli_number(m - k) * xp;
    xp *= x;
  }
  return s;
}

}  // namespace resloc
