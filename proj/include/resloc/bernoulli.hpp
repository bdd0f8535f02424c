#pragma once

#include "resloc/rational.hpp"

namespace resloc {

// B_1 = -1/2 convention, so that z/(e^z - 1) = sum B_m z^m / m!.
Rational bernoulli_number(unsigned m);
Rational binomial(long n, long k);  // generalized: n may be negative
Rational factorial(unsigned n);
// Bernoulli polynomial B_m(x).
Rational bernoulli_polynomial(unsigned m, const Rational& x);

}  // namespace resloc
