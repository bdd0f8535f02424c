#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace resloc {

using Rational = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Rational>;

Rational parse_rational(const std::string& text);
// Always "p/q", also for integers.
std::string rational_to_json(const Rational& r);
// Shortest human form: "3", "-1/2".
std::string rational_to_string(const Rational& r);

Rational floor_of(const Rational& r);
Rational frac_of(const Rational& r);
bool is_integer(const Rational& r);

Integer lcm_of_denominators(const Vec& v);
Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& c);
bool is_zero(const Vec& v);
std::string vec_to_string(const Vec& v);

}  // namespace resloc
