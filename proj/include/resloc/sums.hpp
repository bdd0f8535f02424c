#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resloc/ct_engine.hpp"

namespace resloc {

struct WeightTerm {
  Vec weight;
  Scalar coeff;
};

struct DenFactor {
  AffineForm form;
  int power = 1;
};

// sum_w c_w e_w / prod (1 - e_y)^{power}, with e_w(v) = exp(U w(v)).
struct TrigRationalFunction {
  std::vector<WeightTerm> numerator;
  std::vector<DenFactor> denominator;

  size_t dim() const;
  FunctionExpr to_expr() const;
  Scalar evaluate(const Vec& v) const;
  void normalize();  // merge equal weights and equal factors, drop zeros
};

// Polynomial in the ambient coordinates.
using Monomial = std::vector<int>;
struct Polynomial {
  std::map<Monomial, Scalar> terms;
  static Polynomial constant(size_t dim, const Scalar& c);
  static Polynomial of_form(const AffineForm& y);
  Polynomial& operator+=(const Polynomial& o);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Scalar evaluate(const Vec& v) const;
};

// numerator / prod y^{power}; underlined means the function is read at U*x.
struct RationalSummand {
  Polynomial numerator;
  std::vector<DenFactor> denominator;
  bool underlined = false;

  size_t dim() const;
  FunctionExpr to_expr() const;
  Scalar evaluate(const Vec& v) const;
  std::complex<double> evaluate_numeric(const std::vector<double>& v) const;
};

// Delta membership: mu + w in the open zonotope of the weighted denominator
// directions for every numerator weight w.
bool delta_contains(const TrigRationalFunction& f, const Vec& mu);
// Relative-interior variant used for terms whose directions need not span.
bool delta0_contains(const TrigRationalFunction& f, const Vec& mu);
// Human-readable reason why mu is not in Delta, or nothing when it is.
std::optional<std::string> delta_violation(const TrigRationalFunction& f, const Vec& mu);

// Rational interior point of Delta, perturbed so that it is nonspecial for the
// denominator directions w.r.t. theta and, when given, t - mu is nonspecial w.r.t. gamma.
Vec choose_shift(const TrigRationalFunction& f, const Lattice& theta, const Lattice* gamma = nullptr,
                 const Vec* t = nullptr, const Mat* extra_directions = nullptr);

// Writes f as a sum of functions with nonempty Delta using 1 = 1/(1-e_y) + 1/(1-e_{-y}).
std::vector<TrigRationalFunction> split_unit(const TrigRationalFunction& f, const Arrangement& a);

Scalar trig_sum_bruteforce(const Arrangement& a, const Lattice& theta, const Lattice& gamma,
                           const TrigRationalFunction& f, const Vec& t, size_t guard = 1000000);

struct LocalizedPiece {
  Vec vertex;
  std::vector<size_t> forms;  // arrangement indices of the tuple
  Scalar value;               // signed contribution
};

struct LocalizedResult {
  Scalar total;
  std::vector<LocalizedPiece> pieces;
  std::vector<Vec> shifts;
};

LocalizedResult trig_sum_localized(const Arrangement& a, const Lattice& theta, const Lattice& gamma,
                                   const TrigRationalFunction& f, const Vec& t, const Vec& mu,
                                   const CtOptions& opts = {});
// Chooses shifts automatically, splitting f first when Delta is empty.
LocalizedResult trig_sum_auto(const Arrangement& a, const Lattice& theta, const Lattice& gamma,
                              const TrigRationalFunction& f, const Vec& t, const CtOptions& opts = {});

// Value of the Bernoulli-type lattice sum sum_{gamma} e^{U t(gamma)} f(gamma).
Scalar bernoulli_value(const Arrangement& a, const Lattice& gamma, const RationalSummand& f, const Vec& t,
                       const Vec& mu, const CtOptions& opts = {});
// Small shift mu such that t - s*mu is nonspecial for s in (0, 1].
Vec choose_rational_shift(const Arrangement& a, const Lattice& gamma, const Vec& t);
// (-1)^n times the deformed constant term at one vertex.
Scalar bernoulli_polynomial_value(const std::vector<AffineForm>& local_forms, const Vec& p, const Lattice& gamma,
                                  const FunctionExpr& f, const Vec& t, const Vec& u, const CtOptions& opts = {});

std::complex<double> bernoulli_numeric_oracle(const Arrangement& a, const Lattice& gamma, const RationalSummand& f,
                                              const Vec& t, long cutoff);

}  // namespace resloc
