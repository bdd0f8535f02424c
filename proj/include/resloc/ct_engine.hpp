#pragma once

#include <vector>

#include "resloc/function_expr.hpp"
#include "resloc/lattice.hpp"

namespace resloc {

struct CtOptions {
  long extra_window = 0;         // widen every truncation bound (results must not change)
  size_t max_coefficients = 4000000;
};

// Iterated constant term at p with respect to the ordered tuple of independent
// affine forms: local coordinates w_i = tuple_i(v) - tuple_i(p), taken in order.
Scalar iterated_ct(const std::vector<AffineForm>& tuple, const Vec& p, const FunctionExpr& f,
                   const CtOptions& opts = {});

// One-variable constant term at 0.
Scalar ct_univariate(const FunctionExpr& f, const CtOptions& opts = {});

// Sum of iterated constant terms at 0 over the given bases (NBC bases if empty).
Scalar ct_arrangement(const Arrangement& a, const std::vector<Tuple>& basis, const FunctionExpr& f,
                      const CtOptions& opts = {});

// Todd-type factor for forms vanishing at the base point, linear parts in gamma^*:
// (1/vol) sum_{t~} e^{U t~} prod_i U x_i / (e^{U x_i°} - 1).
FunctionExpr todd_factor(const Lattice& gamma, const std::vector<AffineForm>& forms, const Vec& t, const Vec& mu);

struct DeformedTerm {
  Tuple tuple;  // indices into the local form list
  Scalar value;
};

// Sum over NBC bases of the local arrangement of the iterated constant term of
// todd * f. The local forms must vanish at p. Unsigned.
Scalar deformed_ct(const std::vector<AffineForm>& local_forms, const Vec& p, const Lattice& gamma,
                   const FunctionExpr& f, const Vec& t, const Vec& mu, std::vector<DeformedTerm>* terms = nullptr,
                   const std::vector<Tuple>& basis = {}, const CtOptions& opts = {});

}  // namespace resloc
