#pragma once

#include <vector>

#include "resloc/sums.hpp"

namespace resloc {

// Rewrites f over the central arrangement a as a sum of summands whose denominator
// directions contain no broken circuit. Denominator forms are replaced by the
// arrangement's representatives.
std::vector<RationalSummand> rational_partial_fractions(const Arrangement& a, const RationalSummand& f);

struct TrigPartialFractions {
  Arrangement arrangement;  // affine forms used by the terms, linear parts parallel to those of the input
  std::vector<TrigRationalFunction> terms;
};

// Trigonometric analogue: every output term has no broken circuit among its
// denominator directions and keeps mu in its Delta^0. Requires mu in Delta_f.
TrigPartialFractions trig_partial_fractions(const Arrangement& a, const Lattice& theta, const TrigRationalFunction& f,
                                            const Vec& mu, size_t max_terms = 200000);

}  // namespace resloc
