#pragma once

#include <optional>
#include <vector>

#include "resloc/linalg.hpp"

namespace resloc {

// lower < coeffs . x < upper, either bound optional.
struct StrictConstraint {
  Vec coeffs;
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded } status;
  Vec x;
  Rational value;
};

// maximize c.x  s.t.  a_le x <= b_le,  a_eq x = b_eq,  x_j >= 0 unless free[j].
LpResult lp_maximize(const Vec& c, const Mat& a_le, const Vec& b_le, const Mat& a_eq, const Vec& b_eq,
                     const std::vector<bool>& free_vars);

struct StrictWitness {
  Vec x;
  Rational margin;  // every strict constraint holds with this slack (capped at 1)
};

// Point satisfying eq_a x = eq_b and every strict constraint, chosen to maximize the
// common slack. Returns nullopt when the open region is empty.
std::optional<StrictWitness> lp_strict_feasible(size_t dim, const Mat& eq_a, const Vec& eq_b,
                                                const std::vector<StrictConstraint>& strict);

}  // namespace resloc
