#pragma once

#include <functional>
#include <string>
#include <vector>

#include "resloc/sums.hpp"

namespace resloc {

// Coordinates: V has the simple coroots as basis (Theta = Z^n), so covectors are
// written in fundamental-weight coordinates (Dynkin labels) and Theta^* = Z^n.
struct RootSystem {
  char family = 'A';
  size_t rank = 0;
  IMat cartan;                 // cartan[i][j] = <alpha_i^vee, alpha_j>
  std::vector<Rational> half_norms;  // (alpha_i, alpha_i) / 2, long roots have norm 2
  Mat gram;                    // (omega_i, omega_j)
  Mat simple_roots;
  Mat positive_roots;
  Vec rho;
  Vec theta;                   // highest root
  long dual_coxeter = 0;
  Integer weyl_order = 0;
  Lattice coroots;             // Theta
  Lattice gamma;               // dual of the long-root lattice

  Rational inner(const Vec& a, const Vec& b) const;
  Vec reflect(const Vec& v, size_t i) const;
  bool is_long(const Vec& root) const;
  Arrangement arrangement() const;
  Rational index_gamma_theta() const;  // |Gamma / Theta|
  bool in_root_lattice(const Vec& weight) const;
};

RootSystem build_root_system(char family, size_t rank);
RootSystem build_root_system(const std::string& name);  // "A2", "G2", ...

// delta^{-m} with delta = e_rho prod_{alpha > 0} (1 - e_{-alpha}).
TrigRationalFunction weyl_denominator_power(const RootSystem& r, int m);
// Exact value of prod_{alpha > 0} 2i sin(pi alpha(v)).
Scalar weyl_denominator(const RootSystem& r, const Vec& v);

// Weyl orbit of a regular weight, with the sign of the group element.
std::vector<std::pair<Vec, int>> signed_orbit(const RootSystem& r, const Vec& regular);

Vec dominant_representative(const RootSystem& r, const Vec& v);
// Membership in the convex hull of the Weyl orbit of rho (closed unless strict).
bool in_delta(const RootSystem& r, const Vec& v, bool strict = false);
// rho - omega_i in Delta for every i.
bool check_rho_condition(const RootSystem& r);

Integer verlinde_bruteforce(const RootSystem& r, int g, long k, const Vec& lambda, size_t guard = 2000000);
Integer verlinde_localized(const RootSystem& r, int g, long k, const Vec& lambda, const CtOptions& opts = {});

struct Quasipolynomial {
  long period = 1;
  std::vector<std::vector<Rational>> polys;  // coefficients in m, lowest degree first, per residue class
  Rational operator()(long m) const;
};

// Exact interpolation of m -> value(m) on each residue class mod period, from
// degree + 1 samples with m >= first, verified at `held_out` further samples.
Quasipolynomial interpolate_quasipolynomial(const std::function<Rational(long)>& value, long period, size_t degree,
                                           long first = 1, size_t held_out = 2);

// Period for m -> V_g(m lambda; m k0): lcm over toric vertices p of the least m
// with m k0 p in Gamma and m lambda(p) integral.
long verlinde_period(const RootSystem& r, long k0, const Vec& lambda);
Quasipolynomial verlinde_quasipolynomial(const RootSystem& r, int g, const Vec& lambda, long k0,
                                         const CtOptions& opts = {});

}  // namespace resloc
