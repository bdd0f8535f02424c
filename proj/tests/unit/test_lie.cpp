#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "resloc/error.hpp"
#include "resloc/lie.hpp"
#include "unit/printers.hpp"

using namespace resloc;

namespace {

Rational q(long a, long b = 1) { return Rational(a) / Rational(b); }

Vec random_weight(std::mt19937& rng, size_t n) {
  Vec v(n);
  for (auto& x : v) x = q(long(rng() % 13) - 6, 1 + rng() % 4);
  return v;
}

// SU(2): sum_{j=1}^{k+1} ((k+2)/2)^{g-1} sin(j pi/(k+2))^{2-2g}
double su2_verlinde(int g, long k) {
  double s = 0;
  for (long j = 1; j <= k + 1; ++j) s += std::pow((k + 2) / 2.0, g - 1) * std::pow(std::sin(j * M_PI / (k + 2)), 2 - 2 * g);
  return s;
}

// Sum of 1/(sin sin sin)^2 over 0 < m, n < K, m + n != K.
double sine_sum(long K) {
  double s = 0;
  for (long m = 1; m < K; ++m)
    for (long n = 1; n < K; ++n) {
      if (m + n == K) continue;
      double a = std::sin(M_PI * m / K), b = std::sin(M_PI * n / K), c = std::sin(M_PI * (m + n) / K);
      s += 1 / (a * a * b * b * c * c);
    }
  return s;
}

// A2 weights in epsilon coordinates: (a, b) -> (a + b, b, 0).
std::vector<Rational> a2_eps(const Vec& v) { return {v[0] + v[1], v[1], Rational(0)}; }

// D4 fundamental weights in epsilon coordinates.
std::vector<Rational> d4_eps(const Vec& v) {
  std::vector<Rational> e(4);
  Mat om{{q(1), q(0), q(0), q(0)}, {q(1), q(1), q(0), q(0)}, {q(1, 2), q(1, 2), q(1, 2), q(-1, 2)},
         {q(1, 2), q(1, 2), q(1, 2), q(1, 2)}};
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) e[j] += v[i] * om[i][j];
  return e;
}

}  // namespace

TEST(RootSystem, ClassicalData) {
  struct Row {
    char f;
    size_t n;
    size_t pos;
    long h;
  };
  for (auto r : {Row{'A', 1, 1, 2}, Row{'A', 2, 3, 3}, Row{'A', 4, 10, 5}, Row{'B', 2, 4, 3}, Row{'B', 3, 9, 5},
                 Row{'C', 3, 9, 4}, Row{'D', 4, 12, 6}, Row{'G', 2, 6, 4}}) {
    auto rs = build_root_system(r.f, r.n);
    EXPECT_EQ(rs.positive_roots.size(), r.pos) << r.f << r.n;
    EXPECT_EQ(rs.dual_coxeter, r.h) << r.f << r.n;
    EXPECT_EQ(Integer(signed_orbit(rs, rs.rho).size()), rs.weyl_order) << r.f << r.n;
    EXPECT_EQ(rs.inner(rs.theta, rs.theta), q(2));
    EXPECT_TRUE(rs.gamma.contains(rs.coroots));
    EXPECT_TRUE(rs.coroots.dual().contains(rs.gamma.dual()));
  }
}

TEST(RootSystem, HighestRootOfD4) {
  auto r = build_root_system('D', 4);
  auto e = d4_eps(r.theta);
  EXPECT_EQ(e, (std::vector<Rational>{q(1), q(1), q(0), q(0)}));
}

TEST(RootSystem, GramMatchesEuclideanB2) {
  // alpha_1 = e1 - e2, alpha_2 = e2; omega_1 = e1, omega_2 = (e1 + e2)/2.
  auto r = build_root_system('B', 2);
  EXPECT_EQ(r.gram, (Mat{{q(1), q(1, 2)}, {q(1, 2), q(1, 2)}}));
}

TEST(RootSystem, Unsupported) {
  EXPECT_THROW(build_root_system('E', 6), Error);
  EXPECT_THROW(build_root_system('G', 3), Error);
  EXPECT_THROW(build_root_system("F4"), Error);
}

// Grid oracle: points of (1/N)Z^n / Z^n where the integral roots span.
std::set<Vec> vertex_grid(const RootSystem& r, long N) {
  std::set<Vec> out;
  size_t n = r.rank;
  std::vector<long> idx(n, 0);
  for (;;) {
    Vec p(n);
    for (size_t i = 0; i < n; ++i) p[i] = q(idx[i], N);
    Mat integral;
    for (const auto& a : r.positive_roots)
      if (is_integer(dot(a, p))) integral.push_back(a);
    if (!integral.empty() && rank_of(integral) == n) out.insert(p);
    size_t i = 0;
    while (i < n && ++idx[i] == N) idx[i++] = 0;
    if (i == n) break;
  }
  return out;
}

std::set<Vec> vertex_points(const RootSystem& r) {
  std::set<Vec> s;
  for (const auto& v : toric_vertices(r.arrangement(), r.coroots)) s.insert(v.point);
  return s;
}

TEST(RootSystem, ToricVertexClasses) {
  // Modulo the coroot lattice: B2 has 0, (1/2,0), (0,1/2), (1/2,1/2).
  auto b2 = build_root_system('B', 2);
  EXPECT_EQ(vertex_points(b2), vertex_grid(b2, 12));
  EXPECT_EQ(vertex_points(b2).size(), 4u);
  // G2: the origin, two points of order 3 and three of order 2.
  auto g2 = build_root_system('G', 2);
  EXPECT_EQ(vertex_points(g2), vertex_grid(g2, 12));
  EXPECT_EQ(vertex_points(g2).size(), 6u);
  auto a2 = build_root_system('A', 2);
  EXPECT_EQ(vertex_points(a2), vertex_grid(a2, 12));
}

TEST(WeylDenominator, RankOne) {
  auto r = build_root_system('A', 1);
  auto f = weyl_denominator_power(r, 1);
  ASSERT_EQ(f.numerator.size(), 1u);
  EXPECT_EQ(f.numerator[0].weight, Vec{q(-1)});
  ASSERT_EQ(f.denominator.size(), 1u);
  EXPECT_EQ(f.denominator[0].form.linear, Vec{q(-2)});
}

TEST(WeylDenominator, MatchesSineProduct) {
  std::mt19937 rng(2);
  for (char fam : {'A', 'B', 'G'}) {
    auto r = build_root_system(fam, 2);
    for (int it = 0; it < 5; ++it) {
      Vec v{q(1 + rng() % 11, 12), q(1 + rng() % 9, 10)};
      std::complex<double> prod = 1;
      for (const auto& a : r.positive_roots) prod *= std::complex<double>(0, 2 * std::sin(M_PI * dot(a, v).get_d()));
      auto d = weyl_denominator(r, v);
      EXPECT_NEAR(std::abs(d.to_complex() - prod), 0, 1e-9);
      if (!d.is_zero()) EXPECT_EQ(weyl_denominator_power(r, 1).evaluate(v) * d, Scalar(1));
    }
  }
}

TEST(Dominant, TypeAIsSorting) {
  auto r = build_root_system('A', 2);
  std::mt19937 rng(3);
  for (int it = 0; it < 30; ++it) {
    Vec v = random_weight(rng, 2);
    auto d = dominant_representative(r, v);
    auto e = a2_eps(v);
    std::sort(e.begin(), e.end(), std::greater<>());
    auto de = a2_eps(d);
    // equal up to adding a multiple of (1,1,1)
    Rational shift = de[2] - e[2];
    for (size_t i = 0; i < 3; ++i) EXPECT_EQ(de[i], e[i] + shift);
  }
}

TEST(Dominant, TypeDAbsoluteValues) {
  auto r = build_root_system('D', 4);
  std::mt19937 rng(4);
  for (int it = 0; it < 30; ++it) {
    Vec v = random_weight(rng, 4);
    auto e = d4_eps(v);
    int negatives = 0;
    for (auto& x : e) {
      if (sgn(x) < 0) ++negatives;
      x = abs(x);
    }
    std::sort(e.begin(), e.end(), std::greater<>());
    if (negatives % 2) e[3] = -e[3];
    EXPECT_EQ(d4_eps(dominant_representative(r, v)), e);
  }
}

TEST(Dominant, IdempotentAndIsometric) {
  std::mt19937 rng(5);
  for (char fam : {'A', 'B', 'C', 'G'}) {
    auto r = build_root_system(fam, 2);
    for (int it = 0; it < 20; ++it) {
      Vec v = random_weight(rng, 2);
      auto d = dominant_representative(r, v);
      EXPECT_EQ(dominant_representative(r, d), d);
      EXPECT_EQ(r.inner(d, d), r.inner(v, v));
      for (const auto& x : d) EXPECT_GE(sgn(x), 0);
    }
  }
  auto r = build_root_system('B', 3);
  EXPECT_EQ(dominant_representative(r, r.rho), r.rho);
}

TEST(Delta, Membership) {
  for (char fam : {'A', 'B', 'C', 'D', 'G'}) {
    size_t n = fam == 'D' ? 4 : fam == 'G' ? 2 : 3;
    auto r = build_root_system(fam, n);
    EXPECT_TRUE(in_delta(r, r.rho));
    EXPECT_FALSE(in_delta(r, r.rho, true));
    EXPECT_FALSE(in_delta(r, scale(r.rho, q(2))));
    EXPECT_TRUE(in_delta(r, Vec(n)));
  }
  auto a3 = build_root_system('A', 3);
  for (size_t m = 0; m < 3; ++m) {
    Vec v = a3.rho;
    v[m] -= 1;
    EXPECT_TRUE(in_delta(a3, v));
  }
}

TEST(Delta, WeylInvariant) {
  std::mt19937 rng(6);
  auto r = build_root_system('B', 3);
  for (int it = 0; it < 40; ++it) {
    Vec v = random_weight(rng, 3);
    Vec w = v;
    for (int s = 0; s < 6; ++s) w = r.reflect(w, rng() % 3);
    EXPECT_EQ(in_delta(r, v), in_delta(r, w));
  }
}

TEST(Delta, RhoCondition) {
  for (size_t n = 1; n <= 4; ++n) EXPECT_TRUE(check_rho_condition(build_root_system('A', n)));
  for (size_t n = 2; n <= 4; ++n) {
    EXPECT_TRUE(check_rho_condition(build_root_system('B', n)));
    EXPECT_TRUE(check_rho_condition(build_root_system('C', n)));
  }
  EXPECT_TRUE(check_rho_condition(build_root_system('D', 4)));
  EXPECT_TRUE(check_rho_condition(build_root_system('G', 2)));
}

TEST(Verlinde, SU2MatchesSineFormula) {
  auto r = build_root_system('A', 1);
  for (int g = 1; g <= 3; ++g)
    for (long k = 0; k <= 6; ++k) {
      auto v = verlinde_bruteforce(r, g, k, Vec{q(0)});
      EXPECT_EQ(v, Integer(static_cast<long>(std::llround(su2_verlinde(g, k))))) << g << " " << k;
      EXPECT_NEAR(v.get_d(), su2_verlinde(g, k), 1e-6 * std::max(1.0, su2_verlinde(g, k)));
    }
  EXPECT_EQ(verlinde_bruteforce(r, 2, 1, Vec{q(0)}), 4);
}

TEST(Verlinde, SU3MatchesSineSum) {
  auto r = build_root_system('A', 2);
  for (long k = 1; k <= 4; ++k) {
    long K = k + 3;
    double expect = 3.0 * K * K * sine_sum(K) / 128.0;
    EXPECT_NEAR(verlinde_bruteforce(r, 2, k, Vec{q(0), q(0)}).get_d(), expect, 1e-6 * expect) << k;
  }
}

TEST(Verlinde, NotInRootLatticeVanishes) {
  auto r = build_root_system('A', 2);
  EXPECT_EQ(verlinde_bruteforce(r, 2, 2, Vec{q(1), q(0)}), 0);
  EXPECT_EQ(verlinde_localized(r, 2, 2, Vec{q(1), q(0)}), 0);
}

TEST(Verlinde, LocalizedMatchesBruteForce) {
  for (long k = 1; k <= 6; ++k) {
    auto a1 = build_root_system('A', 1);
    EXPECT_EQ(verlinde_localized(a1, 2, k, Vec{q(0)}), verlinde_bruteforce(a1, 2, k, Vec{q(0)})) << k;
  }
  auto a2 = build_root_system('A', 2);
  for (long k = 1; k <= 4; ++k)
    EXPECT_EQ(verlinde_localized(a2, 2, k, Vec{q(0), q(0)}), verlinde_bruteforce(a2, 2, k, Vec{q(0), q(0)})) << k;
  auto b2 = build_root_system('B', 2);
  for (long k = 1; k <= 3; ++k)
    EXPECT_EQ(verlinde_localized(b2, 1, k, Vec{q(0), q(0)}), verlinde_bruteforce(b2, 1, k, Vec{q(0), q(0)})) << k;
  for (long k = 2; k <= 3; ++k)
    EXPECT_EQ(verlinde_localized(b2, 2, k, b2.theta), verlinde_bruteforce(b2, 2, k, b2.theta)) << k;
}

TEST(Verlinde, LevelBound) { EXPECT_THROW(verlinde_bruteforce(build_root_system('A', 1), 2, 1, Vec{q(2)}), Error); }

TEST(Quasipolynomial, SU2IsPolynomial) {
  auto r = build_root_system('A', 1);
  EXPECT_EQ(verlinde_period(r, 1, Vec{q(0)}), 1);
  auto qp = verlinde_quasipolynomial(r, 2, Vec{q(0)}, 1);
  for (long m = 1; m <= 8; ++m) EXPECT_EQ(qp(m), Rational(verlinde_bruteforce(r, 2, m, Vec{q(0)}))) << m;
}

TEST(Quasipolynomial, G2HasPeriodTwo) {
  EXPECT_EQ(verlinde_period(build_root_system('G', 2), 1, Vec{q(0), q(0)}), 2);
}

TEST(Quasipolynomial, InterpolationDetectsWrongDegree) {
  auto cubic = [](long m) { return Rational(m * m * m + (m % 2)); };
  auto qp = interpolate_quasipolynomial(cubic, 2, 3);
  for (long m = 1; m < 20; ++m) EXPECT_EQ(qp(m), cubic(m));
  EXPECT_THROW(interpolate_quasipolynomial(cubic, 1, 3), Error);
}
