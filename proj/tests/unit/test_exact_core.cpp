#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "resloc/bernoulli.hpp"
#include "resloc/cyclotomic.hpp"
#include "resloc/linalg.hpp"
#include "resloc/lp.hpp"
#include "resloc/scalar.hpp"

using namespace resloc;

namespace {

Rational q(long a, long b = 1) { return Rational(a) / Rational(b); }

Cyclotomic random_cyclotomic(std::mt19937& rng, long order) {
  std::uniform_int_distribution<long> d(-5, 5);
  std::vector<Rational> c(euler_phi(order));
  for (auto& x : c) x = q(d(rng), 1 + std::abs(d(rng)));
  return Cyclotomic(order, c);
}

}  // namespace

TEST(Bernoulli, FirstValues) {
  EXPECT_EQ(bernoulli_number(0), q(1));
  EXPECT_EQ(bernoulli_number(1), q(-1, 2));
  EXPECT_EQ(bernoulli_number(2), q(1, 6));
  EXPECT_EQ(bernoulli_number(3), q(0));
  EXPECT_EQ(bernoulli_number(12), q(-691, 2730));
}

TEST(Bernoulli, MatchesGeneratingFunction) {
  // Oracle: z/(e^z-1) * (e^z-1)/z = 1, i.e. sum_{j<=m} B_j/(j! (m-j+1)!) = [m==0].
  for (unsigned m = 0; m < 25; ++m) {
    Rational s = 0;
    for (unsigned j = 0; j <= m; ++j) s += bernoulli_number(j) / (factorial(j) * factorial(m - j + 1));
    EXPECT_EQ(s, q(m == 0 ? 1 : 0)) << m;
  }
}

TEST(Cyclotomic, PolynomialDegrees) {
  for (long n = 1; n <= 60; ++n) EXPECT_EQ(cyclotomic_polynomial(n).size() - 1, static_cast<size_t>(euler_phi(n)));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long long>{1, -1, 1}));
}

TEST(Cyclotomic, RootsOfUnityRelations) {
  for (long n = 1; n <= 24; ++n) {
    Cyclotomic z = Cyclotomic::zeta(n, 1), p(1), sum(0);
    for (long j = 0; j < n; ++j) {
      sum += p;
      p *= z;
    }
    EXPECT_EQ(p, Cyclotomic(1)) << n;
    EXPECT_EQ(sum, Cyclotomic(n == 1 ? 1 : 0)) << n;
  }
}

TEST(Cyclotomic, FieldAxioms) {
  std::mt19937 rng(7);
  for (long n : {3L, 4L, 5L, 7L, 8L, 12L, 15L, 24L}) {
    for (int rep = 0; rep < 5; ++rep) {
      Cyclotomic a = random_cyclotomic(rng, n), b = random_cyclotomic(rng, n * 2);
      EXPECT_EQ((a + b) - b, a);
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Cyclotomic(1));
      auto ca = a.to_complex(), cb = b.to_complex(), cab = (a * b).to_complex();
      EXPECT_NEAR(std::abs(ca * cb - cab), 0.0, 1e-9);
    }
  }
}

TEST(Cyclotomic, RootOfUnityValues) {
  EXPECT_EQ(Cyclotomic::root_of_unity(q(1, 2)), Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic::root_of_unity(q(3)), Cyclotomic(1));
  Cyclotomic i = Cyclotomic::root_of_unity(q(1, 4));
  EXPECT_EQ(i * i, Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic::root_of_unity(q(1, 3)) + Cyclotomic::root_of_unity(q(2, 3)), Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic::root_of_unity(q(1, 6)).lifted(12), Cyclotomic::zeta(12, 2));
}

TEST(Scalar, EmbeddingAndPretty) {
  Scalar a(q(3, 4)), b(Cyclotomic(q(3, 4)));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a * Scalar(q(4, 3)), Scalar(1));
  // pi^2 - 8 = -U^2/4 - 8
  Scalar v = Scalar::u_power(2, q(-1, 4)) + Scalar(-8);
  EXPECT_EQ(v.pretty(), "pi^2 - 8");
  EXPECT_NEAR(v.to_complex().real(), M_PI * M_PI - 8, 1e-12);
  EXPECT_EQ(Scalar(q(-1, 30240)).pretty(), "-1/30240");
  EXPECT_EQ((Scalar::u_power(-3, q(2)) * Scalar::u_power(3)).to_rational(), q(2));
}

TEST(Smith, Examples) {
  auto check = [](const IMat& m, const std::vector<long>& diag) {
    SmithForm s = smith_normal_form(m);
    size_t r = m.size(), c = m[0].size();
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) {
        Integer x = 0;
        for (size_t k = 0; k < r; ++k)
          for (size_t l = 0; l < c; ++l) x += s.u[i][k] * m[k][l] * s.v[l][j];
        EXPECT_EQ(x, s.d[i][j]);
        if (i != j) EXPECT_EQ(s.d[i][j], 0);
      }
    for (size_t i = 0; i < diag.size(); ++i) EXPECT_EQ(s.d[i][i], diag[i]);
    auto to_q = [](const IMat& a) {
      Mat q(a.size(), Vec(a.size()));
      for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) q[i][j] = a[i][j];
      return q;
    };
    EXPECT_EQ(abs(determinant(to_q(s.u))), 1);
    EXPECT_EQ(abs(determinant(to_q(s.v))), 1);
  };
  check({{1, 0}, {0, 1}}, {1, 1});
  check({{2, 0}, {0, 3}}, {1, 6});
  check({{2, 4}, {0, 4}}, {2, 4});
  check({{6, 4, 2}, {4, 8, 6}, {2, 2, 14}}, {});
}

TEST(Smith, RandomDeterminantAndChain) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int rep = 0; rep < 30; ++rep) {
    IMat m(3, IVec(3));
    Mat mq(3, Vec(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) mq[i][j] = m[i][j] = d(rng);
    SmithForm s = smith_normal_form(m);
    Integer prod = 1;
    for (int i = 0; i < 3; ++i) {
      prod *= s.d[i][i];
      if (i + 1 < 3 && s.d[i][i] != 0) EXPECT_EQ(s.d[i + 1][i + 1] % s.d[i][i], 0);
    }
    EXPECT_EQ(Rational(abs(prod)), abs(determinant(mq)));
  }
}

TEST(Lp, StrictFeasibility) {
  auto w = lp_strict_feasible(1, {}, {}, {{{q(1)}, q(0), q(1)}});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->x[0], q(1, 2));
  EXPECT_FALSE(lp_strict_feasible(1, {}, {}, {{{q(1)}, std::nullopt, q(0)}, {{q(1)}, q(1), std::nullopt}}));
  auto s = lp_strict_feasible(2, {{q(1), q(1)}}, {q(1)}, {{{q(1), q(0)}, q(0), q(1)}, {{q(0), q(1)}, q(0), q(1)}});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->x, (Vec{q(1, 2), q(1, 2)}));
  // closed but not open: 0 < x < 1 and x = 1
  EXPECT_FALSE(lp_strict_feasible(1, {{q(1)}}, {q(1)}, {{{q(1)}, q(0), q(1)}}));
}

TEST(Lp, WitnessSatisfiesConstraintsExactly) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<StrictConstraint> cs;
    for (int k = 0; k < 4; ++k) {
      Vec c{q(d(rng)), q(d(rng)), q(d(rng))};
      cs.push_back({c, q(d(rng) - 8), q(d(rng) + 8)});
    }
    Mat eq{{q(1), q(d(rng)), q(1)}};
    Vec rhs{q(d(rng))};
    auto w = lp_strict_feasible(3, eq, rhs, cs);
    if (!w) continue;
    EXPECT_EQ(dot(eq[0], w->x), rhs[0]);
    for (const auto& c : cs) {
      Rational v = dot(c.coeffs, w->x);
      EXPECT_LT(*c.lower, v);
      EXPECT_LT(v, *c.upper);
    }
  }
}
