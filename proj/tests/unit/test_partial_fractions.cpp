#include <gtest/gtest.h>

#include <random>

#include "resloc/error.hpp"
#include "resloc/partial_fractions.hpp"
#include "unit/printers.hpp"

using namespace resloc;

namespace {

Rational q(long a, long b = 1) { return Rational(a) / Rational(b); }
AffineForm form(long a, long b, long c = 0) { return AffineForm(Vec{q(a), q(b)}, q(c)); }

std::vector<Vec> random_points(size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Vec> pts;
  while (pts.size() < count) {
    Vec v{q(long(rng() % 200) - 100, 37 + rng() % 50), q(long(rng() % 200) - 100, 41 + rng() % 50)};
    pts.push_back(v);
  }
  return pts;
}

bool nbc_free(const Arrangement& a, const std::vector<DenFactor>& den) {
  Mat dirs = a.directions();
  Tuple support;
  for (const auto& d : den)
    for (size_t i = 0; i < dirs.size(); ++i)
      if (proportional(dirs[i], d.form.linear)) {
        if (std::find(support.begin(), support.end(), i) == support.end()) support.push_back(i);
        break;
      }
  std::sort(support.begin(), support.end());
  return !greatest_broken_circuit(dirs, support).has_value();
}

// Small denominators keep the cyclotomic fields of the exact evaluation small.
std::vector<Vec> torus_points(size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  const long dens[] = {5, 7, 8, 9};
  std::vector<Vec> pts;
  while (pts.size() < count) pts.push_back(Vec{q(1 + rng() % 30, dens[rng() % 4]), q(1 + rng() % 30, dens[rng() % 4])});
  return pts;
}

// Compares at the first `need` points where neither side has a pole.
void expect_equal_off_poles(const std::vector<TrigRationalFunction>& parts, const TrigRationalFunction& f,
                            unsigned seed, size_t need = 5) {
  size_t checked = 0;
  for (const auto& v : torus_points(200, seed)) {
    Scalar lhs, rhs;
    try {
      rhs = f.evaluate(v);
      for (const auto& p : parts) lhs += p.evaluate(v);
    } catch (const Error&) {
      continue;
    }
    EXPECT_EQ(lhs, rhs) << vec_to_string(v);
    if (++checked == need) return;
  }
  ADD_FAILURE() << "too few nonpolar points";
}

Scalar sum_at(const std::vector<RationalSummand>& parts, const Vec& v) {
  Scalar s;
  for (const auto& p : parts) s += p.evaluate(v);
  return s;
}

Scalar sum_at(const std::vector<TrigRationalFunction>& parts, const Vec& v) {
  Scalar s;
  for (const auto& p : parts) s += p.evaluate(v);
  return s;
}

}  // namespace

TEST(RationalPartialFractions, ThreeLines) {
  Arrangement a{{form(1, 0), form(0, 1), form(1, 1)}, true};
  RationalSummand f;
  f.numerator = Polynomial::constant(2, Scalar(1));
  f.denominator = {{form(1, 0), 1}, {form(0, 1), 1}, {form(1, 1), 1}};
  auto parts = rational_partial_fractions(a, f);
  for (const auto& p : parts) EXPECT_TRUE(nbc_free(a, p.denominator));
  for (const auto& v : random_points(5, 1)) EXPECT_EQ(sum_at(parts, v), f.evaluate(v));
}

TEST(RationalPartialFractions, AlreadyNbcIsUnchanged) {
  Arrangement a{{form(1, 0), form(0, 1), form(1, 1)}, true};
  RationalSummand f;
  f.numerator = Polynomial::constant(2, Scalar(3));
  f.denominator = {{form(1, 0), 2}, {form(1, 1), 1}};
  auto parts = rational_partial_fractions(a, f);
  ASSERT_EQ(parts.size(), 1u);
  for (const auto& v : random_points(3, 2)) EXPECT_EQ(parts[0].evaluate(v), f.evaluate(v));
}

TEST(RationalPartialFractions, BrokenCircuitRewrite) {
  // 1/(y(x+y)) = 1/(x y) - 1/(x (x+y)), from x - (x+y) + y = 0.
  Arrangement a{{form(1, 0), form(0, 1), form(1, 1)}, true};
  RationalSummand f;
  f.numerator = Polynomial::constant(2, Scalar(1));
  f.denominator = {{form(0, 1), 1}, {form(1, 1), 1}};
  auto parts = rational_partial_fractions(a, f);
  ASSERT_EQ(parts.size(), 2u);
  for (const auto& v : random_points(5, 3)) {
    Scalar hand = Scalar(Rational(1) / (v[0] * v[1])) - Scalar(Rational(1) / (v[0] * (v[0] + v[1])));
    EXPECT_EQ(sum_at(parts, v), hand);
    EXPECT_EQ(sum_at(parts, v), f.evaluate(v));
  }
}

TEST(RationalPartialFractions, RandomB2WithPowers) {
  Arrangement a{{form(1, 0), form(0, 1), form(1, 1), form(1, -1)}, true};
  std::mt19937 rng(4);
  for (int it = 0; it < 6; ++it) {
    RationalSummand f;
    f.numerator = Polynomial::of_form(form(1, long(rng() % 3))) * Polynomial::constant(2, Scalar(long(1 + rng() % 3)));
    for (const auto& y : {form(1, 0), form(0, 1), form(2, 2), form(-1, 1)})
      if (rng() % 4) f.denominator.push_back({y, int(1 + rng() % 3)});
    auto parts = rational_partial_fractions(a, f);
    for (const auto& p : parts) EXPECT_TRUE(nbc_free(a, p.denominator));
    for (const auto& v : random_points(5, 10 + it)) EXPECT_EQ(sum_at(parts, v), f.evaluate(v));
  }
}

TEST(TrigPartialFractions, ObviousIdentity) {
  // y0 + y1 = 0: 1/((1-e_{y0})(1-e_{y1})) with y1 = -y0 equals -e_{y0}/(1-e_{y0})^2 ... checked pointwise.
  Arrangement a{{AffineForm(Vec{q(1)})}, true};
  TrigRationalFunction f;
  f.numerator = {{Vec{q(0)}, Scalar(1)}};
  f.denominator = {{AffineForm(Vec{q(1)}), 1}, {AffineForm(Vec{q(-1)}), 1}};
  auto r = trig_partial_fractions(a, Lattice::standard(1), f, Vec{q(1, 7)});
  for (auto x : {q(1, 5), q(2, 7), q(-3, 11)}) EXPECT_EQ(sum_at(r.terms, Vec{x}), f.evaluate(Vec{x}));
}

TEST(TrigPartialFractions, EliminatesBrokenCircuit) {
  Arrangement a{{form(1, 0), form(0, 1), form(1, 1)}, true};
  TrigRationalFunction f;
  f.numerator = {{Vec{q(0), q(0)}, Scalar(1)}};
  f.denominator = {{form(0, 1), 1}, {form(1, 1), 1}};
  // Delta needs spanning directions: add x as well so that mu can be chosen.
  f.denominator.push_back({form(1, 0), 1});
  Vec mu = choose_shift(f, Lattice::standard(2));
  auto r = trig_partial_fractions(a, Lattice::standard(2), f, mu);
  for (const auto& g : r.terms) {
    EXPECT_TRUE(nbc_free(a, g.denominator));
    EXPECT_TRUE(delta0_contains(g, mu));
  }
  expect_equal_off_poles(r.terms, f, 5);
}

TEST(TrigPartialFractions, B2Function) {
  Arrangement a{{form(1, 0), form(0, 1), form(1, 1), form(1, -1)}, true};
  TrigRationalFunction f;
  f.numerator = {{Vec{q(0), q(0)}, Scalar(1)}};
  for (const auto& y : a.forms) {
    f.denominator.push_back({y, 1});
    f.denominator.push_back({y.scaled(-1), 1});
  }
  Rational e = q(1, 100);
  Vec mu{-e, -e * e};
  auto r = trig_partial_fractions(a, Lattice::standard(2), f, mu);
  EXPECT_FALSE(r.terms.empty());
  for (const auto& g : r.terms) {
    EXPECT_TRUE(nbc_free(a, g.denominator));
    EXPECT_TRUE(delta0_contains(g, mu));
  }
  for (const auto& y : r.arrangement.forms) {
    bool parallel = false;
    for (const auto& x : a.forms) parallel = parallel || proportional(x.linear, y.linear);
    EXPECT_TRUE(parallel);
  }
  expect_equal_off_poles(r.terms, f, 6);
}

TEST(TrigPartialFractions, RejectsBadShift) {
  Arrangement a{{form(1, 0), form(0, 1)}, true};
  TrigRationalFunction f;
  f.numerator = {{Vec{q(0), q(0)}, Scalar(1)}};
  f.denominator = {{form(1, 0), 1}, {form(0, 1), 1}};
  EXPECT_THROW(trig_partial_fractions(a, Lattice::standard(2), f, Vec{q(3), q(1, 3)}), Error);
}
