#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "resloc/arrangement.hpp"
#include "resloc/error.hpp"

using namespace resloc;

namespace {

Rational q(long a, long b = 1) { return Rational(a) / Rational(b); }
Vec v2(long a, long b) { return Vec{q(a), q(b)}; }
AffineForm form(long a, long b, long c = 0) { return AffineForm(v2(a, b), q(c)); }

// Independent broken-circuit oracle: all circuits by subset enumeration.
bool dependent(const Mat& d, const Tuple& t) { return !is_independent(d, t); }

std::vector<Tuple> broken_circuits(const Mat& d, const Tuple& support) {
  std::vector<Tuple> out;
  size_t n = d.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Tuple c;
    for (size_t i = 0; i < n; ++i)
      if (mask >> i & 1) c.push_back(i);
    if (!dependent(d, c)) continue;
    bool minimal = true;
    for (size_t j = 0; j < c.size() && minimal; ++j) {
      Tuple r = c;
      r.erase(r.begin() + j);
      if (dependent(d, r)) minimal = false;
    }
    if (!minimal) continue;
    Tuple bc(c.begin() + 1, c.end());
    if (std::all_of(bc.begin(), bc.end(), [&](size_t i) { return std::count(support.begin(), support.end(), i); }))
      out.push_back(bc);
  }
  return out;
}

}  // namespace

TEST(Arrangement, Independence) {
  EXPECT_TRUE(is_independent(Mat{v2(1, 0), v2(0, 1)}, {0, 1}));
  EXPECT_FALSE(is_independent(Mat{v2(1, 0), v2(0, 1), v2(1, 1)}, {0, 1, 2}));
  EXPECT_TRUE(is_independent(Mat{v2(1, 1), v2(1, -1)}, {0, 1}));
}

TEST(Arrangement, NbcExamples) {
  EXPECT_EQ(nbc_bases(Mat{v2(1, 0), v2(0, 1), v2(1, 1)}), (std::vector<Tuple>{{0, 1}, {0, 2}}));
  EXPECT_EQ(nbc_bases(Mat{v2(1, 0), v2(0, 1), v2(1, 1), v2(1, -1)}), (std::vector<Tuple>{{0, 1}, {0, 2}, {0, 3}}));
  Mat five{v2(1, 0), v2(0, 1), v2(1, 1), v2(1, 2), v2(3, -1)};
  EXPECT_EQ(nbc_bases(five), (std::vector<Tuple>{{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
}

TEST(Arrangement, NbcCountOrderIndependent) {
  Mat d{{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1)}, {q(1), q(1), q(0)},
        {q(0), q(1), q(1)}, {q(1), q(1), q(1)}};
  size_t count = nbc_bases(d).size();
  std::vector<size_t> perm(d.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  int checked = 0;
  do {
    Mat p;
    for (auto i : perm) p.push_back(d[i]);
    auto b = nbc_bases(p);
    EXPECT_EQ(b.size(), count);
    EXPECT_TRUE(is_orthogonal_basis(p, b));
  } while (std::next_permutation(perm.begin(), perm.end()) && ++checked < 60);
}

TEST(Arrangement, OrthogonalBases) {
  Mat d{v2(1, 0), v2(0, 1), v2(1, 1)};
  EXPECT_TRUE(is_orthogonal_basis(d, nbc_bases(d)));
  EXPECT_FALSE(is_orthogonal_basis(d, {{0, 1}, {1, 0}}));
  EXPECT_TRUE(is_orthogonal_basis(d, {{1, 0}, {1, 2}}));
}

TEST(Arrangement, GreatestBrokenCircuit) {
  Mat d{v2(1, 0), v2(0, 1), v2(1, 1)};
  EXPECT_EQ(greatest_broken_circuit(d, {1, 2}), (Tuple{1, 2}));
  EXPECT_FALSE(greatest_broken_circuit(d, {0, 1}).has_value());
  Mat b2{v2(1, 0), v2(0, 1), v2(1, 1), v2(1, -1)};
  auto all = broken_circuits(b2, {1, 2, 3});
  ASSERT_FALSE(all.empty());
  Tuple best = all[0];
  for (const auto& c : all)
    if (circuit_precedes(best, c)) best = c;
  EXPECT_EQ(greatest_broken_circuit(b2, {1, 2, 3}), best);
  // The two-clause order ranks (x+y, x-y) above (y, x+y) and (y, x-y).
  EXPECT_EQ(best, (Tuple{2, 3}));
}

TEST(Arrangement, CircuitOrder) {
  EXPECT_TRUE(circuit_precedes({1, 2}, {1, 3}));
  EXPECT_TRUE(circuit_precedes({1, 3}, {2, 3}));
  EXPECT_FALSE(circuit_precedes({2, 3}, {1, 2}));
}

TEST(Arrangement, AffineVertices) {
  Arrangement a{{form(1, 0), form(0, 1), form(2, 1, -1)}, false};
  auto v = affine_vertices(a);
  std::set<Vec> pts;
  for (const auto& x : v) {
    pts.insert(x.point);
    EXPECT_EQ(x.forms.size(), 2u);
    for (const auto& lf : x.forms) EXPECT_EQ(lf.local(x.point), 0);
  }
  EXPECT_EQ(pts, (std::set<Vec>{v2(0, 0), Vec{q(1, 2), q(0)}, v2(0, 1)}));
  EXPECT_EQ(affine_vertices(Arrangement{{form(1, 0), form(0, 1)}, false}).size(), 1u);
  Arrangement line{{AffineForm(Vec{q(1)}), AffineForm(Vec{q(1)}, q(-1))}, false};
  EXPECT_EQ(affine_vertices(line).size(), 2u);
  EXPECT_THROW(affine_vertices(Arrangement{{form(1, 0), form(1, 0, -1)}, false}), Error);
}

TEST(Arrangement, ToricVerticesB2) {
  Arrangement a{{form(1, 0), form(0, 1), form(1, 1), form(1, -1)}, true};
  auto v = toric_vertices(a, Lattice::standard(2));
  std::set<Vec> pts;
  for (const auto& x : v) pts.insert(x.point);
  EXPECT_EQ(pts, (std::set<Vec>{v2(0, 0), Vec{q(1, 2), q(1, 2)}}));
  for (const auto& x : v)
    if (x.point == Vec{q(1, 2), q(1, 2)}) EXPECT_EQ(x.forms.size(), 2u);
  // Stable under integer translation of constants.
  Arrangement b{{form(1, 0, 3), form(0, 1, -2), form(1, 1, 1), form(1, -1, 5)}, false};
  std::set<Vec> pts2;
  for (const auto& x : toric_vertices(b, Lattice::standard(2))) pts2.insert(x.point);
  EXPECT_EQ(pts, pts2);
}

TEST(Arrangement, ToricVerticesRankOne) {
  Arrangement a{{AffineForm(Vec{q(1)})}, true};
  auto v = toric_vertices(a, Lattice::standard(1));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].point, Vec{q(0)});
  Arrangement b{{AffineForm(Vec{q(3)})}, true};
  EXPECT_EQ(toric_vertices(b, Lattice::standard(1)).size(), 3u);
}
