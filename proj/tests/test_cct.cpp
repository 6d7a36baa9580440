#include <gtest/gtest.h>

#include <set>
#include <tuple>

#include "cct/abstract.hpp"
#include "cct/extend.hpp"
#include "cct/families.hpp"
#include "cct/group.hpp"
#include "cct/ideal.hpp"
#include "cct/variants.hpp"

using namespace cct;

namespace {

// Reduction of a point of Z^3 modulo the lattice spanned by (3,-3,0) and
// (-2,-2,4): first bring z into [0,4) with the second generator, then x-y
// into [0,6) with the first.
std::tuple<long, long, long> reduce(long x, long y, long z) {
  auto fdiv = [](long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
  long k = fdiv(z, 4);
  x += 2 * k;
  y += 2 * k;
  z -= 4 * k;
  long m = fdiv(x - y, 6);
  x -= 3 * m;
  y += 3 * m;
  return {x, y, z};
}

// Counts cells of the quotient of the slab 0 <= x+y+z <= k by enumerating
// (reduced base point, direction set) pairs.
std::array<long, 4> enumerate_faces(int k) {
  std::set<std::tuple<long, long, long, int>> cells;
  const int R = 12;
  for (long x = -R; x <= R; ++x)
    for (long y = -R; y <= R; ++y)
      for (long z = -R; z <= R; ++z) {
        long l = x + y + z;
        if (l < 0 || l > k) continue;
        auto [a, b, c] = reduce(x, y, z);
        for (int dirs = 0; dirs < 8; ++dirs) {
          if (l + __builtin_popcount(dirs) > k) continue;
          cells.insert({a, b, c, dirs});
        }
      }
  std::array<long, 4> f{};
  for (const auto& cell : cells) ++f[__builtin_popcount(std::get<3>(cell))];
  return f;
}

Point seed_off_mirror() { return {1, 0, 1, Rational(1, 5), 1}; }

}  // namespace

TEST(Abstract, ZeroWidth) {
  AbstractCCT t = build_abstract(0);
  EXPECT_EQ(f_vector(t), (std::array<long, 4>{12, 0, 0, 0}));
}

TEST(Abstract, WidthOneIsBipartiteCubic) {
  AbstractCCT t = build_abstract(1);
  ASSERT_EQ(f_vector(t), (std::array<long, 4>{24, 36, 0, 0}));
  std::vector<int> deg(24, 0);
  for (const auto& e : t.edges) {
    EXPECT_NE(t.layer[e[0]], t.layer[e[1]]);
    ++deg[e[0]];
    ++deg[e[1]];
  }
  for (int d : deg) EXPECT_EQ(d, 3);
}

TEST(Abstract, FVectorExamples) {
  EXPECT_EQ(f_vector(build_abstract(2)), (std::array<long, 4>{36, 72, 36, 0}));
  EXPECT_EQ(f_vector(build_abstract(3)), (std::array<long, 4>{48, 108, 72, 12}));
  EXPECT_EQ(f_vector(build_abstract(5)), (std::array<long, 4>{72, 180, 144, 36}));
}

TEST(Abstract, FVectorMatchesFaceEnumeration) {
  for (int k = 0; k <= 8; ++k) {
    EXPECT_EQ(f_vector(build_abstract(k)), enumerate_faces(k)) << "k=" << k;
    EXPECT_EQ(f_vector(build_abstract(k)), f_vector_formula(k)) << "k=" << k;
  }
}

TEST(Abstract, CubesSpanFourLayers) {
  AbstractCCT t = build_abstract(6);
  for (const auto& c : t.cubes) {
    std::array<int, 4> mult{};
    long base = t.layer[c[0]];
    for (auto v : c) ++mult[t.layer[v] - base];
    EXPECT_EQ(mult, (std::array<int, 4>{1, 3, 3, 1}));
  }
}

TEST(Abstract, VertexIndexIsLatticeInvariant) {
  for (long x = -5; x <= 5; ++x)
    for (long y = -5; y <= 5; ++y)
      for (long z = 0; z <= 4; ++z) {
        LatticePoint p{x, y, z};
        if (p.layer() < 0) continue;
        std::size_t v = vertex_index(p);
        EXPECT_EQ(vertex_index(p + LatticePoint{3, -3, 0}), v);
        EXPECT_EQ(vertex_index(p + LatticePoint{-2, -2, 4}), v);
        EXPECT_EQ(vertex_index(representative(v)), v);
      }
}

TEST(Group, Orders) {
  auto rot = rotation_group();
  auto sym = symmetry_group();
  EXPECT_EQ(rot.size(), 12u);
  EXPECT_EQ(sym.size(), 24u);
  for (const auto& g : sym) EXPECT_TRUE(g.is_orthogonal());
}

TEST(Group, RotationsActSimplyTransitivelyOnLayers) {
  auto t = cts(2);
  for (int l = 0; l <= 2; ++l) {
    auto layer = t.layer(l);
    std::set<std::size_t> hit;
    for (const auto& g : rotation_group()) {
      Point y = g * t.seeds[l];
      std::size_t found = layer.size();
      for (std::size_t i = 0; i < layer.size(); ++i)
        if (layer[i] == y) found = i;
      ASSERT_LT(found, layer.size());
      hit.insert(found);
    }
    EXPECT_EQ(hit.size(), 12u);
  }
}

TEST(Symmetric, WidthOne) {
  auto t = cts1();
  EXPECT_EQ(t.num_vertices(), 24u);
  EXPECT_EQ(f_vector(t), (std::array<long, 4>{24, 36, 0, 0}));
}

TEST(Symmetric, TwelveDistinctPointsPerLayer) {
  auto t = build_symmetric<FieldElement>({theta0(), theta1(), theta2(), theta3()}, Ambient::S4);
  for (int l = 0; l <= 3; ++l) {
    std::set<std::string> keys;
    for (const auto& x : t.layer(l)) keys.insert(detail::ray_key(x));
    EXPECT_EQ(keys.size(), 12u);
  }
}

TEST(Symmetric, FixedPointViolation) {
  try {
    build_symmetric<FieldElement>({Point{1, 1, 0, 0, 1}, theta1()}, Ambient::S4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FixedPointViolation);
  }
  EXPECT_THROW(build_symmetric<FieldElement>({Point{0, 0, 1, 2, 1}}, Ambient::S4), Error);
}

TEST(Symmetric, ControlComplexDropsLastCoordinate) {
  auto c = control_cct(cts1());
  EXPECT_EQ(c.ambient, Ambient::S3eq);
  EXPECT_EQ(c.seeds[0], project_equator(theta0()));
  EXPECT_EQ(c.seeds[1], project_equator(theta1()));
  auto pole = build_symmetric<FieldElement>({theta0(), Point{1, 0, 1, 0, 1}}, Ambient::S4);
  pole.seeds[1] = {0, 0, 0, 0, 1};
  try {
    control_cct(pole);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PoleProjection);
  }
}

TEST(Symmetry, HoldsForExtendedComplex) {
  EXPECT_TRUE(check_symmetry(cts(4)));
  EXPECT_TRUE(check_symmetry(control_cct(cts(4))));
}

TEST(Symmetry, SeedOffTheMirrorBreaksReflection) {
  auto t = build_symmetric<FieldElement>({theta0(), seed_off_mirror(), theta2()}, Ambient::S4);
  std::vector<std::string> why;
  EXPECT_FALSE(check_symmetry(t, &why));
  ASSERT_FALSE(why.empty());
  EXPECT_NE(why.front().find("reflection"), std::string::npos);
}

TEST(Alignment, FirstWindowOfWidthTwo) {
  auto rep = check_alignment(control_cct(cts(2)), 0);
  EXPECT_TRUE(rep.a);
  EXPECT_TRUE(rep.b);
  EXPECT_TRUE(rep.c);
  EXPECT_TRUE(rep.d);
  EXPECT_TRUE(rep.e);
  EXPECT_TRUE(rep.f);
  EXPECT_TRUE(rep.g);
}

TEST(Alignment, EveryWindowOfLongerComplex) {
  auto c = control_cct(cts(7));
  for (int i = 0; i + 2 <= c.width; ++i) EXPECT_TRUE(check_alignment(c, i).all()) << "window " << i;
}

TEST(Alignment, MisplacedTopSeedFails) {
  // the top layer moved along its own Clifford fiber breaks the pi_2 identities
  auto t = cts(2);
  t.seeds[2] = rotate(0, 1, t.seeds[2]);
  EXPECT_FALSE(check_alignment(control_cct(t), 0).all());
}

TEST(Ideal, ThreeLayerComplexPasses) {
  auto cert = check_ideal(cts(3));
  EXPECT_TRUE(cert.applicable);
  EXPECT_TRUE(cert.symmetric);
  EXPECT_TRUE(cert.transversal);
  EXPECT_TRUE(cert.slope_obtuse);
  EXPECT_TRUE(cert.oriented);
  EXPECT_TRUE(cert.passed()) << (cert.failures.empty() ? "" : cert.failures.front());
}

TEST(Ideal, WidthOneOnlyChecksSymmetry) {
  auto cert = check_ideal(cts1());
  EXPECT_FALSE(cert.applicable);
  EXPECT_TRUE(cert.symmetric);
  EXPECT_TRUE(cert.passed());
}

TEST(Ideal, RationalFamilyAtWidthThree) {
  auto cert = check_ideal(extend_to(rational1(), 3));
  EXPECT_TRUE(cert.passed()) << (cert.failures.empty() ? "" : cert.failures.front());
}

TEST(Ideal, PublishedSeedsLieInTheLayerOrbits) {
  auto t = cts(3);
  auto in_layer = [&](const Point& x, int l) {
    for (const auto& y : t.layer(l))
      if (y == x) return true;
    return false;
  };
  EXPECT_TRUE(in_layer(theta0(), 0));
  EXPECT_TRUE(in_layer(theta1(), 1));
  EXPECT_TRUE(in_layer(theta2(), 2));
  EXPECT_TRUE(in_layer(theta3(), 3));
}

TEST(SlopeHarness, ObtuseForFiveSteps) {
  auto steps = slope_monotone_harness(cts(3), 5);
  ASSERT_EQ(steps.size(), 6u);
  for (const auto& s : steps) EXPECT_EQ(s.sign, -1) << "width " << s.width;
}

TEST(SlopeHarness, WidthTwoOneStep) {
  auto steps = slope_monotone_harness(cts(2), 1);
  ASSERT_EQ(steps.size(), 2u);
  EXPECT_EQ(steps[0].sign, -1);
  EXPECT_EQ(steps[1].sign, -1);
}

TEST(SlopeHarness, AnglesNondecreasing) {
  auto steps = slope_monotone_harness(cts(2), 10);
  const BigFloat tol(1e-12, 256);
  BigFloat half_pi = BigFloat::pi(256) / BigFloat(2L, 256);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    EXPECT_TRUE(steps[i].angle > half_pi);
    if (i > 0) {
      EXPECT_TRUE(steps[i].angle + tol >= steps[i - 1].angle) << "width " << steps[i].width;
    }
  }
}

TEST(SlopeHarness, RationalFamily) {
  auto steps = slope_monotone_harness(extend_to(rational1(), 2), 4);
  for (const auto& s : steps) EXPECT_EQ(s.sign, -1);
}

TEST(SlopeHarness, RejectsWidthOne) { EXPECT_THROW(slope_monotone_harness(cts1(), 1), Error); }
