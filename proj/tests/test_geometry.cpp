#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mw/construct.hpp"
#include "properties.hpp"

using namespace mw;

namespace {

// Independent membership test: squared distances to the two centers,
// computed from the lens definition without going through region_depth.
bool lens_open(Point p, Point q, double beta, Point w) {
  double h = beta / 2;
  Point c1{(1 - h) * p.x + h * q.x, (1 - h) * p.y + h * q.y};
  Point c2{h * p.x + (1 - h) * q.x, h * p.y + (1 - h) * q.y};
  double r2 = beta * beta * ((p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y)) / 4;
  auto d2 = [](Point a, Point b) { return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y); };
  return d2(w, c1) < r2 && d2(w, c2) < r2;
}

Point rnd(std::mt19937_64& g, double s = 10) {
  std::uniform_real_distribution<double> U(-s, s);
  return {U(g), U(g)};
}

}  // namespace

TEST(BetaDisks, UnitBetaCollapsesCenters) {
  BetaDisks k = beta_disks({0, 0}, {2, 0}, 1);
  EXPECT_EQ(k.c1, (Point{1, 0}));
  EXPECT_EQ(k.c2, (Point{1, 0}));
  EXPECT_DOUBLE_EQ(k.radius, 1);
}

TEST(BetaDisks, BetaTwoCentersAtEndpoints) {
  BetaDisks k = beta_disks({0, 0}, {2, 0}, 2);
  EXPECT_EQ(k.c1, (Point{2, 0}));
  EXPECT_EQ(k.c2, (Point{0, 0}));
  EXPECT_DOUBLE_EQ(k.radius, 2);
}

TEST(BetaDisks, OneAndAHalf) {
  BetaDisks k = beta_disks({0, 0}, {4, 0}, 1.5);
  // (1 - 0.75)*0 + 0.75*4 = 3, and the mirror 1
  EXPECT_DOUBLE_EQ(k.c1.x, 3);
  EXPECT_DOUBLE_EQ(k.c2.x, 1);
  EXPECT_DOUBLE_EQ(k.radius, 3);
}

TEST(BetaDisks, Rejects) {
  EXPECT_THROW(beta_disks({1, 1}, {1, 1}, 1), Error);
  EXPECT_THROW(beta_disks({0, 0}, {1, 1}, 0.5), Error);
}

TEST(RegionContains, GabrielBoundary) {
  BetaRegion r{{0, 0}, {2, 0}, Beta(1.0), true};
  EXPECT_TRUE(region_contains(r, {1, 1}));
  r.closed = false;
  EXPECT_FALSE(region_contains(r, {1, 1}));
}

TEST(RegionContains, Strip) {
  BetaRegion r{{0, 0}, {2, 0}, Beta::inf(), false};
  EXPECT_TRUE(region_contains(r, {1, 100}));
  EXPECT_FALSE(region_contains(r, {-0.1, 0}));
}

TEST(RegionContains, Lune) {
  BetaRegion r{{0, 0}, {2, 0}, Beta(2.0), false};
  EXPECT_TRUE(region_contains(r, {1, 1}));
}

TEST(RegionContains, AgreesWithLensOracle) {
  std::mt19937_64 g(11);
  std::uniform_real_distribution<double> B(1, 12);
  int checked = 0;
  for (int it = 0; it < 20000; ++it) {
    Point p = rnd(g), q = rnd(g), w = rnd(g);
    double beta = it % 4 == 0 ? 1.0 : B(g);
    double rel = region_depth_rel(p, q, Beta(beta), w);
    if (std::abs(rel) < 1e-9) continue;
    ++checked;
    ASSERT_EQ(rel > 0, lens_open(p, q, beta, w)) << it;
  }
  EXPECT_GT(checked, 19000);
}

TEST(RegionContains, StripAgreesWithProjection) {
  std::mt19937_64 g(12);
  for (int it = 0; it < 20000; ++it) {
    Point p = rnd(g), q = rnd(g), w = rnd(g);
    double t = ((w.x - p.x) * (q.x - p.x) + (w.y - p.y) * (q.y - p.y)) /
               ((q.x - p.x) * (q.x - p.x) + (q.y - p.y) * (q.y - p.y));
    double rel = region_depth_rel(p, q, Beta::inf(), w);
    if (std::abs(rel) < 1e-9) continue;
    ASSERT_EQ(rel > 0, t > 0 && t < 1);
  }
}

TEST(RegionProperties, SymmetryNestingMonotonicity) {
  std::mt19937_64 g(13);
  std::uniform_real_distribution<double> B(1, 20);
  for (int it = 0; it < 20000; ++it) {
    Point p = rnd(g), q = rnd(g), w = rnd(g);
    double b1 = B(g), b2 = B(g);
    if (b1 > b2) std::swap(b1, b2);
    for (bool closed : {false, true}) {
      BetaRegion r{p, q, Beta(b1), closed}, rs{q, p, Beta(b1), closed};
      ASSERT_EQ(region_contains(r, w), region_contains(rs, w));
    }
    BetaRegion open{p, q, Beta(b1), false}, closed{p, q, Beta(b1), true};
    if (region_contains(open, w)) ASSERT_TRUE(region_contains(closed, w));
    BetaRegion wide{p, q, Beta(b2), false}, inf{p, q, Beta::inf(), false};
    if (region_contains(open, w)) {
      ASSERT_TRUE(region_contains(wide, w));
      ASSERT_TRUE(region_contains(inf, w));
    }
  }
}

TEST(RegionProperties, GabrielIsSingleDisk) {
  std::mt19937_64 g(14);
  for (int it = 0; it < 20000; ++it) {
    Point p = rnd(g), q = rnd(g), w = rnd(g);
    Point m = 0.5 * (p + q);
    double slack = dist(p, q) / 2 - dist(w, m);
    if (std::abs(slack) < 1e-8) continue;
    ASSERT_EQ(region_contains({p, q, Beta(1.0), false}, w), slack > 0);
  }
}

TEST(RegionProperties, DenseGridMonotonicity) {
  Point p{-1, 0}, q{1, 0};
  std::vector<double> betas{1, 1.2, 1.5, 2, 3, 7, 50};
  for (int ix = -60; ix <= 60; ++ix)
    for (int iy = -60; iy <= 60; ++iy) {
      Point w{ix / 30.0, iy / 30.0};
      bool prev = false;
      for (double b : betas) {
        bool in = region_contains({p, q, Beta(b), false}, w);
        ASSERT_TRUE(!prev || in) << w.x << "," << w.y << " beta " << b;
        prev = in;
      }
      if (prev) {
        ASSERT_TRUE(region_contains({p, q, Beta::inf(), false}, w));
      }
    }
}

TEST(AngleAt, Basics) {
  EXPECT_NEAR(angle_at({1, 0}, {0, 0}, {0, 1}), std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(angle_at({1, 0}, {0, 0}, {-1, 0}), std::numbers::pi, 1e-15);
  EXPECT_NEAR(angle_at({1, 0}, {0, 0}, {1, 1}), std::numbers::pi / 4, 1e-15);
  EXPECT_THROW(angle_at({0, 0}, {0, 0}, {1, 1}), Error);
}

TEST(Wedge, OpenQuadrant) {
  Wedge w{{0, 0}, {1, 0}, {0, 1}, true};
  EXPECT_TRUE(wedge_contains(w, {1, 1}));
  EXPECT_FALSE(wedge_contains(w, {1, 0}));
  EXPECT_FALSE(wedge_contains(w, {-1, -1}));
}

TEST(WingedParallelogram, BaseStar) {
  WingedParallelogram wp = build_winged_parallelogram({0, 5}, {0, 3}, {2, 0}, {2, 2}, {1.1, 3}, {0.9, 2});
  EXPECT_LT(wp.angle_at_a(0), std::numbers::pi / 4);
  EXPECT_LT(wp.angle_at_a(1), std::numbers::pi / 4);
  // port: ray from b1 = (2,2) perpendicular to a0 - b1 = (-2,3) meets y = 5
  // at (2 + 3*1.5, 5)
  EXPECT_NEAR(wp.p0.x, 6.5, 1e-12);
  EXPECT_NEAR(wp.p0.y, 5, 1e-12);
  EXPECT_NEAR(wp.p1.x, -4.5, 1e-12);
  EXPECT_NEAR(wp.p1.y, 0, 1e-12);
  EXPECT_NEAR(dot(wp.a0 - wp.b1, wp.p0 - wp.b1), 0, 1e-12);
  for (Point c : {wp.a0, wp.b0, wp.a1}) EXPECT_FALSE(wedge_contains(wp.w0, c));
}

TEST(WingedParallelogram, RejectsBadAnchors) {
  EXPECT_THROW(build_winged_parallelogram({0, 5}, {0, 3}, {2, 0}, {2, 2}, {0.9, 3}, {1.1, 2}), Error);
}

TEST(WingedParallelogram, StarThreePortHeight) {
  WPDrawing w = draw_star_pair(3);
  EXPECT_DOUBLE_EQ(w.wp.p0.y, 18.5);
  EXPECT_DOUBLE_EQ(w.wp.a0.y, 18.5);
}

TEST(Rotate, Basics) {
  Point r = rotate_about(Point{1, 0}, Point{0, 0}, std::numbers::pi / 2);
  EXPECT_NEAR(r.x, 0, 1e-15);
  EXPECT_NEAR(r.y, 1, 1e-15);
  EXPECT_EQ(rotate_about(Point{3, -2}, Point{1, 1}, 0.0), (Point{3, -2}));
}

TEST(Rotate, PreservesDistances) {
  std::vector<Point> pts{{0, 5}, {0, 3}, {2, 0}, {2, 2}, {1.1, 3}, {0.9, 2}};
  auto r = rotate_about(pts, {0.3, -1}, std::numbers::pi / 7);
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      EXPECT_NEAR(dist(r[i], r[j]), dist(pts[i], pts[j]), 1e-12 * dist(pts[i], pts[j]));
}

TEST(Rotate, KeepsClearVerdicts) {
  std::mt19937_64 g(15);
  std::uniform_real_distribution<double> A(0, 2 * std::numbers::pi);
  for (int it = 0; it < 5000; ++it) {
    Point p = rnd(g), q = rnd(g), w = rnd(g), c = rnd(g);
    double ang = A(g);
    for (Beta b : {Beta(1.0), Beta(2.5), Beta::inf()}) {
      double m = region_depth_rel(p, q, b, w);
      if (std::abs(m) < 10 * kTau) continue;
      double m2 = region_depth_rel(rotate_about(p, c, ang), rotate_about(q, c, ang), b, rotate_about(w, c, ang));
      ASSERT_EQ(m > 0, m2 > 0);
    }
  }
}

TEST(Separable, Basics) {
  auto l = linearly_separable({{0, 1}}, {{0, -1}});
  ASSERT_TRUE(l.has_value());
  EXPECT_GT(l->side({0, 1}), 0);
  EXPECT_LT(l->side({0, -1}), 0);
  EXPECT_NEAR(l->dir.y, 0, 1e-15);
  EXPECT_FALSE(linearly_separable({{0, 0}}, {{0, 0}}).has_value());
}

TEST(Separable, InterleavedIsNot) {
  EXPECT_FALSE(linearly_separable({{0, 0}, {2, 2}}, {{2, 0}, {0, 2}}).has_value());
}

TEST(Separable, RandomHalfPlanesFound) {
  std::mt19937_64 g(16);
  for (int it = 0; it < 300; ++it) {
    std::vector<Point> a, b;
    for (int k = 0; k < 8; ++k) {
      Point p = rnd(g);
      (p.y > 0.2 ? a : b).push_back(p);
    }
    if (a.empty() || b.empty()) continue;
    auto l = linearly_separable(a, b);
    ASSERT_TRUE(l.has_value());
    EXPECT_GT(separation_margin(*l, a, b), 0);
  }
}

TEST(Property2, StarWingedParallelograms) {
  std::mt19937_64 g(17);
  for (int k = 2; k <= 6; ++k) {
    WPDrawing w = draw_star_pair(k);
    EXPECT_LE(w.wp.angle_at_a(0), std::numbers::pi / 4 + 1e-12);
    for (int it = 0; it < 100; ++it)
      for (int i = 0; i < 2; ++i) {
        auto s = mw::testing::sample_property2(w.wp, i, g);
        auto r = mw::testing::check_property2(w.wp, s);
        ASSERT_TRUE(r.p1) << "k=" << k << " side " << i;
        ASSERT_TRUE(r.p2) << "k=" << k << " side " << i;
        ASSERT_TRUE(r.p3) << "k=" << k << " side " << i;
      }
  }
}

TEST(Property2, OneLeafPairIsDegenerate) {
  // a0, the last leaf and b1 are collinear, so the safe wedge opens past the
  // port and b1 lands inside the Gabriel disk of a0 and z
  WPDrawing w = draw_star_pair(1);
  Point a = w.wp.a0, v = w.drawing.pts[0].back(), b = w.wp.b1;
  EXPECT_EQ(cross(v - a, b - a), 0);
  EXPECT_DOUBLE_EQ(w.wp.angle_at_a(0), std::numbers::pi / 4);
  std::mt19937_64 g(18);
  int p1_fail = 0;
  for (int it = 0; it < 200; ++it) {
    auto s = mw::testing::sample_property2(w.wp, 0, g);
    EXPECT_GT(s.z.x, w.wp.p0.x);
    if (region_depth_rel(w.wp.a0, s.z, Beta(1.0), w.wp.b1) >= -kTau) ++p1_fail;
  }
  EXPECT_EQ(p1_fail, 200);
}
