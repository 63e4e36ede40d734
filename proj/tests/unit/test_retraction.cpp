#include <gtest/gtest.h>

#include <random>

#include "monovex/catalog.hpp"
#include "monovex/errors.hpp"
#include "monovex/retraction.hpp"

using namespace monovex;

namespace {

Dyadic d(const char* s) { return Dyadic::parse(s); }

SpanComplex interval01() { return SpanComplex(1, {BoxRegion::closed(Point{0}, Point{1})}); }

std::vector<Point> exterior_points(const SpanComplex& a, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> u(-64, 128);
  std::vector<Point> out;
  while (out.size() < count) {
    Point x{Dyadic(BigInt(u(rng)), 6), Dyadic(BigInt(u(rng)), 6)};
    if (!contains(a, x)) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST(NearestPointMap, IntervalEndpoint) {
  SpanComplex f = nearest_point_map(interval01(), Point{2});
  ASSERT_EQ(f.boxes().size(), 1u);
  EXPECT_EQ(f.boxes()[0], BoxRegion::point(Point{1}));
}

TEST(NearestPointMap, SquareEdge) {
  SpanComplex sq(2, {BoxRegion::closed(Point{0, 0}, Point{1, 1})});
  SpanComplex f = nearest_point_map(sq, Point{2, d("1/2")});
  ASSERT_EQ(f.boxes().size(), 1u);
  EXPECT_EQ(f.boxes()[0], BoxRegion({Interval::point(1), Interval::closed(0, 1)}));
}

TEST(NearestPointMap, ExampleOneIsMonovex) {
  SpanComplex f = nearest_point_map(example1(3), Point{1, 0});
  EXPECT_FALSE(f.empty());
  EXPECT_TRUE(is_monovex(f).is_monovex);
}

TEST(NearestPointMap, Preconditions) {
  EXPECT_THROW(nearest_point_map(interval01(), Point{d("1/2")}), PreconditionError);
  SpanComplex open(1, {BoxRegion({Interval::open(0, 1)})});
  EXPECT_THROW(nearest_point_map(open, Point{2}), PreconditionError);
}

TEST(Thicken, IntervalScales) {
  EXPECT_EQ(eta_for(Dyadic(1)), d("1/128"));
  EXPECT_EQ(eta_for(Dyadic(200)), Dyadic(1));
  ThickenedMap t = thicken(interval01(), Point{2});
  EXPECT_EQ(t.d, Dyadic(1));
  EXPECT_EQ(t.eta, d("1/128"));
  ASSERT_EQ(t.f1.boxes().size(), 1u);
  // full-dimensional eta-cells meeting F = {1}
  EXPECT_EQ(t.f1.boxes()[0], BoxRegion::closed(Point{d("127/128")}, Point{d("129/128")}));
}

TEST(Thicken, ExampleOneF1IsMonovex) {
  ThickenedMap t = thicken(example1(3), Point{2, 2});
  EXPECT_TRUE(is_subset(t.f, t.f1));
  EXPECT_TRUE(is_monovex(t.f1).is_monovex);
}

TEST(Thicken, ShareCell) {
  const Dyadic eta = d("1/4");
  EXPECT_TRUE(share_cell(Point{0, 0}, Point{d("1/4"), d("1/4")}, eta));
  EXPECT_FALSE(share_cell(Point{0, 0}, Point{d("1/2"), 0}, eta));
}

TEST(Repair, IdentityWhenEndpointsMatch) {
  SpanComplex a = example1(3);
  ThickenedMap t = thicken(a, Point{2, 2});
  Point y = t.f.boxes()[0].lower_corner(), z = t.f.boxes()[0].upper_corner();
  auto gamma = monotone_reachable(t.f, y, z);
  ASSERT_TRUE(gamma);
  MonotonePath p = repair_path(t.f1, t.eta, y, z, y, z, *gamma);
  EXPECT_EQ(p.front(), y);
  EXPECT_EQ(p.back(), z);
  EXPECT_TRUE(validate_monotone(p, t.f1));
  for (const auto& w : gamma->waypoints) {
    EXPECT_TRUE(validate_monotone(MonotonePath::through({p.front(), w, p.back()}), t.f1));
  }
}

TEST(Repair, OneDimensionalStraightSegment) {
  ThickenedMap t = thicken(interval01(), Point{2});
  Point y{d("127/128")}, z{1};
  MonotonePath g = MonotonePath::through({Point{1}});
  MonotonePath p = repair_path(t.f1, t.eta, y, z, Point{1}, Point{1}, g);
  EXPECT_EQ(p.front(), y);
  EXPECT_EQ(p.back(), z);
  EXPECT_TRUE(validate_monotone(p, t.f1));
}

TEST(Repair, ExampleOneInstance) {
  SpanComplex a = example1(3);
  ThickenedMap t = thicken(a, Point{d("3/2"), d("1/4")});
  ASSERT_FALSE(t.f.empty());
  std::vector<Point> fpts;
  for (const auto& b : t.f.boxes()) {
    fpts.push_back(b.lower_corner());
    fpts.push_back(b.upper_corner());
  }
  const Point& yp = fpts.front();
  const Point& zp = fpts.back();
  auto gamma = monotone_reachable(t.f, yp, zp);
  ASSERT_TRUE(gamma);
  Point y = yp, z = zp;
  y[0] -= t.eta.half();
  z[1] += t.eta.half();
  ASSERT_TRUE(share_cell(y, yp, t.eta) && share_cell(z, zp, t.eta));
  MonotonePath p = repair_path(t.f1, t.eta, y, z, yp, zp, *gamma);
  EXPECT_TRUE(validate_monotone(p, t.f1));
}

TEST(Repair, UnsharedCellIsAnError) {
  ThickenedMap t = thicken(interval01(), Point{2});
  EXPECT_THROW(repair_path(t.f1, t.eta, Point{0}, Point{1}, Point{1}, Point{1}, MonotonePath::through({Point{1}})),
               PreconditionError);
}

TEST(LocalRadius, IntervalIsVerified) {
  LocalRadius r = local_radius(interval01(), Point{2}, 50);
  EXPECT_TRUE(r.verified);
  EXPECT_NE(compare(r.delta, Rational(1, 100)), std::strong_ordering::greater);
  EXPECT_GT(r.probes_checked, 0u);
}

TEST(LocalRadius, FarPointTakesFirstCandidate) {
  LocalRadius r = local_radius(interval01(), Point{1000}, 50);
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.delta, eta_for(Dyadic(999)).half());
}

TEST(LocalRadius, NoProbesFallsBack) {
  LocalRadius r = local_radius(interval01(), Point{2}, 0);
  EXPECT_FALSE(r.verified);
  EXPECT_EQ(r.delta, eta_for(Dyadic(1)).scaled(-8));
}

TEST(LocalRadius, ProbesStayInsideTheBall) {
  const Point x{d("1/2"), 3};
  const Dyadic radius = d("1/8");
  for (const auto& p : ball_probes(x, radius, 64)) EXPECT_LT(cheb(p, x), radius);
}

TEST(Neighborhood, SingletonSampleContainsF) {
  SpanComplex a = example1(3);
  Point x{2, 2};
  Neighborhood n = neighborhood_G(a, x, {x}, 50);
  ASSERT_EQ(n.members.size(), 1u);
  EXPECT_TRUE(is_subset(n.members[0].map.f, n.g));
}

TEST(Neighborhood, XMustBeSampled) {
  EXPECT_THROW(neighborhood_G(example1(3), Point{2, 2}, {Point{3, 3}}, 10), PreconditionError);
}

TEST(Neighborhood, BallBoundAndMonovexity) {
  SpanComplex a = example1(3);
  RetractionParams params;
  params.probes = 40;
  auto pts = exterior_points(a, 100, 11);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    StepAudit s = retraction_step(a, pts[i], params);
    EXPECT_TRUE(s.G_in_ball) << pts[i].str();
    if (i < 20) {
      Neighborhood n = neighborhood_G(pts[i], step_sample(a, pts[i], params));
      EXPECT_TRUE(is_monovex(n.g).is_monovex) << pts[i].str();
    }
  }
}

TEST(SelectG, SingleOpenBoxCenter) {
  SpanComplex g(2, {BoxRegion({Interval::open(0, 1), Interval::open(2, 3)})});
  EXPECT_EQ(select_g(g), (Point{d("1/2"), d("5/2")}));
}

TEST(SelectG, OpenLShape) {
  SpanComplex g(2, {BoxRegion({Interval::open(0, 2), Interval::open(0, 1)}),
                    BoxRegion({Interval::open(0, 1), Interval::open(0, 2)})});
  EXPECT_EQ(select_g(g), (Point{1, d("1/2")}));
}

TEST(SelectG, DisconnectedProjectionIsAnError) {
  SpanComplex g(1, {BoxRegion({Interval::open(0, 1)}), BoxRegion({Interval::open(2, 3)})});
  EXPECT_THROW(select_g(g), InvariantError);
}

TEST(Retraction, StepNearTheSet) {
  SpanComplex a = example1(3);
  StepAudit s = retraction_step(a, Point{d("9/8"), d("1/2")});
  EXPECT_TRUE(s.ok());
  EXPECT_LE(s.d_next * Dyadic(9), s.d);
}

TEST(Retraction, IntervalThreeIterations) {
  Trajectory t = iterate_retraction(interval01(), Point{2}, 3);
  EXPECT_EQ(t.violations(), 0u);
  EXPECT_LE(t.distances.back() * Dyadic(729), Dyadic(1));
}

TEST(Retraction, ExampleOneDecay) {
  SpanComplex a = example1(3);
  RetractionParams params;
  params.probes = 60;
  for (const auto& x : exterior_points(a, 10, 3)) {
    Trajectory t = iterate_retraction(a, x, 4, params);
    EXPECT_EQ(t.violations(), 0u) << x.str();
    for (std::size_t k = 0; k < t.distances.size(); ++k) {
      Dyadic scaled = t.distances[k];
      for (std::size_t j = 0; j < k; ++j) scaled *= Dyadic(9);
      EXPECT_LE(scaled, t.d0);
    }
  }
}

TEST(Retraction, DecayCsvHeader) {
  Trajectory t = iterate_retraction(interval01(), Point{2}, 2);
  std::string csv = decay_csv(t);
  EXPECT_EQ(csv.rfind("k,distance,bound,ok\n", 0), 0u);
}

TEST(Retraction, StartInsideIsAnError) {
  EXPECT_THROW(iterate_retraction(interval01(), Point{d("1/2")}, 3), PreconditionError);
}
