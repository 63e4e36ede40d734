#include <gtest/gtest.h>

#include "monovex/catalog.hpp"
#include "monovex/errors.hpp"
#include "monovex/homotopy.hpp"

using namespace monovex;

namespace {

Dyadic d(const char* s) { return Dyadic::parse(s); }

}  // namespace

TEST(Seed, AlignedBoxSeedsItsArgument) {
  SpanComplex a(2, {BoxRegion::closed(Point{0, 0}, Point{1, 1})});
  LatticeSample s = seed_boundary(a, d("1/2"));
  ASSERT_FALSE(s.values.empty());
  for (const auto& [key, value] : s.values) {
    const std::size_t n = 2;
    Point x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = s.lattice.coordinate(i, key[i]);
    if (key[2 * n] == 0 && contains(a, x)) {
      EXPECT_EQ(value, x);
    }
  }
}

TEST(Seed, ExampleOneWithinHalfDelta) {
  SpanComplex a = example1(3);
  const Dyadic delta = d("1/4");
  LatticeSample s = seed_boundary(a, delta);
  for (const auto& [key, value] : s.values) {
    Point x(2), y(2);
    for (std::size_t i = 0; i < 2; ++i) {
      x[i] = s.lattice.coordinate(i, key[i]);
      y[i] = s.lattice.coordinate(i + 2, key[i + 2]);
    }
    const Point& arg = key[4] == 0 ? x : y;
    EXPECT_LE(cheb(arg, value), delta.half());
    EXPECT_TRUE(contains(a, value));
  }
}

TEST(GDelta, PointSetIsConstant) {
  Point p{d("1/2"), d("1/2")};
  SpanComplex a(2, {BoxRegion::point(p)});
  PathField g = build_g_delta(a, d("1/2"), 2);
  EXPECT_EQ(g(p, p, d("1/4")), p);
  GDeltaAudit au = audit_g_delta(g, {p}, 2);
  EXPECT_EQ(au.violations(), 0u);
  EXPECT_TRUE(au.max_hull.is_zero());
}

TEST(GDelta, UnitIntervalBounds) {
  SpanComplex a(1, {BoxRegion::closed(Point{0}, Point{1})});
  PathField g = build_g_delta(a, d("1/2"), 3);
  GDeltaAudit au = audit_g_delta(g, default_samples(a), 3);
  EXPECT_EQ(au.violations(), 0u);
  EXPECT_LE(au.max_start, d("1/2"));
  EXPECT_LE(au.max_hull, d("1/2"));
}

TEST(GDelta, ExampleOneQuarter) {
  SpanComplex a = example1(3);
  PathField g = build_g_delta(a, d("1/4"), 4);
  GDeltaAudit au = audit_g_delta(g, default_samples(a), 4);
  EXPECT_GT(au.samples, 0u);
  EXPECT_EQ(au.violations(), 0u);
}

TEST(Cantor, FirstLevels) {
  CantorSchedule s = cantor_schedule(3, d("1/4"));
  ASSERT_EQ(s.levels.size(), 3u);
  ASSERT_EQ(s.levels[0].size(), 1u);
  EXPECT_EQ(s.levels[0][0].lo, Rational(1, 3));
  EXPECT_EQ(s.levels[0][0].hi, Rational(2, 3));
  ASSERT_EQ(s.levels[1].size(), 2u);
  EXPECT_EQ(s.levels[1][0].lo, Rational(1, 9));
  EXPECT_EQ(s.levels[1][0].hi, Rational(2, 9));
  EXPECT_EQ(s.levels[1][1].lo, Rational(7, 9));
  EXPECT_EQ(s.levels[1][1].hi, Rational(8, 9));
  EXPECT_EQ(s.levels[2].size(), 4u);
  EXPECT_EQ(s.deltas[0], d("1/8"));
  EXPECT_EQ(s.deltas[2], d("1/32"));
}

TEST(Cantor, PointSetIsConstant) {
  Point p{d("1/2")};
  SpanComplex a(1, {BoxRegion::point(p)});
  HomotopyField h = contract_to_point(a, p, 2, d("1/2"));
  for (const auto& s : h.samples) EXPECT_EQ(s.value, p);
}

TEST(Cantor, ExampleOneJunctions) {
  SpanComplex a = example1(3);
  HomotopyField h = cantor_homotopy(a, Point{1, 1}, cantor_schedule(3, d("1/4")));
  EXPECT_FALSE(h.junctions.empty());
  for (const auto& j : h.junctions) EXPECT_LE(j.defect, j.bound);
  EXPECT_EQ(h.junction_violations(), 0u);
  EXPECT_EQ(h.range_violations(a), 0u);
}

TEST(Contract, SingleBoxToCorner) {
  SpanComplex a(2, {BoxRegion::closed(Point{0, 0}, Point{1, 1})});
  HomotopyField h = contract_to_point(a, Point{0, 0}, 2, d("1/2"));
  EXPECT_EQ(h.range_violations(a), 0u);
  EXPECT_EQ(h.endpoint_violations(), 0u);
  for (const auto& s : h.samples) {
    if (s.t == 1) {
      EXPECT_EQ(s.value, (Point{0, 0}));
    } else if (s.t == 0) {
      EXPECT_EQ(s.value, h.points[s.point]);
    }
  }
}

TEST(Contract, ExampleOne) {
  SpanComplex a = example1(3);
  HomotopyField h = contract_to_point(a, Point{1, 1}, 3, d("1/2"));
  EXPECT_EQ(h.junction_violations(), 0u);
  EXPECT_EQ(h.range_violations(a), 0u);
  EXPECT_EQ(h.endpoint_violations(), 0u);
}

TEST(Contract, BaseOutsideIsAnError) {
  EXPECT_THROW(contract_to_point(example1(2), Point{0, 0}, 2, d("1/2")), PreconditionError);
}
