#include <gtest/gtest.h>

#include "monovex/errors.hpp"
#include "monovex/geometry.hpp"
#include "monovex/io.hpp"

using namespace monovex;

namespace {

Dyadic d(const char* s) { return Dyadic::parse(s); }

}  // namespace

TEST(Interval, Membership) {
  Interval half(0, 1, true, false);
  EXPECT_TRUE(half.contains(0));
  EXPECT_TRUE(half.contains(d("1/2")));
  EXPECT_FALSE(half.contains(1));
  EXPECT_THROW(Interval(1, 0, true, true), PreconditionError);
}

TEST(Interval, IntersectionKeepsFlags) {
  auto r = intersect(Interval(0, 2, true, false), Interval(1, 3, false, true));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, Interval(1, 2, false, false));
  EXPECT_FALSE(intersect(Interval(0, 1, true, false), Interval(1, 2, true, true)));
}

TEST(Interval, AxisDistanceToOpenEnd) {
  auto ad = axis_distance(2, Interval(0, 1, true, false));
  EXPECT_EQ(ad.value, Dyadic(1));
  EXPECT_FALSE(ad.attained);
  EXPECT_EQ(axis_distance(d("1/2"), Interval::closed(0, 1)).value, Dyadic(0));
}

TEST(BoxRegion, DimensionCountsNondegenerateSides) {
  BoxRegion b({Interval::closed(0, 1), Interval::point(2), Interval::closed(0, 3)});
  EXPECT_EQ(b.ambient_dim(), 3u);
  EXPECT_EQ(b.dimension(), 2u);
  EXPECT_EQ(b.vertices().size(), 4u);
}

TEST(Geometry, ChebyshevDistance) {
  SpanComplex a(2, {BoxRegion::closed(Point{0, 0}, Point{1, 1})});
  auto dist = cheb_distance(Point{3, d("1/2")}, a);
  EXPECT_EQ(dist.value, Dyadic(2));
  EXPECT_TRUE(dist.attained);
  EXPECT_EQ(cheb(Point{0, 0}, Point{d("-1/2"), 2}), Dyadic(2));
}

TEST(Geometry, BHullOfPoints) {
  BoxRegion h = bhull({Point{1, 5}, Point{3, 2}});
  EXPECT_EQ(h, BoxRegion::closed(Point{1, 2}, Point{3, 5}));
}

TEST(Geometry, MinkowskiWithBox) {
  SpanComplex a(1, {BoxRegion({Interval(0, 1, true, false)})});
  SpanComplex s = minkowski_box(a, BoxRegion::closed(Point{0}, Point{1}));
  ASSERT_EQ(s.boxes().size(), 1u);
  EXPECT_EQ(s.boxes()[0][0], Interval(0, 2, true, false));
}

TEST(Geometry, ProjectAndIntersect) {
  SpanComplex a(2, {BoxRegion::closed(Point{0, 0}, Point{2, 1})});
  SpanComplex p = project(a, {1});
  ASSERT_EQ(p.dim(), 1u);
  EXPECT_EQ(p.boxes()[0][0], Interval::closed(0, 1));
  SpanComplex cut = intersect_box(a, BoxRegion::closed(Point{1, 0}, Point{3, 3}));
  ASSERT_EQ(cut.boxes().size(), 1u);
  EXPECT_EQ(cut.boxes()[0], BoxRegion::closed(Point{1, 0}, Point{2, 1}));
}

TEST(Geometry, ElementaryBoxesOfUnitSquare) {
  Lattice grid = Lattice::uniform(2, 1);
  BoxRegion window = BoxRegion::closed(Point{0, 0}, Point{1, 1});
  EXPECT_EQ(elementary_boxes(grid, 0, window).size(), 4u);
  EXPECT_EQ(elementary_boxes(grid, 1, window).size(), 4u);
  EXPECT_EQ(elementary_boxes(grid, 2, window).size(), 1u);
}

TEST(Geometry, CoversAndSubset) {
  SpanComplex l(2, {BoxRegion::closed(Point{0, 0}, Point{2, 1}), BoxRegion::closed(Point{0, 0}, Point{1, 2})});
  EXPECT_TRUE(covers(l, BoxRegion::closed(Point{0, 0}, Point{1, 1})));
  EXPECT_FALSE(covers(l, BoxRegion::closed(Point{0, 0}, Point{2, 2})));
  SpanComplex sq(2, {BoxRegion::closed(Point{0, 0}, Point{1, 1})});
  EXPECT_TRUE(is_subset(sq, l));
  EXPECT_FALSE(is_subset(l, sq));
}

TEST(Geometry, NearestPointIsDeterministic) {
  SpanComplex a(2, {BoxRegion::closed(Point{0, 0}, Point{1, 1})});
  Point q = nearest_point(a, Point{3, d("1/2")});
  EXPECT_EQ(q, (Point{1, d("1/2")}));
  EXPECT_EQ(cheb(q, Point{3, d("1/2")}), Dyadic(2));
}

TEST(Geometry, DimensionMismatchThrows) {
  SpanComplex a(2);
  EXPECT_THROW(a.add(BoxRegion::closed(Point{0}, Point{1})), DimensionError);
}
