#include <gtest/gtest.h>

#include "monovex/catalog.hpp"
#include "monovex/cubical.hpp"
#include "monovex/errors.hpp"
#include "monovex/export.hpp"
#include "monovex/monotone_path.hpp"
#include "monovex/rasterizer.hpp"

using namespace monovex;

namespace {

Dyadic d(const char* s) { return Dyadic::parse(s); }

}  // namespace

TEST(Raster, PointPlusSegmentCoversTheSegment) {
  SegmentSet a, b;
  a.add(Point{0, 0}, Point{0, 0});
  b.add(Point{0, 0}, Point{1, 1});
  const Dyadic h = d("1/4");
  VoxelGrid g = rasterize_minkowski(a, b, h, BoxRegion::closed(Point{-1, -1}, Point{2, 2}));
  for (int k = 0; k < 4; ++k) EXPECT_TRUE(g.occupied({k, k})) << k;
  EXPECT_FALSE(g.occupied({0, 2}));
  EXPECT_FALSE(g.occupied({3, 0}));
  // the segment touches the corners of the neighbouring diagonal cubes
  EXPECT_TRUE(g.occupied({-1, -1}));
  EXPECT_TRUE(g.occupied({0, 1}));
}

TEST(Raster, EmptyInputsAreAnError) {
  SegmentSet a, b;
  b.add(Point{0}, Point{1});
  EXPECT_THROW(rasterize_minkowski(a, b, 1, BoxRegion::closed(Point{0}, Point{1})), PreconditionError);
}

TEST(Raster, SingleVoxelComplex) {
  VoxelGrid g(d("1/2"), BoxRegion::closed(Point{0, 0}, Point{4, 4}));
  g.insert({1, 2});
  SpanComplex c = to_complex(g);
  ASSERT_EQ(c.boxes().size(), 1u);
  EXPECT_EQ(c.boxes()[0], BoxRegion::closed(Point{d("1/2"), 1}, Point{1, d("3/2")}));
}

TEST(Raster, RunsAreMerged) {
  VoxelGrid g(1, BoxRegion::closed(Point{0, 0}, Point{4, 4}));
  for (int k = 0; k < 3; ++k) g.insert({0, k});
  SpanComplex c = to_complex(g);
  ASSERT_EQ(c.boxes().size(), 1u);
  EXPECT_EQ(c.boxes()[0], BoxRegion::closed(Point{0, 0}, Point{1, 3}));
}

TEST(Raster, ExampleThreeSliceHasTwoComponents) {
  SpanComplex a = example3(d("1/8"));
  SpanComplex slice = intersect_box(a, BoxRegion({Interval::point(0), Interval::point(0), Interval::closed(-10, 10)}));
  SpanComplex line = project(slice, {2});
  auto r = betti_numbers(CubicalComplex::from_complex(line, aligned_grid(line)));
  EXPECT_EQ(r.betti[0], 2u);
  EXPECT_TRUE(contains(a, Point{0, 0, 0}));
  EXPECT_TRUE(contains(a, Point{0, 0, 4}));
}

TEST(Raster, ExampleThreeIsNotMonovex) {
  SpanComplex a = example3(d("1/8"));
  EXPECT_FALSE(monotone_reachable(a, Point{0, 0, 0}, Point{0, 0, 4}));
  MonovexVerdict v = is_monovex(a);
  EXPECT_FALSE(v.is_monovex);
  ASSERT_TRUE(v.witness);
  EXPECT_FALSE(monotone_reachable(a, v.witness->first, v.witness->second));
}

TEST(Raster, ExampleFourSummandAIsMonovex) {
  auto [sa, sb] = example4_sets(1);
  SegmentSet origin;
  origin.add(Point{0, 0, 0}, Point{0, 0, 0});
  const Dyadic h = d("1/16");
  VoxelGrid g = rasterize_minkowski(sa, origin, h, sum_window(sa, origin, h));
  EXPECT_TRUE(is_monovex(to_complex(g)).is_monovex);
}

TEST(Raster, ExampleFourIsACircleAtTwoTruncations) {
  for (const char* t : {"1", "3/2"}) {
    SpanComplex a = example4(d("1/16"), d(t));
    auto r = betti_numbers(CubicalComplex::from_complex(a, aligned_grid(a)));
    EXPECT_EQ(r.betti, (std::vector<std::size_t>{1, 1, 0, 0})) << t;
    EXPECT_TRUE(r.ok());
  }
}

TEST(Raster, MeshOutput) {
  VoxelGrid g(1, BoxRegion::closed(Point{0, 0, 0}, Point{2, 2, 2}));
  g.insert({0, 0, 0});
  std::string off = voxel_off(g);
  EXPECT_EQ(off.rfind("OFF", 0), 0u);
  EXPECT_NE(off.find("8 6 0"), std::string::npos);
}

TEST(Export, BoxesAndPolylines) {
  SpanComplex sq(2, {BoxRegion::closed(Point{0, 0}, Point{1, 1})});
  std::string off = off_boxes(sq);
  EXPECT_EQ(off.rfind("OFF", 0), 0u);
  EXPECT_NE(off.find("8 6 0"), std::string::npos);
  std::string lines = off_polylines({{Point{0, 0}, Point{1, 0}, Point{1, 1}}});
  EXPECT_NE(lines.find("3 2 0"), std::string::npos);
}
