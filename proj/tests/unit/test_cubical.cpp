#include <gtest/gtest.h>

#include "monovex/catalog.hpp"
#include "monovex/cubical.hpp"
#include "monovex/errors.hpp"

using namespace monovex;

namespace {

using Betti = std::vector<std::size_t>;

BettiReport betti_of(const SpanComplex& a, const Dyadic& step) {
  return betti_numbers(CubicalComplex::from_complex(a, Lattice::uniform(a.dim(), step)));
}

SpanComplex annulus() {
  SpanComplex a(2);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == 1 && j == 1) continue;
      a.add(BoxRegion::closed(Point{i, j}, Point{i + 1, j + 1}));
    }
  }
  return a;
}

}  // namespace

TEST(Gf2, RankOfSmallMatrices) {
  BoundaryMatrix m{3, {{0, 1}, {1, 2}, {0, 2}}};
  EXPECT_EQ(gf2_rank(m), 2u);
  BoundaryMatrix id{2, {{0}, {1}}};
  EXPECT_EQ(gf2_rank(id), 2u);
  EXPECT_EQ(gf2_rank(BoundaryMatrix{4, {}}), 0u);
}

TEST(Cubical, UnitSquareCells) {
  SpanComplex sq(2, {BoxRegion::closed(Point{0, 0}, Point{1, 1})});
  auto c = CubicalComplex::from_complex(sq, Lattice::uniform(2, 1));
  EXPECT_EQ(c.count(0), 4u);
  EXPECT_EQ(c.count(1), 4u);
  EXPECT_EQ(c.count(2), 1u);
  EXPECT_TRUE(c.face_closed());
  EXPECT_TRUE(boundary_squared_zero(c));
}

TEST(Cubical, SolidCube) {
  SpanComplex cube(3, {BoxRegion::closed(Point{0, 0, 0}, Point{1, 1, 1})});
  auto r = betti_of(cube, Dyadic::pow2(-1));
  EXPECT_EQ(r.betti, (Betti{1, 0, 0, 0}));
  EXPECT_TRUE(r.ok());
}

TEST(Cubical, SquareAnnulus) {
  auto r = betti_of(annulus(), 1);
  EXPECT_EQ(r.betti, (Betti{1, 1, 0}));
  EXPECT_EQ(r.euler, 0);
  EXPECT_TRUE(r.ok());
  auto cycles = h1_representatives(CubicalComplex::from_complex(annulus(), Lattice::uniform(2, 1)));
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_GE(cycles[0].size(), 4u);
}

TEST(Cubical, ExampleOneEuler) {
  auto c = CubicalComplex::from_complex(example1(2), Lattice::uniform(2, Dyadic::pow2(-2)));
  EXPECT_TRUE(c.face_closed());
  auto r = betti_numbers(c);
  EXPECT_EQ(r.euler, 1);
  EXPECT_EQ(r.betti, (Betti{1, 0, 0}));
}

TEST(Cubical, MisalignedInputIsAnError) {
  SpanComplex a(1, {BoxRegion::closed(Point{0}, Point{Dyadic::pow2(-1)})});
  EXPECT_THROW(CubicalComplex::from_complex(a, Lattice::uniform(1, 1)), PreconditionError);
}

TEST(Cubical, NonClosedInputIsAnError) {
  SpanComplex a(1, {BoxRegion({Interval(0, 1, true, false)})});
  EXPECT_THROW(CubicalComplex::from_complex(a, Lattice::uniform(1, 1)), PreconditionError);
}

TEST(Cubical, ExampleTwoSurrogateIsACircle) {
  auto r = betti_of(example2_closed(Dyadic::pow2(-2)), Dyadic::pow2(-2));
  EXPECT_EQ(r.betti, (Betti{1, 1, 0, 0}));
  EXPECT_TRUE(r.ok());
}

TEST(Cubical, TwoComponents) {
  SpanComplex a(1, {BoxRegion::closed(Point{0}, Point{1}), BoxRegion::closed(Point{2}, Point{3})});
  auto r = betti_of(a, 1);
  EXPECT_EQ(r.betti, (Betti{2, 0}));
  EXPECT_TRUE(r.components_consistent);
}

TEST(Cubical, AlignedGridIsCoarsest) {
  Lattice g = aligned_grid(example1(3));
  EXPECT_EQ(g.steps()[0], Dyadic::pow2(-3));
}

TEST(OrderComplex, AgreesWithCubicalOnClosedSets) {
  EXPECT_EQ(order_complex_betti(annulus()), (Betti{1, 1, 0}));
  EXPECT_EQ(order_complex_betti(example1(3)), (Betti{1, 0, 0}));
}

TEST(OrderComplex, OpenAndHalfOpenSets) {
  SpanComplex open_sq(2, {BoxRegion({Interval::open(0, 1), Interval::open(0, 1)})});
  EXPECT_EQ(order_complex_betti(open_sq), (Betti{1, 0, 0}));
  SpanComplex gap(1, {BoxRegion({Interval(0, 1, true, false)}), BoxRegion({Interval(1, 2, false, true)})});
  EXPECT_EQ(order_complex_betti(gap), (Betti{2, 0}));
  EXPECT_EQ(order_complex_betti(example2()), (Betti{1, 1, 0, 0}));
}
