// Randomized invariants over generated complexes.

#include <gtest/gtest.h>

#include <random>

#include "monovex/catalog.hpp"
#include "monovex/cubical.hpp"
#include "monovex/fuzz.hpp"
#include "monovex/io.hpp"
#include "monovex/monotone_path.hpp"
#include "monovex/rasterizer.hpp"
#include "oracle.hpp"

using namespace monovex;

namespace {

std::vector<SpanComplex> monovex_sample(FuzzMode mode, std::size_t trials, std::uint64_t seed) {
  FuzzConfig cfg;
  cfg.mode = mode;
  cfg.trials = trials;
  cfg.seed = seed;
  std::vector<SpanComplex> out;
  for (auto& t : run_fuzz(cfg).trials) {
    if (t.found) out.push_back(std::move(t.complex));
  }
  return out;
}

Point random_member(std::mt19937_64& rng, const SpanComplex& a) {
  auto pts = oracle::grid_members(a);
  return pts[std::uniform_int_distribution<std::size_t>(0, pts.size() - 1)(rng)];
}

}  // namespace

TEST(Property, ProjectionsOfMonovexSetsAreMonovex) {
  for (const auto& a : monovex_sample(FuzzMode::kHalfOpen, 25, 31)) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      EXPECT_TRUE(is_monovex(project(a, {i})).is_monovex) << dump_complex(a);
    }
    if (a.dim() == 3) {
      EXPECT_TRUE(is_monovex(project(a, {0, 2})).is_monovex);
    }
  }
}

TEST(Property, IntersectionWithBoxKeepsMonovexity) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(0, 8);
  for (const auto& a : monovex_sample(FuzzMode::kClosed, 25, 32)) {
    Point lo(a.dim()), hi(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      int u = c(rng), v = c(rng);
      lo[i] = Dyadic(BigInt(std::min(u, v)), 1);
      hi[i] = Dyadic(BigInt(std::max(u, v)), 1);
    }
    SpanComplex cut = intersect_box(a, BoxRegion::closed(lo, hi));
    if (cut.empty()) continue;
    EXPECT_TRUE(is_monovex(cut).is_monovex) << dump_complex(a);
  }
}

TEST(Property, MinkowskiSumWithBoxKeepsMonovexity) {
  for (const auto& a : monovex_sample(FuzzMode::kClosed, 20, 33)) {
    Point lo(a.dim()), hi(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) hi[i] = Dyadic::pow2(-1);
    EXPECT_TRUE(is_monovex(minkowski_box(a, BoxRegion::closed(lo, hi))).is_monovex) << dump_complex(a);
  }
}

TEST(Property, LiftedPathsAreValid) {
  std::mt19937_64 rng(6);
  for (const auto& a : monovex_sample(FuzzMode::kClosed, 20, 34)) {
    Point lo(a.dim()), hi(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) hi[i] = Dyadic(1);
    BoxRegion r = BoxRegion::closed(lo, hi);
    Point x = random_member(rng, a), y = random_member(rng, a);
    auto gamma = monotone_reachable(a, x, y);
    ASSERT_TRUE(gamma);
    MonotonePath lifted = lift_minkowski_path(*gamma, lo, hi, r);
    EXPECT_TRUE(validate_monotone(lifted, minkowski_box(a, r)));
  }
}

TEST(Property, PathsStayInTheBHullOfTheirEnds) {
  std::mt19937_64 rng(7);
  for (const auto& a : monovex_sample(FuzzMode::kHalfOpen, 30, 35)) {
    Point x = random_member(rng, a), y = random_member(rng, a);
    auto path = monotone_reachable(a, x, y);
    ASSERT_TRUE(path) << dump_complex(a);
    EXPECT_TRUE(validate_monotone(*path, a));
    BoxRegion hull = bhull({x, y});
    for (const auto& w : path->waypoints) EXPECT_TRUE(hull.contains(w));
  }
}

TEST(Property, MonovexVerdictMatchesBruteForce) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 60; ++i) {
    const std::size_t dim = 1 + i % 2;
    SpanComplex a = oracle::random_mixed_complex(rng, dim, 3, 3);
    MonovexVerdict v = is_monovex(a);
    auto brute = oracle::brute_force_witness(a);
    EXPECT_EQ(v.is_monovex, !brute.has_value()) << dump_complex(a);
    if (v.witness) {
      EXPECT_FALSE(oracle::bfs_reachable(a, v.witness->first, v.witness->second));
    }
  }
}

TEST(Property, ClosedMonovexSetsAreAcyclic) {
  for (const auto& a : monovex_sample(FuzzMode::kClosed, 40, 36)) {
    auto r = betti_numbers(CubicalComplex::from_complex(a, aligned_grid(a)));
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.betti[0], 1u);
    for (std::size_t k = 1; k < r.betti.size(); ++k) EXPECT_EQ(r.betti[k], 0u) << dump_complex(a);
  }
}

TEST(Property, OrderComplexMatchesCubicalWhenClosed) {
  for (const auto& a : monovex_sample(FuzzMode::kClosed, 15, 37)) {
    auto r = betti_numbers(CubicalComplex::from_complex(a, aligned_grid(a)));
    EXPECT_EQ(order_complex_betti(a), r.betti);
  }
  std::mt19937_64 rng(9);
  for (int i = 0; i < 15; ++i) {
    SpanComplex a = random_complex(rng, 2, 4, 4, FuzzMode::kClosed);
    auto r = betti_numbers(CubicalComplex::from_complex(a, aligned_grid(a)));
    EXPECT_EQ(order_complex_betti(a), r.betti) << dump_complex(a);
  }
}

TEST(Property, RefinementDoesNotChangeHomology) {
  for (const auto& a : monovex_sample(FuzzMode::kClosed, 8, 38)) {
    Lattice g = aligned_grid(a);
    auto coarse = betti_numbers(CubicalComplex::from_complex(a, g));
    auto fine = betti_numbers(CubicalComplex::from_complex(a, g.refined(1)));
    EXPECT_EQ(coarse.betti, fine.betti);
  }
}

TEST(Property, RoundTripOfGeneratedComplexes) {
  for (auto mode : {FuzzMode::kClosed, FuzzMode::kOpen, FuzzMode::kHalfOpen}) {
    for (const auto& a : monovex_sample(mode, 10, 39)) EXPECT_EQ(parse_complex(dump_complex(a)), a);
  }
}

TEST(Property, RasterIsConservative) {
  auto [a, b] = example3_sets();
  const Dyadic h = Dyadic::pow2(-3);
  VoxelGrid g = example3_raster(h);
  const int steps = 16;
  for (const auto& [p, q] : a.segments) {
    for (const auto& [r, s] : b.segments) {
      for (int i = 0; i <= steps; ++i) {
        for (int j = 0; j <= steps; ++j) {
          Dyadic u(BigInt(i), 4), v(BigInt(j), 4);
          Point x(3);
          for (std::size_t k = 0; k < 3; ++k) x[k] = p[k] + u * (q[k] - p[k]) + r[k] + v * (s[k] - r[k]);
          Key voxel(3);
          for (std::size_t k = 0; k < 3; ++k) voxel[k] = to_int64(floor_ratio(x[k], h));
          EXPECT_TRUE(g.occupied(voxel)) << x.str();
        }
      }
    }
  }
}

TEST(Property, RasterResolutionMonotone) {
  // a fine voxel holding a true sum point lies inside a coarse occupied voxel
  const Dyadic h = Dyadic::pow2(-2);
  VoxelGrid coarse = example4_raster(h, 1), fine = example4_raster(h.half(), 1);
  for (const auto& v : fine.voxels()) {
    Key parent(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) parent[i] = v[i] >= 0 ? v[i] / 2 : -((-v[i] + 1) / 2);
    EXPECT_TRUE(coarse.occupied(parent));
  }
}
