#include <gtest/gtest.h>

#include "monovex/catalog.hpp"
#include "monovex/errors.hpp"
#include "monovex/fuzz.hpp"
#include "monovex/io.hpp"
#include "monovex/monotone_path.hpp"

using namespace monovex;

TEST(Catalog, ExampleOneSquares) {
  SpanComplex a = example1(3);
  ASSERT_EQ(a.boxes().size(), 3u);
  EXPECT_EQ(a.boxes()[2], BoxRegion::closed(Point{Dyadic::pow2(-3), Dyadic::pow2(-3)}, Point{Dyadic::pow2(-2), Dyadic::pow2(-2)}));
  EXPECT_FALSE(contains(a, Point{0, 0}));
  EXPECT_THROW(example1(0), PreconditionError);
}

TEST(Catalog, ExampleTwoMembership) {
  SpanComplex a = example2();
  EXPECT_EQ(a.boxes().size(), 6u);
  EXPECT_TRUE(contains(a, Point{Dyadic::parse("-1/2"), 0, 1}));
  EXPECT_FALSE(contains(a, Point{0, 0, 0}));
  EXPECT_FALSE(contains(a, Point{-1, Dyadic::parse("-1/2"), -1}));
  EXPECT_FALSE(a.is_closed());
}

TEST(Catalog, ExampleTwoClosedPrecondition) {
  EXPECT_THROW(example2_closed(0), PreconditionError);
  EXPECT_THROW(example2_closed(1), PreconditionError);
  EXPECT_TRUE(example2_closed(Dyadic::pow2(-2)).is_closed());
}

TEST(Catalog, NamesResolve) {
  CatalogParams params;
  for (const auto& name : catalog_names()) {
    if (name == "example3" || name == "example4") continue;
    SpanComplex a = catalog(name, params);
    EXPECT_FALSE(a.empty()) << name;
    EXPECT_FALSE(catalog_help(name).empty());
    EXPECT_EQ(parse_complex(dump_complex(a)), a) << name;
  }
  EXPECT_THROW(catalog("nope", params), PreconditionError);
}

TEST(Fuzz, ModesParse) {
  EXPECT_EQ(parse_fuzz_mode("half-open"), FuzzMode::kHalfOpen);
  EXPECT_EQ(to_string(FuzzMode::kOpen), "open");
  EXPECT_THROW(parse_fuzz_mode("ajar"), PreconditionError);
}

TEST(Fuzz, RandomComplexRespectsMode) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    SpanComplex c = random_complex(rng, 2, 4, 4, FuzzMode::kOpen);
    for (const auto& b : c.boxes()) {
      for (const auto& iv : b.intervals()) {
        EXPECT_FALSE(iv.lo_closed() || iv.hi_closed());
        EXPECT_LT(iv.lo(), iv.hi());
      }
    }
    EXPECT_TRUE(random_complex(rng, 3, 4, 4, FuzzMode::kClosed).is_closed());
  }
}

TEST(Fuzz, ReproducibleForFixedSeed) {
  FuzzConfig cfg;
  cfg.trials = 8;
  cfg.seed = 21;
  FuzzReport a = run_fuzz(cfg), b = run_fuzz(cfg);
  ASSERT_EQ(a.trials.size(), b.trials.size());
  for (std::size_t i = 0; i < a.trials.size(); ++i) {
    EXPECT_EQ(a.trials[i].complex, b.trials[i].complex);
    EXPECT_EQ(a.trials[i].betti, b.trials[i].betti);
  }
}

TEST(Fuzz, ClosedTrialsAreAcyclic) {
  FuzzConfig cfg;
  cfg.trials = 30;
  cfg.seed = 2;
  FuzzReport r = run_fuzz(cfg);
  EXPECT_EQ(r.not_found, 0u);
  EXPECT_TRUE(r.violations.empty());
  for (const auto& t : r.trials) EXPECT_TRUE(is_monovex(t.complex).is_monovex);
}

TEST(Fuzz, HalfOpenFindsAreNeverFailures) {
  FuzzConfig cfg;
  cfg.trials = 30;
  cfg.mode = FuzzMode::kHalfOpen;
  FuzzReport r = run_fuzz(cfg);
  EXPECT_TRUE(r.violations.empty());
}
