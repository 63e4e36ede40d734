#include <gtest/gtest.h>

#include "monovex/catalog.hpp"
#include "monovex/errors.hpp"
#include "monovex/io.hpp"

using namespace monovex;

TEST(Io, ComplexRoundTrip) {
  for (const auto& a : {example1(3), example2(), example2_closed(Dyadic::parse("1/4")), lshape()}) {
    EXPECT_EQ(parse_complex(dump_complex(a)), a);
  }
}

TEST(Io, AcceptsNumericAndStringEndpoints) {
  auto a = parse_complex(R"({"dim": 1, "boxes": [[{"lo": 0, "hi": "3/2^2", "lo_closed": true, "hi_closed": false}]]})");
  ASSERT_EQ(a.boxes().size(), 1u);
  EXPECT_EQ(a.boxes()[0][0], Interval(0, Dyadic::parse("3/4"), true, false));
}

TEST(Io, ErrorsCarryTheirKind) {
  EXPECT_THROW(parse_complex("{"), ParseError);
  EXPECT_THROW(parse_complex(R"({"dim": 2, "boxes": [[{"lo": 0, "hi": 1, "lo_closed": true, "hi_closed": true}]]})"),
               DimensionError);
  EXPECT_THROW(parse_complex(R"({"dim": 1, "boxes": [[{"lo": "1/3", "hi": 1, "lo_closed": true, "hi_closed": true}]]})"),
               ParseError);
}

TEST(Io, PathRoundTrip) {
  auto path = MonotonePath::through({Point{0, 0}, Point{Dyadic::parse("1/2"), 0}, Point{1, 1}});
  MonotonePath back = parse_path(dump_path(path));
  EXPECT_EQ(back.waypoints, path.waypoints);
  EXPECT_EQ(back.direction, path.direction);
}

TEST(Io, ParsePoint) {
  EXPECT_EQ(parse_point("1/2, -3"), (Point{Dyadic::parse("1/2"), -3}));
  EXPECT_THROW(parse_point("1,,2"), ParseError);
}
