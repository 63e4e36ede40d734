#include <gtest/gtest.h>

#include "monovex/dyadic.hpp"
#include "monovex/errors.hpp"

using monovex::BigInt;
using monovex::Dyadic;

TEST(Dyadic, ParsesIntegersAndFractions) {
  EXPECT_EQ(Dyadic::parse("3"), Dyadic(3));
  EXPECT_EQ(Dyadic::parse("-1/8"), Dyadic(BigInt(-1), 3));
  EXPECT_EQ(Dyadic::parse("3/2^4"), Dyadic(BigInt(3), 4));
  EXPECT_EQ(Dyadic::parse(" 6/4 "), Dyadic(BigInt(3), 1));
}

TEST(Dyadic, RejectsNonDyadic) {
  EXPECT_THROW(Dyadic::parse("1/3"), monovex::ParseError);
  EXPECT_THROW(Dyadic::parse("abc"), monovex::ParseError);
  EXPECT_THROW(Dyadic::parse("1/0"), monovex::ParseError);
}

TEST(Dyadic, CanonicalFormHasOddMantissa) {
  Dyadic x(BigInt(12), 4);
  EXPECT_EQ(x.mantissa(), 3);
  EXPECT_EQ(x.exponent(), 2u);
  Dyadic y = Dyadic(BigInt(3), 1) * Dyadic(2);
  EXPECT_TRUE(y.is_integer());
  EXPECT_EQ(y, Dyadic(3));
}

TEST(Dyadic, StrRoundTrips) {
  for (const char* s : {"0", "7", "-5", "1/2^3", "-3/2^7"}) {
    Dyadic x = Dyadic::parse(s);
    EXPECT_EQ(Dyadic::parse(x.str()), x) << s;
  }
}

TEST(Dyadic, ArithmeticIsExact) {
  Dyadic a = Dyadic::parse("1/2^60"), b = Dyadic(1);
  EXPECT_EQ((b + a) - b, a);
  EXPECT_EQ(a * Dyadic::pow2(60), Dyadic(1));
  EXPECT_EQ(midpoint(Dyadic(0), Dyadic(1)), Dyadic::pow2(-1));
  EXPECT_EQ(Dyadic(-3).half(), Dyadic(BigInt(-3), 1));
}

TEST(Dyadic, OrderingAndRounding) {
  EXPECT_LT(Dyadic::parse("-1/2"), Dyadic(0));
  EXPECT_LT(Dyadic::parse("3/8"), Dyadic::parse("1/2"));
  EXPECT_EQ(Dyadic::parse("-3/2").floor(), -2);
  EXPECT_EQ(Dyadic::parse("-3/2").ceil(), -1);
  EXPECT_EQ(monovex::floor_ratio(Dyadic::parse("5/4"), Dyadic::parse("1/2")), 2);
  EXPECT_EQ(monovex::ceil_ratio(Dyadic::parse("5/4"), Dyadic::parse("1/2")), 3);
}

TEST(Dyadic, CompareWithRational) {
  using monovex::Rational;
  EXPECT_EQ(monovex::compare(Dyadic::parse("1/4"), Rational(1, 3)), std::strong_ordering::less);
  EXPECT_EQ(monovex::compare(Dyadic::parse("1/2"), Rational(1, 2)), std::strong_ordering::equal);
}
