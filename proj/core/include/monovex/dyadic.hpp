#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace monovex {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact dyadic rational mantissa / 2^exponent.
///
/// Always kept canonical: the mantissa is odd (or zero with exponent 0) so
/// equal values have equal representations and hash identically.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long value) : mantissa_(value) {}  // NOLINT(google-explicit-constructor)
  Dyadic(int value) : mantissa_(value) {}        // NOLINT(google-explicit-constructor)
  Dyadic(BigInt mantissa, std::uint32_t exponent);

  /// 2^k for any integer k.
  static Dyadic pow2(int k);

  /// Parses "m", "m/2^e" or "p/q" where q is a power of two.
  static Dyadic parse(std::string_view text);

  const BigInt& mantissa() const noexcept { return mantissa_; }
  std::uint32_t exponent() const noexcept { return exponent_; }

  bool is_zero() const noexcept { return mantissa_.is_zero(); }
  int sign() const noexcept { return mantissa_.sign(); }
  bool is_integer() const noexcept { return exponent_ == 0; }

  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& other);
  Dyadic& operator-=(const Dyadic& other);
  Dyadic& operator*=(const Dyadic& other);

  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }

  /// Multiplies by 2^k (k may be negative).
  Dyadic scaled(int k) const;
  Dyadic half() const { return scaled(-1); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) noexcept {
    return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  BigInt floor() const;
  BigInt ceil() const;

  Rational to_rational() const;
  double to_double() const;

  /// Canonical text: "m" for integers, otherwise "m/2^e".
  std::string str() const;

  std::size_t hash() const noexcept;

 private:
  void normalize();

  BigInt mantissa_{0};
  std::uint32_t exponent_{0};
};

Dyadic abs(const Dyadic& x);
Dyadic midpoint(const Dyadic& a, const Dyadic& b);
inline const Dyadic& min(const Dyadic& a, const Dyadic& b) { return b < a ? b : a; }
inline const Dyadic& max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

/// floor(x / step) and ceil(x / step) for a positive step.
BigInt floor_ratio(const Dyadic& x, const Dyadic& step);
BigInt ceil_ratio(const Dyadic& x, const Dyadic& step);

/// Narrowing conversion used for lattice indices; throws if out of range.
std::int64_t to_int64(const BigInt& value);

/// Compares a Dyadic against an exact rational.
std::strong_ordering compare(const Dyadic& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Dyadic& x);

}  // namespace monovex

template <>
struct std::hash<monovex::Dyadic> {
  std::size_t operator()(const monovex::Dyadic& x) const noexcept { return x.hash(); }
};
