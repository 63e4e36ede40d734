#include "monovex/dyadic.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>

#include "monovex/errors.hpp"

namespace monovex {

namespace {

BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer literal");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw ParseError("malformed integer literal '" + std::string(text) + "'");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') throw ParseError("malformed integer literal '" + std::string(text) + "'");
    value *= 10;
    value += c - '0';
  }
  return negative ? BigInt(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Dyadic::Dyadic(BigInt mantissa, std::uint32_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (mantissa_.is_zero()) {
    exponent_ = 0;
    return;
  }
  if (exponent_ == 0) return;
  unsigned tz = boost::multiprecision::lsb(boost::multiprecision::abs(mantissa_));
  unsigned shift = std::min<unsigned>(tz, exponent_);
  if (shift > 0) {
    mantissa_ >>= shift;  // exact: the low bits are zero
    exponent_ -= shift;
  }
}

Dyadic Dyadic::pow2(int k) {
  if (k >= 0) return Dyadic(BigInt(1) << k, 0);
  return Dyadic(BigInt(1), static_cast<std::uint32_t>(-k));
}

Dyadic Dyadic::parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Dyadic(parse_integer(text), 0);
  BigInt numerator = parse_integer(trim(text.substr(0, slash)));
  std::string_view denom = trim(text.substr(slash + 1));
  if (denom.size() > 2 && denom.substr(0, 2) == "2^") {
    std::string_view exp_text = denom.substr(2);
    unsigned exp = 0;
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exp);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) {
      throw ParseError("malformed exponent in '" + std::string(text) + "'");
    }
    return Dyadic(std::move(numerator), exp);
  }
  BigInt q = parse_integer(denom);
  if (q <= 0) throw ParseError("non-positive denominator in '" + std::string(text) + "'");
  unsigned e = boost::multiprecision::lsb(q);
  if (q != (BigInt(1) << e)) {
    throw ParseError("non-dyadic rational '" + std::string(text) + "'");
  }
  return Dyadic(std::move(numerator), e);
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.mantissa_ = -r.mantissa_;
  return r;
}

Dyadic& Dyadic::operator+=(const Dyadic& other) {
  if (other.mantissa_.is_zero()) return *this;
  if (exponent_ == other.exponent_) {
    mantissa_ += other.mantissa_;
  } else if (exponent_ > other.exponent_) {
    mantissa_ += BigInt(other.mantissa_ << (exponent_ - other.exponent_));
  } else {
    mantissa_ <<= (other.exponent_ - exponent_);
    mantissa_ += other.mantissa_;
    exponent_ = other.exponent_;
  }
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& other) { return *this += -other; }

Dyadic& Dyadic::operator*=(const Dyadic& other) {
  mantissa_ *= other.mantissa_;
  exponent_ += other.exponent_;
  normalize();
  return *this;
}

Dyadic Dyadic::scaled(int k) const {
  if (mantissa_.is_zero()) return *this;
  if (k >= 0) {
    auto e = static_cast<std::uint32_t>(k);
    if (exponent_ >= e) return Dyadic(mantissa_, exponent_ - e);
    return Dyadic(BigInt(mantissa_ << (e - exponent_)), 0);
  }
  return Dyadic(mantissa_, exponent_ + static_cast<std::uint32_t>(-k));
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int sa = a.mantissa_.sign();
  int sb = b.mantissa_.sign();
  if (sa != sb) return sa <=> sb;
  if (a.exponent_ == b.exponent_) {
    int c = a.mantissa_.compare(b.mantissa_);
    return c <=> 0;
  }
  int c = 0;
  if (a.exponent_ > b.exponent_) {
    c = a.mantissa_.compare(BigInt(b.mantissa_ << (a.exponent_ - b.exponent_)));
  } else {
    c = BigInt(a.mantissa_ << (b.exponent_ - a.exponent_)).compare(b.mantissa_);
  }
  return c <=> 0;
}

BigInt Dyadic::floor() const {
  if (exponent_ == 0) return mantissa_;
  if (mantissa_.sign() >= 0) return mantissa_ >> exponent_;
  // canonical mantissa is odd here, so the quotient is never exact
  BigInt mag = boost::multiprecision::abs(mantissa_);
  return -BigInt(mag >> exponent_) - 1;
}

BigInt Dyadic::ceil() const {
  if (exponent_ == 0) return mantissa_;
  return floor() + 1;
}

Rational Dyadic::to_rational() const {
  return Rational(mantissa_, BigInt(1) << exponent_);
}

double Dyadic::to_double() const {
  return std::ldexp(mantissa_.convert_to<double>(), -static_cast<int>(exponent_));
}

std::string Dyadic::str() const {
  if (exponent_ == 0) return mantissa_.str();
  return mantissa_.str() + "/2^" + std::to_string(exponent_);
}

std::size_t Dyadic::hash() const noexcept {
  std::size_t h = std::hash<std::uint32_t>{}(exponent_);
  // low limb plus sign is plenty for hashing; equal values share limbs
  auto low = static_cast<std::uint64_t>(
      static_cast<std::uint64_t>(boost::multiprecision::abs(mantissa_) & std::numeric_limits<std::uint64_t>::max()));
  h ^= std::hash<std::uint64_t>{}(low) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= static_cast<std::size_t>(mantissa_.sign() + 1) * 0x85ebca6bULL;
  return h;
}

Dyadic abs(const Dyadic& x) { return x.sign() < 0 ? -x : x; }

Dyadic midpoint(const Dyadic& a, const Dyadic& b) { return (a + b).half(); }

BigInt floor_ratio(const Dyadic& x, const Dyadic& step) {
  if (step.sign() <= 0) throw PreconditionError("lattice step must be positive");
  // x/step = (mx * 2^es) / (ms * 2^ex)
  BigInt num = x.mantissa();
  BigInt den = step.mantissa();
  if (step.exponent() >= x.exponent()) {
    num <<= (step.exponent() - x.exponent());
  } else {
    den <<= (x.exponent() - step.exponent());
  }
  BigInt q = num / den;  // truncates toward zero
  BigInt r = num - q * den;
  if (r != 0 && num.sign() < 0) q -= 1;
  return q;
}

BigInt ceil_ratio(const Dyadic& x, const Dyadic& step) {
  return -floor_ratio(-x, step);
}

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw PreconditionError("lattice index out of 64-bit range");
  }
  return value.convert_to<std::int64_t>();
}

std::strong_ordering compare(const Dyadic& a, const Rational& b) {
  Rational ra = a.to_rational();
  if (ra < b) return std::strong_ordering::less;
  if (ra > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Dyadic& x) { return os << x.str(); }

}  // namespace monovex
