#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "monovex/dyadic.hpp"

namespace monovex {

/// A point of R^n with exact dyadic coordinates.
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t n) : coords_(n) {}
  explicit Point(std::vector<Dyadic> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Dyadic> coords) : coords_(coords) {}

  std::size_t size() const noexcept { return coords_.size(); }
  const Dyadic& operator[](std::size_t i) const { return coords_[i]; }
  Dyadic& operator[](std::size_t i) { return coords_[i]; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }
  const std::vector<Dyadic>& coords() const noexcept { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) {
    return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                  b.coords_.begin(), b.coords_.end());
  }

  friend Point operator+(const Point& a, const Point& b);
  friend Point operator-(const Point& a, const Point& b);

  std::string str() const;

 private:
  std::vector<Dyadic> coords_;
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept;
};

/// Chebyshev distance max_i |p_i - q_i|.
Dyadic cheb(const Point& p, const Point& q);

/// Interval of R with independently open or closed ends. Never empty.
class Interval {
 public:
  Interval(Dyadic lo, Dyadic hi, bool lo_closed, bool hi_closed);

  static Interval closed(Dyadic lo, Dyadic hi) { return {std::move(lo), std::move(hi), true, true}; }
  static Interval open(Dyadic lo, Dyadic hi) { return {std::move(lo), std::move(hi), false, false}; }
  static Interval point(const Dyadic& x) { return {x, x, true, true}; }

  const Dyadic& lo() const noexcept { return lo_; }
  const Dyadic& hi() const noexcept { return hi_; }
  bool lo_closed() const noexcept { return lo_closed_; }
  bool hi_closed() const noexcept { return hi_closed_; }
  bool is_point() const noexcept { return lo_ == hi_; }
  bool is_closed() const noexcept { return lo_closed_ && hi_closed_; }

  bool contains(const Dyadic& x) const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Dyadic lo_;
  Dyadic hi_;
  bool lo_closed_;
  bool hi_closed_;
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);
Interval minkowski_sum(const Interval& a, const Interval& b);

/// Distance from a coordinate to an interval, with whether it is attained.
struct AxisDistance {
  Dyadic value;
  bool attained;
};
AxisDistance axis_distance(const Dyadic& x, const Interval& interval);

/// Product of intervals (an axis-aligned box, possibly degenerate or half-open).
class BoxRegion {
 public:
  BoxRegion() = default;
  explicit BoxRegion(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {}

  /// Closed box spanned by two corners (per-axis min/max).
  static BoxRegion closed(const Point& a, const Point& b);
  static BoxRegion point(const Point& p);

  std::size_t ambient_dim() const noexcept { return intervals_.size(); }
  /// Number of non-degenerate factors.
  std::size_t dimension() const noexcept;

  const Interval& operator[](std::size_t i) const { return intervals_[i]; }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }

  bool contains(const Point& p) const;
  bool is_closed() const noexcept;
  std::vector<Point> vertices() const;
  Point lower_corner() const;
  Point upper_corner() const;
  Point center() const;

  friend bool operator==(const BoxRegion&, const BoxRegion&) = default;

 private:
  std::vector<Interval> intervals_;
};

std::optional<BoxRegion> intersect(const BoxRegion& a, const BoxRegion& b);

/// Finite union of boxes in R^dim.
class SpanComplex {
 public:
  SpanComplex() = default;
  explicit SpanComplex(std::size_t dim) : dim_(dim) {}
  SpanComplex(std::size_t dim, std::vector<BoxRegion> boxes);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<BoxRegion>& boxes() const noexcept { return boxes_; }
  bool empty() const noexcept { return boxes_.empty(); }

  void add(BoxRegion box);
  bool is_closed() const noexcept;

  /// Drops exact duplicate boxes while keeping first-occurrence order.
  SpanComplex deduplicated() const;

  friend bool operator==(const SpanComplex&, const SpanComplex&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<BoxRegion> boxes_;
};

/// b-lattice origin + (a_1 k_1, ..., a_n k_n).
class Lattice {
 public:
  explicit Lattice(std::vector<Dyadic> steps);
  Lattice(std::vector<Dyadic> steps, Point origin);
  static Lattice uniform(std::size_t n, const Dyadic& step);

  std::size_t dim() const noexcept { return steps_.size(); }
  const std::vector<Dyadic>& steps() const noexcept { return steps_; }
  const Point& origin() const noexcept { return origin_; }

  Dyadic coordinate(std::size_t axis, std::int64_t k) const;
  Point point(const std::vector<std::int64_t>& k) const;
  /// The lattice (1/2^k) * this, sharing the origin.
  Lattice refined(int k) const;

 private:
  std::vector<Dyadic> steps_;
  Point origin_;
};

struct Distance {
  Dyadic value;
  /// False when the infimum is only approached through an open facet.
  bool attained;
};

bool contains(const SpanComplex& complex, const Point& p);
Distance cheb_distance(const Point& p, const BoxRegion& box);
Distance cheb_distance(const Point& p, const SpanComplex& complex);
BoxRegion bhull(const std::vector<Point>& points);
/// Projection onto the listed coordinate axes (0-based, kept in the given order).
SpanComplex project(const SpanComplex& complex, const std::vector<std::size_t>& axes);
SpanComplex minkowski_box(const SpanComplex& complex, const BoxRegion& r);
SpanComplex intersect_box(const SpanComplex& complex, const BoxRegion& r);
/// Elementary l-dimensional lattice boxes contained in the window.
std::vector<BoxRegion> elementary_boxes(const Lattice& lattice, std::size_t l, const BoxRegion& window);

/// True when the box is a subset of the union.
bool covers(const SpanComplex& complex, const BoxRegion& box);
/// True when every box of `inner` is a subset of the union `outer`.
bool is_subset(const SpanComplex& inner, const SpanComplex& outer);

/// A nearest point of a closed complex to p (ties broken by box order).
Point nearest_point(const SpanComplex& closed_complex, const Point& p);

/// Closed and open Chebyshev balls as boxes.
BoxRegion closed_ball(const Point& center, const Dyadic& radius);
BoxRegion open_ball(const Point& center, const Dyadic& radius);

}  // namespace monovex
