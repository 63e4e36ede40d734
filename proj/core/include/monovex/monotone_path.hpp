#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "monovex/arrangement.hpp"
#include "monovex/geometry.hpp"

namespace monovex {

/// Per-coordinate direction of a path: -1, 0 or +1.
struct SignPattern {
  std::vector<int> signs;

  static SignPattern between(const Point& x, const Point& y);
  friend bool operator==(const SignPattern&, const SignPattern&) = default;
};

/// Piecewise-linear path through its waypoints.
struct MonotonePath {
  std::vector<Point> waypoints;
  SignPattern direction;

  static MonotonePath through(std::vector<Point> waypoints);
  const Point& front() const { return waypoints.front(); }
  const Point& back() const { return waypoints.back(); }
};

struct MonovexVerdict {
  bool is_monovex = true;
  /// A pair with no monotone path between them (set iff not monovex).
  std::optional<std::pair<Point, Point>> witness;
};

/// Exact check that the closed segment [a, b] lies in the union.
bool segment_in_complex(const Point& a, const Point& b, const SpanComplex& complex);

/// Monotonicity in the declared direction plus exact containment of every
/// waypoint and segment.
bool validate_monotone(const MonotonePath& path, const SpanComplex& complex);

/// Monotone reachability over a fixed complex; builds the arrangement once.
///
/// Paths move through arrangement cells; each step goes between a cell and a
/// face of it (in either order), and every coordinate's cell index moves
/// toward the target only. Among all admissible cell walks the
/// lexicographically smallest one is realized, so outputs are deterministic.
/// Every open segment of a realized path lies inside a single cell.
class MonotoneRouter {
 public:
  explicit MonotoneRouter(SpanComplex complex);

  const SpanComplex& complex() const noexcept { return complex_; }
  const Arrangement& arrangement() const noexcept { return arrangement_; }

  std::optional<MonotonePath> route(const Point& x, const Point& y) const;
  /// Cell walk between two member cells, or nullopt.
  std::optional<std::vector<std::size_t>> cell_walk(std::size_t from, std::size_t to) const;

 private:
  MonotonePath realize(const std::vector<std::size_t>& cells, const Point& x, const Point& y) const;

  SpanComplex complex_;
  Arrangement arrangement_;
};

std::optional<MonotonePath> monotone_reachable(const SpanComplex& complex, const Point& x, const Point& y);

/// Decides monovexity exactly on the cell level: every ordered pair of member
/// cells (their representatives and corner points included) must be joined by
/// a monotone cell walk.
MonovexVerdict is_monovex(const SpanComplex& complex);

/// Lifts a monotone path gamma' (from x' to y' in A) to a monotone path in
/// A + r from x' + a' to y' + b'.
MonotonePath lift_minkowski_path(const MonotonePath& gamma_prime, const Point& a_prime,
                                 const Point& b_prime, const BoxRegion& r);

}  // namespace monovex
