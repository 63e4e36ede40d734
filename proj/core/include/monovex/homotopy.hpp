#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "monovex/geometry.hpp"
#include "monovex/grid_extension.hpp"

namespace monovex {

/// The seed f on the lattice points of X x X x {0,1}: the nearest point of A
/// to x at t = 0 and to y at t = 1. X is the union of the cells of
/// (delta/2) Z^n meeting A. Materializes every pair, so only for small inputs.
LatticeSample seed_boundary(const SpanComplex& complex, const Dyadic& delta);

/// Sampled g_delta: the grid extension of the boundary seed over
/// X x X x [0,1], evaluated lazily at depth `depth`.
class PathField {
 public:
  PathField(SpanComplex complex, Dyadic delta, int depth);

  const SpanComplex& complex() const noexcept { return complex_; }
  const Dyadic& delta() const noexcept { return delta_; }
  int depth() const noexcept { return field_->depth(); }
  const ExtensionField& field() const noexcept { return *field_; }

  /// g_delta(x, y, t) for x, y in A and t in [0, 1]; off-lattice arguments
  /// snap down to the enclosing finest-level cell corner.
  Point operator()(const Point& x, const Point& y, const Dyadic& t) const;

  /// Samples evaluated so far.
  std::size_t evaluations() const;

 private:
  Key snap(const Point& x, const Point& y, const Dyadic& t) const;

  SpanComplex complex_;
  Dyadic delta_;
  Dyadic cell_;  // delta / 2
  std::unique_ptr<ExtensionField> field_;
};

PathField build_g_delta(const SpanComplex& complex, const Dyadic& delta, int depth);

struct GDeltaAudit {
  std::size_t samples = 0;
  std::size_t start_violations = 0;  // d(x, g(x,y,0)) > delta
  std::size_t end_violations = 0;    // d(y, g(x,y,1)) > delta
  std::size_t hull_violations = 0;   // d(g(x,y,t), bhull{x,y}) > delta
  std::size_t range_violations = 0;  // g(x,y,t) not in A
  Dyadic max_start, max_end, max_hull;

  std::size_t violations() const noexcept {
    return start_violations + end_violations + hull_violations + range_violations;
  }
};

/// Checks the three distance bounds at every (x, y, t) with x, y from
/// `points` and t on the grid k / 2^t_bits.
GDeltaAudit audit_g_delta(const PathField& g, const std::vector<Point>& points, int t_bits);

/// Cell representatives of the arrangement plus every box vertex, sorted.
std::vector<Point> default_samples(const SpanComplex& complex);

/// One interval [lo, hi] of C_k with exact ternary endpoints.
struct CantorInterval {
  Rational lo, hi;
};

struct CantorSchedule {
  /// levels[k - 1] holds C_k in increasing order.
  std::vector<std::vector<CantorInterval>> levels;
  /// deltas[k - 1] = delta_0 / 2^k.
  std::vector<Dyadic> deltas;
  Dyadic delta0;

  int depth() const noexcept { return static_cast<int>(levels.size()); }
  /// Sum of delta_j over j > k.
  Dyadic tail(int k) const;
};

CantorSchedule cantor_schedule(int levels, const Dyadic& delta0);

struct HomotopyParams {
  int extension_depth = 4;
  /// Samples each Cantor interval at lambda = j / 2^lambda_bits.
  int lambda_bits = 2;
  /// Domain sample; default_samples(A) when empty.
  std::vector<Point> points;
};

struct HomotopySample {
  std::size_t point;  // index into HomotopyField::points
  Rational t;
  Point value;
};

struct JunctionDefect {
  int level;
  std::size_t interval;
  bool right_end;
  std::size_t point;
  Dyadic defect;  // distance to the value at the matching earlier endpoint
  Dyadic bound;   // delta_k
};

struct HomotopyField {
  Point base;
  std::vector<Point> points;
  CantorSchedule schedule;
  /// Sorted by (point, t).
  std::vector<HomotopySample> samples;
  std::vector<JunctionDefect> junctions;

  std::size_t junction_violations() const;
  std::size_t range_violations(const SpanComplex& complex) const;
  /// Samples at t = 0 that differ from x plus samples at t = 1 that differ
  /// from the base point.
  std::size_t endpoint_violations() const;
};

/// phi(x, y, .) on the Cantor intervals up to the schedule's depth, for every
/// sampled x and fixed y.
HomotopyField cantor_homotopy(const SpanComplex& complex, const Point& y, const CantorSchedule& schedule,
                              const HomotopyParams& params = {});

/// G(x, t) = phi(x, x0, t).
HomotopyField contract_to_point(const SpanComplex& complex, const Point& x0, int levels, const Dyadic& delta0,
                                const HomotopyParams& params = {});

/// CSV rows "point,t,t_exact,x_1..x_n,phi_1..phi_n".
std::string homotopy_csv(const HomotopyField& field);

/// Each sampled trajectory t -> phi(x, x0, t) as a polyline.
std::vector<std::vector<Point>> homotopy_trajectories(const HomotopyField& field);

}  // namespace monovex
