#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monovex/geometry.hpp"
#include "monovex/monotone_path.hpp"

namespace monovex {

/// Scales at a query point x outside A.
struct Scales {
  Dyadic d;        // d(x, A)
  Rational eps;    // d / 10
  Dyadic eta;      // largest 2^-k (k >= 0) with 2^-k <= eps / 10
  Dyadic delta;    // local radius
  bool delta_verified = false;
  std::size_t probes_checked = 0;
};

/// Largest 2^-k, k >= 0, with 100 * 2^-k <= d.
Dyadic eta_for(const Dyadic& d);

/// F(x) = A ∩ closed ball(x, d(x, A)). Throws PreconditionError when A is not
/// closed or x is in A.
SpanComplex nearest_point_map(const SpanComplex& a, const Point& x);

struct ThickenedMap {
  SpanComplex f;
  /// Union of the closed eta-lattice cells meeting F, one snapped box per box of F.
  SpanComplex f1;
  Dyadic d;
  Dyadic eta;
};

ThickenedMap thicken(const SpanComplex& a, const Point& x);

/// F1 of a point given its distance and eta.
SpanComplex snap_to_cells(const SpanComplex& f, const Dyadic& eta);

/// Whether some closed cell [k eta, (k+1) eta]^n contains both points.
bool share_cell(const Point& p, const Point& q, const Dyadic& eta);

/// Monotone path in F1 from y to z, built from a monotone path gamma' in F
/// from y' to z' (y and y' sharing an eta-cell, likewise z and z'): a straight
/// piece to the clamped start, gamma' clamped coordinatewise, and a straight
/// piece to z. Throws PreconditionError if the cells are not shared and
/// InvariantError if the result fails validation.
MonotonePath repair_path(const SpanComplex& f1, const Dyadic& eta, const Point& y, const Point& z,
                         const Point& y_prime, const Point& z_prime, const MonotonePath& gamma_prime);

struct LocalRadius {
  Dyadic delta;
  bool verified = false;  // probe-verified, never proven
  std::size_t probes_checked = 0;
};

/// Largest eta/2^j (1 <= j <= max_halvings) such that every probe y in the open
/// ball B(x, delta) has F1(y) ⊆ F1(x) and eta(y) <= eta(x). Falls back to the
/// smallest candidate, unverified.
LocalRadius local_radius(const SpanComplex& a, const Point& x, std::size_t probes, int max_halvings = 8);

/// Deterministic probe points of the open ball B(x, radius).
std::vector<Point> ball_probes(const Point& x, const Dyadic& radius, std::size_t count);

/// Everything computed for one sample point y.
struct QueryEntry {
  Point y;
  Scales scales;
  ThickenedMap map;
};

QueryEntry query(const SpanComplex& a, const Point& y, std::size_t probes);

struct Neighborhood {
  /// Union of F1(y) + (-eta(y), eta(y))^n over y in Q(x); open.
  SpanComplex g;
  /// Members of Q(x), in sample order.
  std::vector<QueryEntry> members;
  /// F1 containment is total on Q(x).
  bool q_order_ok = true;
  std::vector<std::string> warnings;
};

/// Q(x) = {y in sample : d(x, y) < delta_y / 2}.
Neighborhood neighborhood_G(const Point& x, const std::vector<QueryEntry>& sample);
Neighborhood neighborhood_G(const SpanComplex& a, const Point& x, const std::vector<Point>& sample,
                            std::size_t probes = 200);

/// Coordinate-inductive midpoint selection from a union whose axis
/// projections and slices are intervals. Throws InvariantError otherwise.
Point select_g(const SpanComplex& g);

struct RetractionParams {
  std::size_t probes = 200;
  /// Adds x ± (delta_x / 4) e_i to every sample set.
  bool stencil = true;
};

/// The sample set used for a step at x.
std::vector<QueryEntry> step_sample(const SpanComplex& a, const Point& x, const RetractionParams& params);

struct StepAudit {
  Point x;
  Point g;
  Dyadic d;       // d(x, A)
  Dyadic d_next;  // d(g(x), A)
  std::size_t q_size = 0;
  bool delta_verified = false;
  bool q_order_ok = true;
  bool g_in_G = false;
  bool f_in_G = false;
  bool G_in_ball = false;  // G(x) ⊆ B(x, 4/3 d)
  bool ball_ok = false;    // d(g, x) <= 4/3 d
  bool decay_ok = false;   // d(g, A) <= d / 9
  /// (x, g) within eps(y) (and within 3 eps(y) / 10) of (y, z') with z' in F(y).
  bool within_eps = false;
  bool within_three_tenths = false;
  std::optional<Point> witness_x;
  std::optional<Point> witness_z;

  bool ok() const noexcept {
    return g_in_G && f_in_G && G_in_ball && ball_ok && decay_ok && within_eps && within_three_tenths;
  }
};

StepAudit retraction_step(const SpanComplex& a, const Point& x, const RetractionParams& params = {});

struct Trajectory {
  Point start;
  Dyadic d0;
  /// points[k] = g^k(x), distances[k] = d(g^k(x), A).
  std::vector<Point> points;
  std::vector<Dyadic> distances;
  std::vector<StepAudit> steps;
  /// distances[k] * 9^k <= d0.
  std::vector<bool> decay_ok;
  bool reached_set = false;

  std::size_t violations() const;
};

/// g(x), g^2(x), ..., g^K(x); stops early once a point lands in A.
Trajectory iterate_retraction(const SpanComplex& a, const Point& x, std::size_t iterations,
                              const RetractionParams& params = {});

/// "k,distance,bound,ok" rows, decimals.
std::string decay_csv(const Trajectory& trajectory);

struct ContinuityEstimate {
  double modulus = 0.0;  // max d(g(x), g(y)) / d(x, y) over the probes
  std::size_t samples = 0;
};

ContinuityEstimate measure_continuity(const SpanComplex& a, const Point& x, const Dyadic& radius, std::size_t count,
                                      const RetractionParams& params = {});

}  // namespace monovex
