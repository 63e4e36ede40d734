#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "monovex/geometry.hpp"
#include "monovex/monotone_path.hpp"

namespace monovex {

/// Integer coordinates of a lattice point or cell corner.
using Key = std::vector<std::int64_t>;

struct KeyHash {
  std::size_t operator()(const Key& key) const noexcept;
};

/// Finite union of closed unit cells of Z^d, each named by its lower corner.
class CellSet {
 public:
  explicit CellSet(std::size_t dim) : dim_(dim) {}

  /// All unit cells of the integer box [lo, hi] (corners lo <= c < hi).
  static CellSet block(const Key& lo, const Key& hi);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }

  void insert(const Key& corner);
  bool has(const Key& corner) const { return cells_.count(corner) != 0; }
  /// Cell corners in ascending lexicographic order.
  std::vector<Key> sorted() const;

  /// Whether the point key / 2^level lies in the union.
  bool contains(const Key& key, int level) const;

 private:
  std::size_t dim_;
  std::unordered_set<Key, KeyHash> cells_;
};

/// Product X = X_1 x ... x X_p of cell sets, in lattice units.
class ExtensionDomain {
 public:
  explicit ExtensionDomain(CellSet cells);
  explicit ExtensionDomain(std::vector<CellSet> factors);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<CellSet>& factors() const noexcept { return factors_; }
  bool contains(const Key& key, int level) const;
  /// Every unit cell of the product (only sensible for small domains).
  std::vector<Key> cells() const;

 private:
  std::vector<CellSet> factors_;
  std::size_t dim_ = 0;
};

/// Values of f on X ∩ Γ, keyed by lattice coordinates.
struct LatticeSample {
  Lattice lattice;
  ExtensionDomain domain;
  std::unordered_map<Key, Point, KeyHash> values;
};

/// X = [0,1]^m with values at its 2^m corners; bit i of a corner's index is
/// its coordinate i.
LatticeSample cube_seed(std::size_t m, const std::vector<Point>& corners);

/// Corners of the b-hull of a closed complex on the first m axes (remaining
/// axes follow the last bit), each replaced by its nearest point of the set.
std::vector<Point> snapped_hull_corners(const SpanComplex& closed_complex, std::size_t m);

/// Picks a point of A on a monotone path between the points attaining the
/// min and the max of coordinate `axis`, at the midpoint of that coordinate.
/// Ties go to the smallest index. Throws PreconditionError naming the pair
/// when no monotone path exists.
Point phi_r_i(const std::vector<Point>& points, std::size_t axis, const MonotoneRouter& router);
Point phi_r_i(const std::vector<Point>& points, std::size_t axis, const SpanComplex& complex);

/// f on X ∩ (1/2^depth)Γ, evaluated lazily and memoized.
///
/// Keys are in units of (1/2^depth)Γ. A key first appearing on level k+1 is
/// the center of a unique box of the level-k lattice; its value is phi over
/// that box's vertices on axis k mod n. Not thread-safe.
class ExtensionField {
 public:
  using Seed = std::function<Point(const Key&)>;

  ExtensionField(Lattice lattice, ExtensionDomain domain, Seed seed,
                 std::shared_ptr<const MonotoneRouter> router, int depth);

  static ExtensionField from_sample(const LatticeSample& sample, const SpanComplex& complex, int depth);

  int depth() const noexcept { return depth_; }
  std::size_t dim() const noexcept { return domain_.dim(); }
  std::size_t target_dim() const { return router_->complex().dim(); }
  const Lattice& lattice() const noexcept { return lattice_; }
  const ExtensionDomain& domain() const noexcept { return domain_; }
  const MonotoneRouter& router() const noexcept { return *router_; }

  static std::size_t rotation_axis(int level, std::size_t n) { return static_cast<std::size_t>(level) % n; }

  bool in_domain(const Key& key) const { return domain_.contains(key, depth_); }
  const Point& value(const Key& key) const;
  /// Smallest k such that the key lies on (1/2^k)Γ.
  int level_of(const Key& key) const;
  /// The domain point origin + step * key / 2^depth.
  Point point_of(const Key& key) const;

  /// All keys of X on the finest level, sorted; evaluates none of them.
  std::vector<Key> sample_keys() const;
  /// Evaluates every sample.
  void materialize() const;
  /// Number of values computed or seeded so far.
  std::size_t evaluated() const noexcept { return memo_.size(); }

  /// Same values, one level finer.
  ExtensionField refined() const;

  /// Replaces a value; for building deliberately broken fields in tests.
  void override_value(const Key& key, Point value);

 private:
  Point compute(const Key& key) const;

  Lattice lattice_;
  ExtensionDomain domain_;
  Seed seed_;
  std::shared_ptr<const MonotoneRouter> router_;
  int depth_;
  mutable std::unordered_map<Key, Point, KeyHash> memo_;
};

ExtensionField refine_once(const ExtensionField& field);
ExtensionField extend(const LatticeSample& seed, int depth, const SpanComplex& complex);

struct PropertyViolation {
  int level;
  Key anchor;          // lower corner of the box, level-k units
  std::uint32_t mask;  // bit i set when the box is extended along axis i
  Key sample;          // finest-level key outside the hull
};

struct PropertyReport {
  std::size_t boxes_checked = 0;
  std::size_t samples_checked = 0;
  std::vector<PropertyViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// For every level-k box R ⊆ X of dimension >= 1 and every sample q in R,
/// checks f(q) ∈ bhull(f(vert R)).
PropertyReport check_property_P(const ExtensionField& field);

struct HolderLevel {
  int level = 0;
  std::size_t rotation_axis = 0;
  std::size_t cells = 0;
  std::vector<Dyadic> max_M;  // per target axis, over level-k cells
  std::vector<Dyadic> max_N;
  std::size_t halving_violations = 0;  // 2 N_i(R) > M_i(R) on the rotation axis
  std::size_t growth_violations = 0;   // N_i(R) > M_i(R) elsewhere
};

struct HolderReport {
  std::vector<HolderLevel> levels;
  /// log2(S_k / S_{k+n}) / n where S_k is the largest spread on level k;
  /// unset when either spread is zero.
  std::vector<std::optional<double>> exponent_estimates;

  std::size_t violations() const;
};

HolderReport holder_report(const ExtensionField& field);

/// CSV rows "level,x_1..x_m,f_1..f_n" for every sample, as decimals.
std::string field_csv(const ExtensionField& field);

}  // namespace monovex
