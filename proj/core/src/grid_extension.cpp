#include "monovex/grid_extension.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/container_hash/hash.hpp>

#include "monovex/errors.hpp"

namespace monovex {

namespace {

std::int64_t floor_shift(std::int64_t v, int level) {
  // floor(v / 2^level) for negative v as well
  return v >> level;
}

bool divisible(std::int64_t v, int level) { return (v & ((std::int64_t{1} << level) - 1)) == 0; }

// Calls visit(key) for every key in the integer box [lo, hi].
template <class Visit>
void for_each_in_block(const Key& lo, const Key& hi, Visit&& visit) {
  Key k = lo;
  const std::size_t n = lo.size();
  if (n == 0) {
    visit(k);
    return;
  }
  while (true) {
    visit(k);
    std::size_t axis = n;
    while (axis-- > 0) {
      if (++k[axis] <= hi[axis]) break;
      k[axis] = lo[axis];
    }
    if (axis == static_cast<std::size_t>(-1)) return;
  }
}

std::string describe_pair(const Point& a, const Point& b) { return a.str() + " and " + b.str(); }

// Vertex keys of the box with the given anchor and mask at unit u, in
// lexicographic order.
std::vector<Key> box_vertices(const Key& anchor, std::uint32_t mask, std::int64_t u) {
  std::vector<std::size_t> axes;
  for (std::size_t i = 0; i < anchor.size(); ++i) {
    if (mask >> i & 1) axes.push_back(i);
  }
  std::vector<Key> out;
  out.reserve(std::size_t{1} << axes.size());
  for (std::uint32_t bits = 0; bits < (1u << axes.size()); ++bits) {
    Key v(anchor.size());
    for (std::size_t i = 0; i < anchor.size(); ++i) v[i] = anchor[i] * u;
    for (std::size_t j = 0; j < axes.size(); ++j) {
      if (bits >> (axes.size() - 1 - j) & 1) v[axes[j]] += u;
    }
    out.push_back(std::move(v));
  }
  return out;
}

// Lower corners of the level-k cells of the domain, in level-k units.
std::vector<Key> level_cells(const ExtensionDomain& domain, int level) {
  std::vector<Key> out;
  const std::int64_t scale = std::int64_t{1} << level;
  for (const auto& c : domain.cells()) {
    Key lo(c.size()), hi(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      lo[i] = c[i] * scale;
      hi[i] = lo[i] + scale - 1;
    }
    for_each_in_block(lo, hi, [&](const Key& k) { out.push_back(k); });
  }
  return out;
}

}  // namespace

std::size_t KeyHash::operator()(const Key& key) const noexcept { return boost::hash_range(key.begin(), key.end()); }

// ------------------------------------------------------------------ CellSet

CellSet CellSet::block(const Key& lo, const Key& hi) {
  if (lo.size() != hi.size()) throw DimensionError("cell block: corner dimensions differ");
  CellSet s(lo.size());
  Key top(hi.size());
  for (std::size_t i = 0; i < hi.size(); ++i) {
    if (hi[i] <= lo[i]) throw PreconditionError("cell block: empty range");
    top[i] = hi[i] - 1;
  }
  for_each_in_block(lo, top, [&](const Key& k) { s.insert(k); });
  return s;
}

void CellSet::insert(const Key& corner) {
  if (corner.size() != dim_) throw DimensionError("cell set: corner dimension mismatch");
  cells_.insert(corner);
}

std::vector<Key> CellSet::sorted() const {
  std::vector<Key> out(cells_.begin(), cells_.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool CellSet::contains(const Key& key, int level) const {
  if (key.size() != dim_) throw DimensionError("cell set: key dimension mismatch");
  // candidate cells: floor(key / 2^level), and one less on axes where the key
  // sits on a cell boundary
  Key base(dim_);
  std::uint32_t boundary = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    base[i] = floor_shift(key[i], level);
    if (divisible(key[i], level)) boundary |= 1u << i;
  }
  for (std::uint32_t sub = boundary;; sub = (sub - 1) & boundary) {
    Key c = base;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sub >> i & 1) --c[i];
    }
    if (has(c)) return true;
    if (sub == 0) break;
  }
  return false;
}

// ---------------------------------------------------------- ExtensionDomain

ExtensionDomain::ExtensionDomain(CellSet cells) : ExtensionDomain(std::vector<CellSet>{std::move(cells)}) {}

ExtensionDomain::ExtensionDomain(std::vector<CellSet> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) dim_ += f.dim();
}

bool ExtensionDomain::contains(const Key& key, int level) const {
  if (key.size() != dim_) throw DimensionError("extension domain: key dimension mismatch");
  std::size_t offset = 0;
  for (const auto& f : factors_) {
    Key part(key.begin() + static_cast<std::ptrdiff_t>(offset),
             key.begin() + static_cast<std::ptrdiff_t>(offset + f.dim()));
    if (!f.contains(part, level)) return false;
    offset += f.dim();
  }
  return true;
}

std::vector<Key> ExtensionDomain::cells() const {
  std::vector<Key> out{Key{}};
  for (const auto& f : factors_) {
    std::vector<Key> next;
    auto part = f.sorted();
    next.reserve(out.size() * part.size());
    for (const auto& prefix : out) {
      for (const auto& c : part) {
        Key k = prefix;
        k.insert(k.end(), c.begin(), c.end());
        next.push_back(std::move(k));
      }
    }
    out = std::move(next);
  }
  return out;
}

// -------------------------------------------------------------------- phi

Point phi_r_i(const std::vector<Point>& points, std::size_t axis, const MonotoneRouter& router) {
  if (points.empty()) throw PreconditionError("phi: no points");
  std::size_t jmin = 0, jmax = 0;
  for (std::size_t j = 1; j < points.size(); ++j) {
    if (points[j][axis] < points[jmin][axis]) jmin = j;
    if (points[j][axis] > points[jmax][axis]) jmax = j;
  }
  const Point& lo = points[jmin];
  const Point& hi = points[jmax];
  if (lo[axis] == hi[axis]) return lo;
  const Dyadic target = midpoint(lo[axis], hi[axis]);
  auto path = router.route(lo, hi);
  if (!path) throw PreconditionError("phi: no monotone path between " + describe_pair(lo, hi));
  const auto& w = path->waypoints;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    const Dyadic& a = w[k][axis];
    const Dyadic& b = w[k + 1][axis];
    if (a == target) return w[k];
    if (b == target) return w[k + 1];
    if (a < target && target < b) {
      // the open segment lies in one cell of the arrangement, so any point
      // strictly inside it (per coordinate) stays in A
      Point c(w[k].size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = midpoint(w[k][i], w[k + 1][i]);
      c[axis] = target;
      if (!contains(router.complex(), c)) throw InvariantError("phi: crossing point left the set");
      return c;
    }
  }
  throw InvariantError("phi: monotone path never crosses the midpoint");
}

LatticeSample cube_seed(std::size_t m, const std::vector<Point>& corners) {
  if (m == 0 || m > 16) throw PreconditionError("cube_seed: domain dimension must be in [1, 16]");
  if (corners.size() != (std::size_t{1} << m)) throw DimensionError("cube_seed: need 2^m corner values");
  LatticeSample sample{Lattice::uniform(m, Dyadic(1)), ExtensionDomain(CellSet::block(Key(m, 0), Key(m, 1))), {}};
  for (std::size_t c = 0; c < corners.size(); ++c) {
    Key k(m);
    for (std::size_t i = 0; i < m; ++i) k[i] = static_cast<std::int64_t>(c >> i & 1);
    sample.values.emplace(std::move(k), corners[c]);
  }
  return sample;
}

std::vector<Point> snapped_hull_corners(const SpanComplex& closed_complex, std::size_t m) {
  if (closed_complex.empty()) throw PreconditionError("snapped_hull_corners: empty set");
  const std::size_t n = closed_complex.dim();
  std::vector<Point> pts;
  for (const auto& b : closed_complex.boxes()) {
    pts.push_back(b.lower_corner());
    pts.push_back(b.upper_corner());
  }
  BoxRegion hull = bhull(pts);
  std::vector<Point> out;
  for (std::size_t c = 0; c < (std::size_t{1} << m); ++c) {
    Point p(n);
    for (std::size_t i = 0; i < n; ++i) {
      bool high = (c >> std::min(i, m - 1)) & 1;
      p[i] = high ? hull[i].hi() : hull[i].lo();
    }
    out.push_back(nearest_point(closed_complex, p));
  }
  return out;
}

Point phi_r_i(const std::vector<Point>& points, std::size_t axis, const SpanComplex& complex) {
  return phi_r_i(points, axis, MonotoneRouter(complex));
}

// ----------------------------------------------------------- ExtensionField

ExtensionField::ExtensionField(Lattice lattice, ExtensionDomain domain, Seed seed,
                               std::shared_ptr<const MonotoneRouter> router, int depth)
    : lattice_(std::move(lattice)),
      domain_(std::move(domain)),
      seed_(std::move(seed)),
      router_(std::move(router)),
      depth_(depth) {
  if (depth_ < 0 || depth_ > 40) throw PreconditionError("extension depth must be in [0, 40]");
  if (lattice_.dim() != domain_.dim()) throw DimensionError("extension: lattice and domain dimensions differ");
  if (!router_ || router_->complex().dim() == 0) throw PreconditionError("extension: empty target");
}

ExtensionField ExtensionField::from_sample(const LatticeSample& sample, const SpanComplex& complex, int depth) {
  auto values = std::make_shared<std::unordered_map<Key, Point, KeyHash>>(sample.values);
  for (const auto& [k, v] : *values) {
    if (!sample.domain.contains(k, 0)) throw PreconditionError("seed key outside the domain");
    if (v.size() != complex.dim()) throw DimensionError("seed value dimension mismatch");
    if (!contains(complex, v)) throw PreconditionError("seed value " + v.str() + " not in A");
  }
  Seed seed = [values](const Key& k) -> Point {
    auto it = values->find(k);
    if (it == values->end()) throw PreconditionError("no seed value at a lattice point of X");
    return it->second;
  };
  return ExtensionField(sample.lattice, sample.domain, std::move(seed),
                        std::make_shared<const MonotoneRouter>(complex), depth);
}

int ExtensionField::level_of(const Key& key) const {
  for (int level = 0; level < depth_; ++level) {
    bool on = std::all_of(key.begin(), key.end(), [&](std::int64_t v) { return divisible(v, depth_ - level); });
    if (on) return level;
  }
  return depth_;
}

Point ExtensionField::point_of(const Key& key) const {
  Point p(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) {
    p[i] = lattice_.origin()[i] + lattice_.steps()[i] * Dyadic(static_cast<long long>(key[i])).scaled(-depth_);
  }
  return p;
}

const Point& ExtensionField::value(const Key& key) const {
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  if (!in_domain(key)) throw PreconditionError("extension: sample outside the domain");
  Point v = compute(key);
  return memo_.emplace(key, std::move(v)).first->second;
}

Point ExtensionField::compute(const Key& key) const {
  const int level = level_of(key);
  if (level == 0) {
    Key coarse(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) coarse[i] = key[i] >> depth_;
    Point v = seed_(coarse);
    if (v.size() != target_dim()) throw DimensionError("seed value dimension mismatch");
    return v;
  }
  // center of a box of the level-(level-1) lattice
  const std::int64_t u = std::int64_t{1} << (depth_ - level);
  Key anchor(key.size());
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < key.size(); ++i) {
    std::int64_t q = key[i] / u;
    if (q % 2 != 0) {
      mask |= 1u << i;
      anchor[i] = (q - 1) / 2;
    } else {
      anchor[i] = q / 2;
    }
  }
  auto keys = box_vertices(anchor, mask, 2 * u);
  std::vector<Point> vertices;
  vertices.reserve(keys.size());
  for (const auto& k : keys) vertices.push_back(value(k));
  return phi_r_i(vertices, rotation_axis(level - 1, target_dim()), *router_);
}

std::vector<Key> ExtensionField::sample_keys() const {
  std::unordered_set<Key, KeyHash> seen;
  std::vector<Key> out;
  const std::int64_t scale = std::int64_t{1} << depth_;
  for (const auto& c : domain_.cells()) {
    Key lo(c.size()), hi(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      lo[i] = c[i] * scale;
      hi[i] = lo[i] + scale;
    }
    for_each_in_block(lo, hi, [&](const Key& k) {
      if (seen.insert(k).second) out.push_back(k);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

void ExtensionField::materialize() const {
  for (const auto& k : sample_keys()) value(k);
}

ExtensionField ExtensionField::refined() const {
  ExtensionField next(lattice_, domain_, seed_, router_, depth_ + 1);
  for (const auto& [k, v] : memo_) {
    Key doubled(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) doubled[i] = 2 * k[i];
    next.memo_.emplace(std::move(doubled), v);
  }
  return next;
}

void ExtensionField::override_value(const Key& key, Point value) {
  if (!in_domain(key)) throw PreconditionError("extension: override outside the domain");
  memo_[key] = std::move(value);
}

ExtensionField refine_once(const ExtensionField& field) {
  ExtensionField next = field.refined();
  next.materialize();
  return next;
}

ExtensionField extend(const LatticeSample& seed, int depth, const SpanComplex& complex) {
  ExtensionField field = ExtensionField::from_sample(seed, complex, depth);
  field.materialize();
  return field;
}

// ------------------------------------------------------------ Property (P)

PropertyReport check_property_P(const ExtensionField& field) {
  PropertyReport report;
  const std::size_t m = field.dim();
  const std::size_t n = field.target_dim();
  const int depth = field.depth();
  for (int level = 0; level < depth; ++level) {
    const std::int64_t u = std::int64_t{1} << (depth - level);
    std::unordered_set<Key, KeyHash> seen;
    for (const auto& cell : level_cells(field.domain(), level)) {
      for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        // faces of the cell extended along `mask`, fixed at 0 or 1 elsewhere
        std::uint32_t fixed = ((1u << m) - 1) & ~mask;
        for (std::uint32_t side = fixed;; side = (side - 1) & fixed) {
          Key anchor = cell;
          for (std::size_t i = 0; i < m; ++i) {
            if (side >> i & 1) ++anchor[i];
          }
          Key tag = anchor;
          tag.push_back(mask);
          if (seen.insert(tag).second) {
            ++report.boxes_checked;
            std::vector<Point> corner_values;
            for (const auto& v : box_vertices(anchor, mask, u)) corner_values.push_back(field.value(v));
            BoxRegion hull = bhull(corner_values);
            Key lo(m), hi(m);
            for (std::size_t i = 0; i < m; ++i) {
              lo[i] = anchor[i] * u;
              hi[i] = (mask >> i & 1) ? lo[i] + u : lo[i];
            }
            for_each_in_block(lo, hi, [&](const Key& q) {
              ++report.samples_checked;
              const Point& fq = field.value(q);
              bool inside = true;
              for (std::size_t i = 0; i < n && inside; ++i) inside = hull[i].contains(fq[i]);
              if (!inside) report.violations.push_back({level, anchor, mask, q});
            });
          }
          if (side == 0) break;
        }
      }
    }
  }
  return report;
}

// ------------------------------------------------------------ Hölder table

std::size_t HolderReport::violations() const {
  std::size_t total = 0;
  for (const auto& l : levels) total += l.halving_violations + l.growth_violations;
  return total;
}

HolderReport holder_report(const ExtensionField& field) {
  HolderReport report;
  const std::size_t m = field.dim();
  const std::size_t n = field.target_dim();
  const int depth = field.depth();
  const std::uint32_t full = (1u << m) - 1;

  auto spreads = [&](const Key& corner, std::int64_t u) {
    std::vector<Dyadic> lo, hi;
    for (const auto& v : box_vertices(corner, full, u)) {
      const Point& p = field.value(v);
      if (lo.empty()) {
        lo.assign(p.begin(), p.end());
        hi = lo;
        continue;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (p[i] < lo[i]) lo[i] = p[i];
        if (p[i] > hi[i]) hi[i] = p[i];
      }
    }
    std::vector<Dyadic> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = hi[i] - lo[i];
    return out;
  };

  std::vector<Dyadic> largest;  // S_k
  for (int level = 0; level < depth; ++level) {
    HolderLevel row;
    row.level = level;
    row.rotation_axis = ExtensionField::rotation_axis(level, n);
    row.max_M.assign(n, Dyadic(0));
    row.max_N.assign(n, Dyadic(0));
    const std::int64_t u = std::int64_t{1} << (depth - level);
    for (const auto& cell : level_cells(field.domain(), level)) {
      ++row.cells;
      auto M = spreads(cell, u);
      std::vector<Dyadic> N(n, Dyadic(0));
      Key sub_lo(m), sub_hi(m);
      for (std::size_t i = 0; i < m; ++i) {
        sub_lo[i] = 2 * cell[i];
        sub_hi[i] = sub_lo[i] + 1;
      }
      for_each_in_block(sub_lo, sub_hi, [&](const Key& sub) {
        auto s = spreads(sub, u / 2);
        for (std::size_t i = 0; i < n; ++i) N[i] = max(N[i], s[i]);
      });
      for (std::size_t i = 0; i < n; ++i) {
        row.max_M[i] = max(row.max_M[i], M[i]);
        row.max_N[i] = max(row.max_N[i], N[i]);
        if (i == row.rotation_axis) {
          if (N[i].scaled(1) > M[i]) ++row.halving_violations;
        } else if (N[i] > M[i]) {
          ++row.growth_violations;
        }
      }
    }
    Dyadic s(0);
    for (const auto& v : row.max_M) s = max(s, v);
    largest.push_back(s);
    if (level + 1 == depth) {
      Dyadic last(0);
      for (const auto& v : row.max_N) last = max(last, v);
      largest.push_back(last);
    }
    report.levels.push_back(std::move(row));
  }
  for (std::size_t k = 0; k + n < largest.size(); ++k) {
    if (largest[k].is_zero() || largest[k + n].is_zero()) {
      report.exponent_estimates.emplace_back();
    } else {
      double ratio = largest[k].to_double() / largest[k + n].to_double();
      report.exponent_estimates.emplace_back(std::log2(ratio) / static_cast<double>(n));
    }
  }
  return report;
}

std::string field_csv(const ExtensionField& field) {
  std::ostringstream out;
  out.precision(17);
  out << "level";
  for (std::size_t i = 0; i < field.dim(); ++i) out << ",x" << i + 1;
  for (std::size_t i = 0; i < field.target_dim(); ++i) out << ",f" << i + 1;
  out << "\n";
  for (const auto& k : field.sample_keys()) {
    out << field.level_of(k);
    for (const auto& c : field.point_of(k)) out << "," << c.to_double();
    for (const auto& c : field.value(k)) out << "," << c.to_double();
    out << "\n";
  }
  return out.str();
}

}  // namespace monovex
