#include "monovex/geometry.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "monovex/errors.hpp"

namespace monovex {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

// Per-axis sample coordinates, one per arrangement cell inside `interval`
// induced by `cuts`.
std::vector<Dyadic> cell_samples(const Interval& interval, std::vector<Dyadic> cuts) {
  cuts.push_back(interval.lo());
  cuts.push_back(interval.hi());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Dyadic> samples;
  for (std::size_t j = 0; j < cuts.size(); ++j) {
    const Dyadic& c = cuts[j];
    if (interval.contains(c)) samples.push_back(c);
    if (j + 1 < cuts.size()) {
      Dyadic m = midpoint(c, cuts[j + 1]);
      if (interval.contains(m)) samples.push_back(m);
    }
  }
  return samples;
}

}  // namespace

Point operator+(const Point& a, const Point& b) {
  require_same_dim(a.size(), b.size(), "point sum");
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  require_same_dim(a.size(), b.size(), "point difference");
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::string Point::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ", ";
    s += coords_[i].str();
  }
  return s + ")";
}

std::size_t PointHash::operator()(const Point& p) const noexcept {
  std::size_t h = p.size();
  for (const auto& c : p) h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Dyadic cheb(const Point& p, const Point& q) {
  require_same_dim(p.size(), q.size(), "cheb");
  Dyadic d;
  for (std::size_t i = 0; i < p.size(); ++i) d = max(d, abs(p[i] - q[i]));
  return d;
}

// ---------------------------------------------------------------- Interval

Interval::Interval(Dyadic lo, Dyadic hi, bool lo_closed, bool hi_closed)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_closed_(lo_closed), hi_closed_(hi_closed) {
  if (hi_ < lo_) throw PreconditionError("interval with lo > hi");
  if (lo_ == hi_ && !(lo_closed_ && hi_closed_)) {
    throw PreconditionError("empty degenerate interval");
  }
}

bool Interval::contains(const Dyadic& x) const {
  auto c_lo = x <=> lo_;
  if (c_lo < 0 || (c_lo == 0 && !lo_closed_)) return false;
  auto c_hi = x <=> hi_;
  return !(c_hi > 0 || (c_hi == 0 && !hi_closed_));
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Dyadic lo;
  bool lo_closed = false;
  if (a.lo() > b.lo()) {
    lo = a.lo();
    lo_closed = a.lo_closed();
  } else if (b.lo() > a.lo()) {
    lo = b.lo();
    lo_closed = b.lo_closed();
  } else {
    lo = a.lo();
    lo_closed = a.lo_closed() && b.lo_closed();
  }
  Dyadic hi;
  bool hi_closed = false;
  if (a.hi() < b.hi()) {
    hi = a.hi();
    hi_closed = a.hi_closed();
  } else if (b.hi() < a.hi()) {
    hi = b.hi();
    hi_closed = b.hi_closed();
  } else {
    hi = a.hi();
    hi_closed = a.hi_closed() && b.hi_closed();
  }
  if (hi < lo) return std::nullopt;
  if (lo == hi && !(lo_closed && hi_closed)) return std::nullopt;
  return Interval(std::move(lo), std::move(hi), lo_closed, hi_closed);
}

Interval minkowski_sum(const Interval& a, const Interval& b) {
  return Interval(a.lo() + b.lo(), a.hi() + b.hi(), a.lo_closed() && b.lo_closed(),
                  a.hi_closed() && b.hi_closed());
}

AxisDistance axis_distance(const Dyadic& x, const Interval& interval) {
  if (x < interval.lo()) return {interval.lo() - x, interval.lo_closed()};
  if (x > interval.hi()) return {x - interval.hi(), interval.hi_closed()};
  return {Dyadic(0), interval.contains(x)};
}

// --------------------------------------------------------------- BoxRegion

BoxRegion BoxRegion::closed(const Point& a, const Point& b) {
  require_same_dim(a.size(), b.size(), "box corners");
  std::vector<Interval> iv;
  iv.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) iv.push_back(Interval::closed(min(a[i], b[i]), max(a[i], b[i])));
  return BoxRegion(std::move(iv));
}

BoxRegion BoxRegion::point(const Point& p) { return closed(p, p); }

std::size_t BoxRegion::dimension() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(intervals_.begin(), intervals_.end(), [](const Interval& i) { return !i.is_point(); }));
}

bool BoxRegion::contains(const Point& p) const {
  require_same_dim(p.size(), intervals_.size(), "box membership");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!intervals_[i].contains(p[i])) return false;
  }
  return true;
}

bool BoxRegion::is_closed() const noexcept {
  return std::all_of(intervals_.begin(), intervals_.end(), [](const Interval& i) { return i.is_closed(); });
}

std::vector<Point> BoxRegion::vertices() const {
  std::vector<Point> out{Point(intervals_.size())};
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const Interval& iv = intervals_[i];
    if (iv.is_point()) {
      for (auto& p : out) p[i] = iv.lo();
      continue;
    }
    std::vector<Point> next;
    next.reserve(out.size() * 2);
    for (const auto& p : out) {
      Point lo = p;
      lo[i] = iv.lo();
      Point hi = p;
      hi[i] = iv.hi();
      next.push_back(std::move(lo));
      next.push_back(std::move(hi));
    }
    out = std::move(next);
  }
  return out;
}

Point BoxRegion::lower_corner() const {
  Point p(intervals_.size());
  for (std::size_t i = 0; i < intervals_.size(); ++i) p[i] = intervals_[i].lo();
  return p;
}

Point BoxRegion::upper_corner() const {
  Point p(intervals_.size());
  for (std::size_t i = 0; i < intervals_.size(); ++i) p[i] = intervals_[i].hi();
  return p;
}

Point BoxRegion::center() const {
  Point p(intervals_.size());
  for (std::size_t i = 0; i < intervals_.size(); ++i) p[i] = midpoint(intervals_[i].lo(), intervals_[i].hi());
  return p;
}

std::optional<BoxRegion> intersect(const BoxRegion& a, const BoxRegion& b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim(), "box intersection");
  std::vector<Interval> iv;
  iv.reserve(a.ambient_dim());
  for (std::size_t i = 0; i < a.ambient_dim(); ++i) {
    auto r = intersect(a[i], b[i]);
    if (!r) return std::nullopt;
    iv.push_back(std::move(*r));
  }
  return BoxRegion(std::move(iv));
}

// ------------------------------------------------------------- SpanComplex

SpanComplex::SpanComplex(std::size_t dim, std::vector<BoxRegion> boxes) : dim_(dim) {
  boxes_.reserve(boxes.size());
  for (auto& b : boxes) add(std::move(b));
}

void SpanComplex::add(BoxRegion box) {
  require_same_dim(box.ambient_dim(), dim_, "complex box");
  boxes_.push_back(std::move(box));
}

bool SpanComplex::is_closed() const noexcept {
  return std::all_of(boxes_.begin(), boxes_.end(), [](const BoxRegion& b) { return b.is_closed(); });
}

SpanComplex SpanComplex::deduplicated() const {
  SpanComplex out(dim_);
  for (const auto& b : boxes_) {
    if (std::find(out.boxes_.begin(), out.boxes_.end(), b) == out.boxes_.end()) out.boxes_.push_back(b);
  }
  return out;
}

// ----------------------------------------------------------------- Lattice

Lattice::Lattice(std::vector<Dyadic> steps) : Lattice(steps, Point(steps.size())) {}

Lattice::Lattice(std::vector<Dyadic> steps, Point origin)
    : steps_(std::move(steps)), origin_(std::move(origin)) {
  require_same_dim(steps_.size(), origin_.size(), "lattice origin");
  for (const auto& a : steps_) {
    if (a.sign() <= 0) throw PreconditionError("lattice steps must be positive");
  }
}

Lattice Lattice::uniform(std::size_t n, const Dyadic& step) {
  return Lattice(std::vector<Dyadic>(n, step));
}

Dyadic Lattice::coordinate(std::size_t axis, std::int64_t k) const {
  return origin_[axis] + steps_[axis] * Dyadic(static_cast<long long>(k));
}

Point Lattice::point(const std::vector<std::int64_t>& k) const {
  require_same_dim(k.size(), steps_.size(), "lattice point");
  Point p(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) p[i] = coordinate(i, k[i]);
  return p;
}

Lattice Lattice::refined(int k) const {
  std::vector<Dyadic> s;
  s.reserve(steps_.size());
  for (const auto& a : steps_) s.push_back(a.scaled(-k));
  return Lattice(std::move(s), origin_);
}

// -------------------------------------------------------------- operations

bool contains(const SpanComplex& complex, const Point& p) {
  require_same_dim(p.size(), complex.dim(), "contains");
  return std::any_of(complex.boxes().begin(), complex.boxes().end(),
                     [&](const BoxRegion& b) { return b.contains(p); });
}

Distance cheb_distance(const Point& p, const BoxRegion& box) {
  require_same_dim(p.size(), box.ambient_dim(), "cheb_distance");
  Dyadic best;
  bool attained = true;
  std::vector<AxisDistance> per_axis;
  per_axis.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    per_axis.push_back(axis_distance(p[i], box[i]));
    best = max(best, per_axis.back().value);
  }
  for (const auto& d : per_axis) {
    if (d.value == best && !d.attained) attained = false;
  }
  return {best, attained};
}

Distance cheb_distance(const Point& p, const SpanComplex& complex) {
  require_same_dim(p.size(), complex.dim(), "cheb_distance");
  if (complex.empty()) throw PreconditionError("cheb_distance: empty complex");
  std::optional<Distance> best;
  for (const auto& b : complex.boxes()) {
    Distance d = cheb_distance(p, b);
    if (!best || d.value < best->value) {
      best = d;
    } else if (d.value == best->value && d.attained) {
      best->attained = true;
    }
  }
  return *best;
}

BoxRegion bhull(const std::vector<Point>& points) {
  if (points.empty()) throw PreconditionError("bhull of an empty point set");
  Point lo = points.front();
  Point hi = points.front();
  for (const auto& p : points) {
    require_same_dim(p.size(), lo.size(), "bhull");
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < lo[i]) lo[i] = p[i];
      if (hi[i] < p[i]) hi[i] = p[i];
    }
  }
  return BoxRegion::closed(lo, hi);
}

SpanComplex project(const SpanComplex& complex, const std::vector<std::size_t>& axes) {
  if (axes.empty()) throw PreconditionError("project: empty axis set");
  std::set<std::size_t> seen;
  for (auto a : axes) {
    if (a >= complex.dim()) throw DimensionError("project: axis out of range");
    if (!seen.insert(a).second) throw PreconditionError("project: repeated axis");
  }
  SpanComplex out(axes.size());
  for (const auto& b : complex.boxes()) {
    std::vector<Interval> iv;
    iv.reserve(axes.size());
    for (auto a : axes) iv.push_back(b[a]);
    out.add(BoxRegion(std::move(iv)));
  }
  return out;
}

SpanComplex minkowski_box(const SpanComplex& complex, const BoxRegion& r) {
  require_same_dim(complex.dim(), r.ambient_dim(), "minkowski_box");
  SpanComplex out(complex.dim());
  for (const auto& b : complex.boxes()) {
    std::vector<Interval> iv;
    iv.reserve(b.ambient_dim());
    for (std::size_t i = 0; i < b.ambient_dim(); ++i) iv.push_back(minkowski_sum(b[i], r[i]));
    out.add(BoxRegion(std::move(iv)));
  }
  return out;
}

SpanComplex intersect_box(const SpanComplex& complex, const BoxRegion& r) {
  require_same_dim(complex.dim(), r.ambient_dim(), "intersect_box");
  SpanComplex out(complex.dim());
  for (const auto& b : complex.boxes()) {
    if (auto x = intersect(b, r)) out.add(std::move(*x));
  }
  return out;
}

std::vector<BoxRegion> elementary_boxes(const Lattice& lattice, std::size_t l, const BoxRegion& window) {
  const std::size_t n = lattice.dim();
  require_same_dim(n, window.ambient_dim(), "elementary_boxes");
  if (l > n) throw PreconditionError("elementary_boxes: l exceeds the dimension");

  // Per axis: the lattice indices whose point lies in the window, and the
  // indices k whose segment [k, k+1] lies in the window.
  struct Range {
    std::int64_t lo, hi;  // inclusive; empty when lo > hi
  };
  std::vector<Range> points(n), segments(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Interval& w = window[i];
    const Dyadic& a = lattice.steps()[i];
    Dyadic lo = w.lo() - lattice.origin()[i];
    Dyadic hi = w.hi() - lattice.origin()[i];
    BigInt kmin = w.lo_closed() ? ceil_ratio(lo, a) : floor_ratio(lo, a) + 1;
    BigInt kmax = w.hi_closed() ? floor_ratio(hi, a) : ceil_ratio(hi, a) - 1;
    points[i] = {to_int64(kmin), to_int64(kmax)};
    // a closed segment needs both endpoints inside the window
    segments[i] = {points[i].lo, points[i].hi - 1};
  }

  constexpr std::size_t kLimit = 50'000'000;
  std::vector<BoxRegion> out;
  // choose which axes carry a segment
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != l) continue;
    std::vector<Range> ranges(n);
    std::size_t count = 1;
    bool empty = false;
    for (std::size_t i = 0; i < n; ++i) {
      ranges[i] = (mask >> i & 1) ? segments[i] : points[i];
      if (ranges[i].lo > ranges[i].hi) {
        empty = true;
        break;
      }
      auto len = static_cast<std::size_t>(ranges[i].hi - ranges[i].lo + 1);
      if (count > kLimit / len) throw PreconditionError("elementary_boxes: window too large to enumerate");
      count *= len;
    }
    if (empty) continue;
    if (out.size() + count > kLimit) throw PreconditionError("elementary_boxes: window too large to enumerate");
    std::vector<std::int64_t> k(n);
    for (std::size_t i = 0; i < n; ++i) k[i] = ranges[i].lo;
    while (true) {
      std::vector<Interval> iv;
      iv.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        Dyadic c = lattice.coordinate(i, k[i]);
        if (mask >> i & 1) {
          iv.push_back(Interval::closed(c, lattice.coordinate(i, k[i] + 1)));
        } else {
          iv.push_back(Interval::point(c));
        }
      }
      out.emplace_back(std::move(iv));
      std::size_t axis = n;
      while (axis-- > 0) {
        if (++k[axis] <= ranges[axis].hi) break;
        k[axis] = ranges[axis].lo;
      }
      if (axis == static_cast<std::size_t>(-1)) break;
    }
  }
  return out;
}

bool covers(const SpanComplex& complex, const BoxRegion& box) {
  require_same_dim(complex.dim(), box.ambient_dim(), "covers");
  const std::size_t n = box.ambient_dim();
  std::vector<std::vector<Dyadic>> samples(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Dyadic> cuts;
    for (const auto& b : complex.boxes()) {
      if (box[i].contains(b[i].lo())) cuts.push_back(b[i].lo());
      if (box[i].contains(b[i].hi())) cuts.push_back(b[i].hi());
    }
    samples[i] = cell_samples(box[i], std::move(cuts));
  }
  std::vector<std::size_t> idx(n, 0);
  Point p(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) p[i] = samples[i][idx[i]];
    if (!contains(complex, p)) return false;
    std::size_t axis = n;
    while (axis-- > 0) {
      if (++idx[axis] < samples[axis].size()) break;
      idx[axis] = 0;
    }
    if (axis == static_cast<std::size_t>(-1)) return true;
  }
}

bool is_subset(const SpanComplex& inner, const SpanComplex& outer) {
  require_same_dim(inner.dim(), outer.dim(), "is_subset");
  return std::all_of(inner.boxes().begin(), inner.boxes().end(),
                     [&](const BoxRegion& b) { return covers(outer, b); });
}

Point nearest_point(const SpanComplex& closed_complex, const Point& p) {
  require_same_dim(closed_complex.dim(), p.size(), "nearest_point");
  if (closed_complex.empty()) throw PreconditionError("nearest_point: empty complex");
  std::optional<Point> best;
  Dyadic best_d;
  for (const auto& b : closed_complex.boxes()) {
    if (!b.is_closed()) throw PreconditionError("nearest_point: complex must be closed");
    Point q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < b[i].lo()) {
        q[i] = b[i].lo();
      } else if (p[i] > b[i].hi()) {
        q[i] = b[i].hi();
      } else {
        q[i] = p[i];
      }
    }
    Dyadic d = cheb(p, q);
    if (!best || d < best_d) {
      best = std::move(q);
      best_d = d;
    }
  }
  return *best;
}

BoxRegion closed_ball(const Point& center, const Dyadic& radius) {
  std::vector<Interval> iv;
  iv.reserve(center.size());
  for (const auto& c : center) iv.push_back(Interval::closed(c - radius, c + radius));
  return BoxRegion(std::move(iv));
}

BoxRegion open_ball(const Point& center, const Dyadic& radius) {
  if (radius.sign() <= 0) throw PreconditionError("open ball needs a positive radius");
  std::vector<Interval> iv;
  iv.reserve(center.size());
  for (const auto& c : center) iv.push_back(Interval::open(c - radius, c + radius));
  return BoxRegion(std::move(iv));
}

}  // namespace monovex
