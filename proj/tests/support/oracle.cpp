#include "oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace monovex::oracle {

int max_exponent(const SpanComplex& complex, const std::vector<Point>& extra) {
  std::uint32_t e = 0;
  for (const auto& box : complex.boxes()) {
    for (const auto& iv : box.intervals()) e = std::max({e, iv.lo().exponent(), iv.hi().exponent()});
  }
  for (const auto& p : extra) {
    for (const auto& c : p) e = std::max(e, c.exponent());
  }
  return static_cast<int>(e);
}

bool bfs_reachable(const SpanComplex& complex, const Point& x, const Point& y) {
  if (!contains(complex, x) || !contains(complex, y)) return false;
  const std::size_t n = x.size();
  const Dyadic g = Dyadic::pow2(-(max_exponent(complex, {x, y}) + 1));
  std::vector<std::size_t> active;
  std::vector<Dyadic> step(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == y[i]) continue;
    active.push_back(i);
    step[i] = x[i] < y[i] ? g : -g;
  }
  const std::size_t subsets = std::size_t{1} << active.size();
  std::unordered_set<Point, PointHash> seen{x};
  std::deque<Point> queue{x};
  while (!queue.empty()) {
    Point p = std::move(queue.front());
    queue.pop_front();
    if (p == y) return true;
    for (std::size_t mask = 1; mask < subsets; ++mask) {
      Point q = p, mid = p;
      bool inside = true;
      for (std::size_t b = 0; b < active.size(); ++b) {
        if (!(mask >> b & 1)) continue;
        const std::size_t i = active[b];
        if (p[i] == y[i]) {
          inside = false;
          break;
        }
        q[i] = p[i] + step[i];
        mid[i] = p[i] + step[i].half();
      }
      if (!inside || seen.count(q)) continue;
      if (!contains(complex, mid) || !contains(complex, q)) continue;
      seen.insert(q);
      queue.push_back(std::move(q));
    }
  }
  return false;
}

std::vector<Point> grid_members(const SpanComplex& complex) {
  std::vector<Point> out;
  if (complex.empty()) return out;
  const std::size_t n = complex.dim();
  const Dyadic g = Dyadic::pow2(-(max_exponent(complex) + 1));
  std::vector<Point> corners;
  for (const auto& b : complex.boxes()) {
    corners.push_back(b.lower_corner());
    corners.push_back(b.upper_corner());
  }
  BoxRegion hull = bhull(corners);
  std::vector<std::int64_t> lo(n), hi(n), k(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = to_int64(floor_ratio(hull[i].lo(), g));
    hi[i] = to_int64(floor_ratio(hull[i].hi(), g));
  }
  k = lo;
  while (true) {
    Point p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = g * Dyadic(static_cast<long long>(k[i]));
    if (contains(complex, p)) out.push_back(std::move(p));
    std::size_t i = n;
    while (i > 0 && k[i - 1] == hi[i - 1]) {
      k[i - 1] = lo[i - 1];
      --i;
    }
    if (i == 0) break;
    ++k[i - 1];
  }
  return out;
}

SpanComplex random_mixed_complex(std::mt19937_64& rng, std::size_t dim, std::size_t boxes, int extent) {
  std::uniform_int_distribution<int> coord(0, extent), coin(0, 1);
  SpanComplex out(dim);
  for (std::size_t b = 0; b < boxes; ++b) {
    std::vector<Interval> iv;
    for (std::size_t i = 0; i < dim; ++i) {
      int lo = coord(rng), hi = coord(rng);
      if (lo > hi) std::swap(lo, hi);
      bool lc = coin(rng) == 1, hc = coin(rng) == 1;
      if (lo == hi) lc = hc = true;
      iv.emplace_back(lo, hi, lc, hc);
    }
    out.add(BoxRegion(std::move(iv)));
  }
  return out;
}

std::optional<std::pair<Point, Point>> brute_force_witness(const SpanComplex& complex) {
  auto pts = grid_members(complex);
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      if (!bfs_reachable(complex, pts[a], pts[b])) return std::make_pair(pts[a], pts[b]);
    }
  }
  return std::nullopt;
}

}  // namespace monovex::oracle
