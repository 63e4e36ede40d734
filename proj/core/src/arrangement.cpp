#include "monovex/arrangement.hpp"

#include <algorithm>

#include "monovex/errors.hpp"

namespace monovex {

Arrangement::Arrangement(const SpanComplex& complex)
    : endpoints_(complex.dim()), sizes_(complex.dim(), 0), strides_(complex.dim(), 1) {
  const std::size_t n = complex.dim();
  for (const auto& b : complex.boxes()) {
    for (std::size_t i = 0; i < n; ++i) {
      endpoints_[i].push_back(b[i].lo());
      endpoints_[i].push_back(b[i].hi());
    }
  }
  total_ = complex.empty() ? 0 : 1;
  for (std::size_t i = 0; i < n; ++i) {
    auto& e = endpoints_[i];
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    sizes_[i] = e.empty() ? 0 : 2 * e.size() - 1;
  }
  for (std::size_t i = n; i-- > 0;) {
    if (i + 1 < n) strides_[i] = strides_[i + 1] * sizes_[i + 1];
  }
  if (total_ != 0) {
    for (std::size_t i = 0; i < n; ++i) total_ *= sizes_[i];
  }
  member_.assign(total_, 0);

  // Mark, for every box, the product of axis-cell ranges it covers.
  for (const auto& b : complex.boxes()) {
    Index lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& e = endpoints_[i];
      auto jl = static_cast<std::uint32_t>(std::lower_bound(e.begin(), e.end(), b[i].lo()) - e.begin());
      auto jh = static_cast<std::uint32_t>(std::lower_bound(e.begin(), e.end(), b[i].hi()) - e.begin());
      lo[i] = b[i].lo_closed() ? 2 * jl : 2 * jl + 1;
      hi[i] = b[i].hi_closed() ? 2 * jh : 2 * jh - 1;
    }
    Index k = lo;
    while (true) {
      member_[flatten(k)] = 1;
      std::size_t axis = n;
      while (axis-- > 0) {
        if (++k[axis] <= hi[axis]) break;
        k[axis] = lo[axis];
      }
      if (axis == static_cast<std::size_t>(-1)) break;
    }
  }
  for (std::size_t f = 0; f < total_; ++f) {
    if (member_[f]) members_.push_back(f);
  }
}

std::optional<std::uint32_t> Arrangement::axis_locate(std::size_t axis, const Dyadic& x) const {
  const auto& e = endpoints_[axis];
  if (e.empty() || x < e.front() || x > e.back()) return std::nullopt;
  auto it = std::lower_bound(e.begin(), e.end(), x);
  auto j = static_cast<std::uint32_t>(it - e.begin());
  if (*it == x) return 2 * j;
  return 2 * j - 1;
}

std::optional<std::size_t> Arrangement::locate(const Point& p) const {
  if (p.size() != dim()) throw DimensionError("arrangement locate: dimension mismatch");
  if (total_ == 0) return std::nullopt;
  std::size_t flat = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    auto c = axis_locate(i, p[i]);
    if (!c) return std::nullopt;
    flat += *c * strides_[i];
  }
  return flat;
}

Arrangement::Index Arrangement::unflatten(std::size_t flat) const {
  Index k(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    k[i] = static_cast<std::uint32_t>(flat / strides_[i]);
    flat %= strides_[i];
  }
  return k;
}

std::size_t Arrangement::flatten(const Index& index) const {
  std::size_t flat = 0;
  for (std::size_t i = 0; i < dim(); ++i) flat += index[i] * strides_[i];
  return flat;
}

Interval Arrangement::axis_cell(std::size_t axis, std::uint32_t index) const {
  const auto& e = endpoints_[axis];
  if (index % 2 == 0) return Interval::point(e[index / 2]);
  return Interval::open(e[index / 2], e[index / 2 + 1]);
}

Dyadic Arrangement::axis_representative(std::size_t axis, std::uint32_t index) const {
  const auto& e = endpoints_[axis];
  if (index % 2 == 0) return e[index / 2];
  return midpoint(e[index / 2], e[index / 2 + 1]);
}

BoxRegion Arrangement::cell_box(std::size_t flat) const {
  Index k = unflatten(flat);
  std::vector<Interval> iv;
  iv.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) iv.push_back(axis_cell(i, k[i]));
  return BoxRegion(std::move(iv));
}

Point Arrangement::representative(std::size_t flat) const {
  Index k = unflatten(flat);
  Point p(dim());
  for (std::size_t i = 0; i < dim(); ++i) p[i] = axis_representative(i, k[i]);
  return p;
}

std::vector<BoxRegion> arrangement_cells(const SpanComplex& complex) {
  Arrangement arr(complex);
  std::vector<BoxRegion> out;
  out.reserve(arr.members().size());
  for (auto f : arr.members()) out.push_back(arr.cell_box(f));
  return out;
}

}  // namespace monovex
