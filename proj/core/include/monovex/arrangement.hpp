#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "monovex/geometry.hpp"

namespace monovex {

/// Cell decomposition of the bounding region of a SpanComplex induced by all
/// per-axis box endpoints e_0 < ... < e_m.
///
/// On each axis, cell index 2j is the point {e_j} and 2j+1 the open interval
/// (e_j, e_{j+1}). A cell is the product of one axis cell per coordinate; it
/// lies entirely inside or entirely outside the union. Flat indices are
/// row-major with axis 0 most significant, so comparing flat indices compares
/// index tuples lexicographically.
class Arrangement {
 public:
  using Index = std::vector<std::uint32_t>;

  explicit Arrangement(const SpanComplex& complex);

  std::size_t dim() const noexcept { return endpoints_.size(); }
  std::size_t axis_size(std::size_t axis) const noexcept { return sizes_[axis]; }
  std::size_t cell_count() const noexcept { return total_; }
  const std::vector<Dyadic>& endpoints(std::size_t axis) const { return endpoints_[axis]; }

  std::optional<std::uint32_t> axis_locate(std::size_t axis, const Dyadic& x) const;
  /// Flat index of the cell containing p, or nullopt outside the bounding box.
  std::optional<std::size_t> locate(const Point& p) const;

  bool member(std::size_t flat) const { return member_[flat] != 0; }
  /// Flat indices of all cells inside the union, ascending.
  const std::vector<std::size_t>& members() const noexcept { return members_; }

  Index unflatten(std::size_t flat) const;
  std::size_t flatten(const Index& index) const;
  std::size_t stride(std::size_t axis) const noexcept { return strides_[axis]; }

  Interval axis_cell(std::size_t axis, std::uint32_t index) const;
  /// A canonical coordinate inside the axis cell (the endpoint or the midpoint).
  Dyadic axis_representative(std::size_t axis, std::uint32_t index) const;
  BoxRegion cell_box(std::size_t flat) const;
  Point representative(std::size_t flat) const;

 private:
  std::vector<std::vector<Dyadic>> endpoints_;
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 0;
  std::vector<std::uint8_t> member_;
  std::vector<std::size_t> members_;
};

/// The cells of the arrangement that lie inside the union (a partition of it).
std::vector<BoxRegion> arrangement_cells(const SpanComplex& complex);

}  // namespace monovex
