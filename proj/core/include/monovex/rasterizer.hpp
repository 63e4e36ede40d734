#pragma once

#include <cstddef>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "monovex/geometry.hpp"
#include "monovex/grid_extension.hpp"

namespace monovex {

/// Closed segments of arbitrary direction (a == b gives a point).
struct SegmentSet {
  std::size_t dim = 0;
  std::vector<std::pair<Point, Point>> segments;

  void add(Point a, Point b);
};

/// Occupied closed cubes [h k, h (k+1)] of the lattice h Z^n.
class VoxelGrid {
 public:
  VoxelGrid(Dyadic resolution, BoxRegion window);

  const Dyadic& resolution() const noexcept { return h_; }
  const BoxRegion& window() const noexcept { return window_; }
  std::size_t dim() const noexcept { return window_.ambient_dim(); }

  void insert(const Key& voxel);
  bool occupied(const Key& voxel) const { return set_.count(voxel) != 0; }
  std::size_t size() const noexcept { return set_.size(); }
  /// Occupied voxels in ascending order.
  std::vector<Key> voxels() const;
  BoxRegion voxel_box(const Key& voxel) const;

 private:
  Dyadic h_;
  BoxRegion window_;
  std::unordered_set<Key, KeyHash> set_;
};

/// Every voxel whose closed cube meets {a + b : a in A, b in B} inside the
/// closed window. Each segment pair spans a parallelogram; the cube test is
/// an exact two-variable Fourier-Motzkin elimination.
VoxelGrid rasterize_minkowski(const SegmentSet& a, const SegmentSet& b, const Dyadic& h, const BoxRegion& window);

/// Closed union of the occupied voxels (runs along the last axis merged).
SpanComplex to_complex(const VoxelGrid& grid);

/// Boundary faces of the occupied voxels as an OFF quad mesh.
std::string voxel_off(const VoxelGrid& grid);

}  // namespace monovex
