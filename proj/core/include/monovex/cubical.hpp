#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "monovex/geometry.hpp"
#include "monovex/grid_extension.hpp"

namespace monovex {

/// Sparse GF(2) matrix stored by columns; each column lists its nonzero rows
/// in increasing order.
struct BoundaryMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::uint32_t>> columns;
};

/// Rank over GF(2) by column reduction.
std::size_t gf2_rank(BoundaryMatrix matrix);

/// Elementary cubes of a lattice, closed under faces.
///
/// A cube is named by doubled lattice coordinates: 2k for the point {k} and
/// 2k+1 for the unit interval [k, k+1] on that axis. Its dimension is the
/// number of odd coordinates.
class CubicalComplex {
 public:
  CubicalComplex(std::size_t dim, Lattice grid);

  /// All elementary cubes inside the boxes of a closed, lattice-aligned complex.
  static CubicalComplex from_complex(const SpanComplex& complex, const Lattice& grid);

  std::size_t dim() const noexcept { return dim_; }
  const Lattice& grid() const noexcept { return grid_; }
  /// Cubes of dimension k, sorted.
  const std::vector<Key>& cells(std::size_t k) const { return cells_[k]; }
  std::size_t count(std::size_t k) const { return cells_[k].size(); }
  std::size_t total() const;

  /// Adds the cube and all its faces.
  void add_closed(const Key& cube);
  /// Restores sorted order and indices after insertions.
  void finalize();

  bool face_closed() const;
  /// Index of a cube within cells(dimension), or -1.
  std::int64_t index_of(const Key& cube) const;

  BoundaryMatrix boundary(std::size_t k) const;
  /// The corner point of a vertex cube (all coordinates even).
  Point vertex_point(const Key& cube) const;

 private:
  std::size_t dim_;
  Lattice grid_;
  std::vector<std::vector<Key>> cells_;
  std::vector<std::unordered_map<Key, std::uint32_t, KeyHash>> index_;
};

struct BettiReport {
  std::vector<std::size_t> betti;
  std::vector<std::size_t> cells;
  long long euler = 0;
  /// Euler characteristic equals the alternating Betti sum.
  bool euler_consistent = true;
  /// beta_0 agrees with a union-find component count.
  bool components_consistent = true;
  bool boundary_squared_zero = true;

  bool ok() const noexcept { return euler_consistent && components_consistent && boundary_squared_zero; }
};

BettiReport betti_numbers(const CubicalComplex& complex);
bool boundary_squared_zero(const CubicalComplex& complex);

/// One edge cycle per independent class of H_1, as lists of edge segments.
std::vector<std::vector<std::pair<Point, Point>>> h1_representatives(const CubicalComplex& complex);

/// The coarsest uniform lattice 2^-e Z^n on which every endpoint lies.
Lattice aligned_grid(const SpanComplex& complex);

/// Betti numbers of a union of arrangement cells (any open/closed flags),
/// computed on the order complex of the face poset of its cells.
std::vector<std::size_t> order_complex_betti(const SpanComplex& complex);

}  // namespace monovex
