#pragma once

#include <string>
#include <utility>
#include <vector>

#include "monovex/geometry.hpp"
#include "monovex/rasterizer.hpp"

namespace monovex {

/// Squares [1/2^(k+1), 1/2^k]^2 for k < K. The origin is left out: with
/// finitely many squares it would be an isolated point.
SpanComplex example1(int k_squares);

/// Points of [-1,1]^3 with a negative and a nonnegative coordinate, as six
/// half-open boxes x_i in [-1,0), x_j in [0,1].
SpanComplex example2();

/// Closed surrogate of example2: x_i in [-1,-eps], x_j in [0,1].
SpanComplex example2_closed(const Dyadic& eps);

/// The two segment sets A and B whose sum is the three-dimensional
/// non-monovex example.
std::pair<SegmentSet, SegmentSet> example3_sets();
/// A three-segment staircase and the diagonal line cut to [-T, T].
std::pair<SegmentSet, SegmentSet> example4_sets(const Dyadic& t);

/// Closed box spanned by the sum's vertices, padded by h.
BoxRegion sum_window(const SegmentSet& a, const SegmentSet& b, const Dyadic& h);

VoxelGrid example3_raster(const Dyadic& h);
VoxelGrid example4_raster(const Dyadic& h, const Dyadic& t);
SpanComplex example3(const Dyadic& h);
SpanComplex example4(const Dyadic& h, const Dyadic& t);

SpanComplex lshape();
SpanComplex sshape();

struct CatalogParams {
  int k_squares = 3;
  Dyadic eps = Dyadic::pow2(-2);
  /// Raster resolution; zero selects the per-example default.
  Dyadic h = 0;
  Dyadic t = 1;
};

std::vector<std::string> catalog_names();
/// Builds a catalog entry by name; throws PreconditionError for unknown names.
SpanComplex catalog(const std::string& name, const CatalogParams& params = {});
std::string catalog_help(const std::string& name);

}  // namespace monovex
