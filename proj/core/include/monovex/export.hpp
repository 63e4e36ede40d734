#pragma once

#include <string>
#include <utility>
#include <vector>

#include "monovex/geometry.hpp"

namespace monovex {

// OFF output pads points to three coordinates (or keeps the first three).

/// Polylines as chains of two-vertex faces.
std::string off_polylines(const std::vector<std::vector<Point>>& lines);
std::string off_segments(const std::vector<std::pair<Point, Point>>& segments);
/// Every box of the complex as a hexahedron (degenerate boxes flatten).
std::string off_boxes(const SpanComplex& complex);

}  // namespace monovex
