#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "monovex/geometry.hpp"

namespace monovex::oracle {

/// Finest exponent e such that every endpoint of the complex and every
/// coordinate of the extra points is a multiple of 2^-e.
int max_exponent(const SpanComplex& complex, const std::vector<Point>& extra = {});

/// Brute-force monotone reachability on the grid 2^-(e+1) Z^n.
///
/// A move changes a nonempty subset of the axes where x and y differ by one
/// grid step toward y. It is allowed when both endpoints and the midpoint of
/// the move lie in the complex; each open move stays inside one arrangement
/// cell, so checking the midpoint checks the whole segment.
bool bfs_reachable(const SpanComplex& complex, const Point& x, const Point& y);

/// Grid points of 2^-(e+1) Z^n inside the complex's b-hull that belong to it.
std::vector<Point> grid_members(const SpanComplex& complex);

/// Integer-endpoint boxes in [0, extent]^n with random open/closed flags,
/// not filtered for monovexity.
SpanComplex random_mixed_complex(std::mt19937_64& rng, std::size_t dim, std::size_t boxes, int extent);

/// All pairs over grid_members agree with the verdict; returns the first
/// non-reachable pair when there is one.
std::optional<std::pair<Point, Point>> brute_force_witness(const SpanComplex& complex);

}  // namespace monovex::oracle
