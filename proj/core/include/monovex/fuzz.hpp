#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "monovex/geometry.hpp"

namespace monovex {

enum class FuzzMode { kClosed, kOpen, kHalfOpen };

FuzzMode parse_fuzz_mode(const std::string& text);
std::string to_string(FuzzMode mode);

struct FuzzConfig {
  std::uint64_t seed = 1;
  /// Ambient dimension; 0 draws one of 1..3 per trial.
  std::size_t dim = 0;
  std::size_t max_boxes = 6;
  FuzzMode mode = FuzzMode::kClosed;
  std::size_t trials = 100;
  /// Coordinates are integers in [0, extent].
  int extent = 4;
  std::size_t max_attempts = 2000;
};

/// A random complex (not filtered). Each new box contains a point of an
/// earlier one, so most draws are connected.
SpanComplex random_complex(std::mt19937_64& rng, std::size_t dim, std::size_t boxes, int extent, FuzzMode mode);

struct FuzzTrial {
  std::size_t index = 0;
  std::size_t dim = 0;
  std::size_t attempts = 0;
  bool found = false;  // a monovex complex was drawn within the budget
  SpanComplex complex;
  std::vector<std::size_t> betti;
  bool acyclic = false;
  bool homology_consistent = true;
};

struct FuzzReport {
  FuzzConfig config;
  std::vector<FuzzTrial> trials;
  /// Closed mode: monovex but not acyclic, or homology self-checks failed.
  std::vector<std::size_t> violations;
  /// Other modes: monovex and not acyclic.
  std::vector<std::size_t> discoveries;
  std::size_t not_found = 0;
};

/// Rejection-samples monovex complexes and computes their homology. Trials
/// run in parallel with per-trial seeds, so results depend only on config.
FuzzReport run_fuzz(const FuzzConfig& config);

}  // namespace monovex
