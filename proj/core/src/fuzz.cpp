#include "monovex/fuzz.hpp"

#include "monovex/cubical.hpp"
#include "monovex/errors.hpp"
#include "monovex/monotone_path.hpp"
#include "monovex/parallel.hpp"

namespace monovex {

FuzzMode parse_fuzz_mode(const std::string& text) {
  if (text == "closed") return FuzzMode::kClosed;
  if (text == "open") return FuzzMode::kOpen;
  if (text == "half-open") return FuzzMode::kHalfOpen;
  throw PreconditionError("unknown fuzz mode '" + text + "'");
}

std::string to_string(FuzzMode mode) {
  switch (mode) {
    case FuzzMode::kClosed:
      return "closed";
    case FuzzMode::kOpen:
      return "open";
    case FuzzMode::kHalfOpen:
      return "half-open";
  }
  return "closed";
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Interval make_interval(std::mt19937_64& rng, int lo, int hi, int extent, FuzzMode mode) {
  bool lo_closed = true, hi_closed = true;
  if (mode == FuzzMode::kOpen) {
    lo_closed = hi_closed = false;
  } else if (mode == FuzzMode::kHalfOpen) {
    lo_closed = uniform(rng, 0, 1) == 1;
    hi_closed = uniform(rng, 0, 1) == 1;
  }
  if (lo == hi && !(lo_closed && hi_closed)) {
    if (mode == FuzzMode::kOpen) {
      if (hi < extent) {
        ++hi;
      } else {
        --lo;
      }
    } else {
      lo_closed = hi_closed = true;
    }
  }
  return Interval(lo, hi, lo_closed, hi_closed);
}

}  // namespace

SpanComplex random_complex(std::mt19937_64& rng, std::size_t dim, std::size_t boxes, int extent, FuzzMode mode) {
  if (dim == 0 || boxes == 0 || extent < 1) throw PreconditionError("random_complex: empty configuration");
  SpanComplex out(dim);
  std::vector<std::vector<int>> lo_corner, hi_corner;
  for (std::size_t b = 0; b < boxes; ++b) {
    std::vector<Interval> iv;
    std::vector<int> lo(dim), hi(dim);
    if (b == 0) {
      for (std::size_t i = 0; i < dim; ++i) {
        lo[i] = uniform(rng, 0, extent - 1);
        hi[i] = uniform(rng, lo[i], extent);
      }
    } else {
      const std::size_t parent = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(b) - 1));
      for (std::size_t i = 0; i < dim; ++i) {
        int p = uniform(rng, lo_corner[parent][i], hi_corner[parent][i]);
        lo[i] = uniform(rng, std::max(0, p - 2), p);
        hi[i] = uniform(rng, p, std::min(extent, p + 2));
      }
    }
    for (std::size_t i = 0; i < dim; ++i) iv.push_back(make_interval(rng, lo[i], hi[i], extent, mode));
    for (std::size_t i = 0; i < dim; ++i) {
      lo[i] = static_cast<int>(iv[i].lo().floor());
      hi[i] = static_cast<int>(iv[i].hi().floor());
    }
    lo_corner.push_back(lo);
    hi_corner.push_back(hi);
    out.add(BoxRegion(std::move(iv)));
  }
  return out.deduplicated();
}

FuzzReport run_fuzz(const FuzzConfig& config) {
  if (config.dim > 3) throw PreconditionError("fuzz: dimension must be at most 3");
  if (config.max_boxes == 0) throw PreconditionError("fuzz: box budget must be positive");
  FuzzReport report;
  report.config = config;
  report.trials.resize(config.trials);
  parallel_for(config.trials, [&](std::size_t t) {
    std::seed_seq seq{config.seed, static_cast<std::uint64_t>(t)};
    std::mt19937_64 rng(seq);
    FuzzTrial& trial = report.trials[t];
    trial.index = t;
    trial.dim = config.dim == 0 ? static_cast<std::size_t>(uniform(rng, 1, 3)) : config.dim;
    for (std::size_t attempt = 1; attempt <= config.max_attempts; ++attempt) {
      const int budget = static_cast<int>(config.max_boxes);
      std::size_t boxes = static_cast<std::size_t>(uniform(rng, std::min(2, budget), budget));
      SpanComplex candidate = random_complex(rng, trial.dim, boxes, config.extent, config.mode);
      if (is_monovex(candidate).is_monovex) {
        trial.attempts = attempt;
        trial.found = true;
        trial.complex = std::move(candidate);
        break;
      }
    }
    if (!trial.found) {
      trial.attempts = config.max_attempts;
      return;
    }
    if (config.mode == FuzzMode::kClosed) {
      auto cubes = CubicalComplex::from_complex(trial.complex, aligned_grid(trial.complex));
      BettiReport r = betti_numbers(cubes);
      trial.betti = r.betti;
      trial.homology_consistent = r.ok();
    } else {
      trial.betti = order_complex_betti(trial.complex);
    }
    trial.acyclic = !trial.betti.empty() && trial.betti[0] == 1;
    for (std::size_t k = 1; k < trial.betti.size(); ++k) trial.acyclic = trial.acyclic && trial.betti[k] == 0;
  });
  for (const auto& trial : report.trials) {
    if (!trial.found) {
      ++report.not_found;
      continue;
    }
    bool bad = !trial.acyclic || !trial.homology_consistent;
    if (config.mode == FuzzMode::kClosed) {
      if (bad) report.violations.push_back(trial.index);
    } else if (bad) {
      report.discoveries.push_back(trial.index);
    }
  }
  return report;
}

}  // namespace monovex
