#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "aztec/lattice.hpp"
#include "aztec/rng.hpp"

namespace aztec {

struct SamplerConfig {
  int n = 1;
  Weight a;
  uint64_t seed = 0;
  int count = 1;
  int threads = 0;   // 0: use hardware_concurrency (or DIMERCTL_THREADS)
};

// Biased domino shuffling: grow the diamond one order at a time; each growth
// step destroys colliding pairs, slides every domino one step along its type
// direction and fills the empty 2x2 blocks, vertical pair with probability
// a^2/(1+a^2). Exact in distribution (validated against enumeration).
Tiling sample_tiling(const SamplerConfig& cfg, uint64_t sample_index = 0);

// Per-edge absolute counts over cfg.count samples.
std::map<Dimer, long> edge_counts(const SamplerConfig& cfg);

struct EdgeFrequency {
  double freq;
  double stderr_;   // binomial standard error
};
std::map<Dimer, EdgeFrequency> empirical_edge_frequencies(const SamplerConfig& cfg);

// South-domino positions on the line y=r and the complementary holes encoded
// as (start, length) runs; positions+holes partition 1..n.
struct LineStatistics {
  int r;
  std::vector<int> positions;
  std::vector<std::pair<int, int>> holes;
};
LineStatistics south_line_statistics(const Tiling& t, int r);

// Frozen-boundary points of one tiling, rescaled by 2n into [0,1]^2. Scans
// every lattice row/column from each corner inward and records where the
// corner's brickwork phase (W at (0,0), S at (1,0), N at (0,1), E at (1,1))
// first breaks; rows still fully frozen contribute no point.
std::vector<std::pair<double, double>> frozen_boundary_points(const Tiling& t);

// Aggregated over cfg.count samples (concatenated in sample order).
std::vector<std::pair<double, double>> frozen_boundary_estimate(const SamplerConfig& cfg);

// Runs per-sample work in a small thread pool keyed by sample index;
// results are combined in index order, so the output is deterministic.
void for_each_sample(const SamplerConfig& cfg,
                     const std::function<void(int, const Tiling&)>& consume);

}  // namespace aztec
