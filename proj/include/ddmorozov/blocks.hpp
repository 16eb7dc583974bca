#pragma once

#include "ddmorozov/rng.hpp"
#include "ddmorozov/signal.hpp"

#include <cstdint>

namespace ddm {

/// Parameters of the piecewise-constant test/training signal class.
struct BlockConfig {
  int min_jumps = 3;  ///< inclusive bounds on the number of jumps
  int max_jumps = 10;
  double min_height = -1.0;  ///< plateau levels drawn uniformly from this range
  double max_height = 1.0;
  int min_plateau_width = 12;  ///< samples; every plateau is at least this wide
  std::uint64_t seed = 0;
};

void validate(const BlockConfig& config, int grid_size);

/// Deterministic piecewise-constant signal with K jumps, K uniform in
/// [min_jumps, max_jumps], jump locations uniform among all placements that
/// respect min_plateau_width, and plateau levels uniform in the height range.
/// The result is rescaled so that max(values) == 1 exactly. (config, index)
/// fully determines the output.
Signal generate_block_signal(const BlockConfig& config, const TimeGrid& grid,
                             std::uint64_t index);

}  // namespace ddm
