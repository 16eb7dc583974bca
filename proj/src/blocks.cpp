#include "ddmorozov/blocks.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace ddm {

void validate(const BlockConfig& config, int grid_size) {
  if (config.min_jumps < 1 || config.max_jumps < config.min_jumps)
    throw config_error("block config: need 1 <= min_jumps <= max_jumps");
  if (config.min_plateau_width < 1)
    throw config_error("block config: min_plateau_width must be >= 1");
  if (config.max_height < config.min_height)
    throw config_error("block config: empty height range");
  // K jumps split the grid into K+1 plateaus of at least min_plateau_width
  // samples each.
  const long need = static_cast<long>(config.max_jumps + 1) * config.min_plateau_width;
  if (need > grid_size)
    throw config_error("block config: jump count infeasible for grid size " +
                       std::to_string(grid_size));
}

namespace {

// K distinct integers uniform in [0, range), Floyd's algorithm.
std::vector<std::uint64_t> sample_distinct(CounterRng& rng, std::uint64_t range, int k) {
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = range - k; j < range; ++j) {
    const std::uint64_t t = rng.next_below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace

Signal generate_block_signal(const BlockConfig& config, const TimeGrid& grid,
                             std::uint64_t index) {
  if (!grid.valid()) throw config_error("block signal: invalid time grid");
  const int d = grid.size;
  validate(config, d);

  auto rng = CounterRng::for_stream(config.seed, index);
  const int w = config.min_plateau_width;
  constexpr int kMaxRetries = 64;

  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    const int num_jumps =
        config.min_jumps +
        static_cast<int>(rng.next_below(config.max_jumps - config.min_jumps + 1));

    // Jump positions p_1 < ... < p_K with p_1 >= w, gaps >= w, p_K <= d - w.
    // Substituting u_i = p_i - i*w turns this into a non-decreasing tuple in
    // [0, d - (K+1)w], i.e. a uniform K-multiset of {0..M}; sampled via
    // distinct draws from {0..M+K-1}.
    const std::uint64_t m = static_cast<std::uint64_t>(d - (num_jumps + 1) * w);
    auto v = sample_distinct(rng, m + num_jumps, num_jumps);
    std::vector<int> jumps(num_jumps);
    for (int i = 0; i < num_jumps; ++i)
      jumps[i] = static_cast<int>(v[i]) - i + (i + 1) * w;

    std::vector<double> level(num_jumps + 1);
    bool degenerate = false;
    for (int p = 0; p <= num_jumps; ++p) {
      level[p] = rng.next_in(config.min_height, config.max_height);
      // An exact tie with the previous plateau would merge them and lose a
      // jump; redraw (probability ~0 for non-degenerate ranges).
      int redraws = 0;
      while (p > 0 && level[p] == level[p - 1] && redraws++ < 16)
        level[p] = rng.next_in(config.min_height, config.max_height);
      if (p > 0 && level[p] == level[p - 1]) {
        degenerate = true;
        break;
      }
    }
    if (degenerate) continue;

    Vec values(d);
    int plateau = 0;
    for (int k = 0; k < d; ++k) {
      while (plateau < num_jumps && k >= jumps[plateau]) ++plateau;
      values[k] = level[plateau];
    }

    const double peak = values.maxCoeff();
    if (!(peak > 0.0)) continue;  // cannot scale to max == 1; redraw
    values /= peak;
    return make_signal(std::move(values), grid);
  }
  throw config_error("block signal: no scalable draw after bounded retries "
                     "(height range cannot produce a positive maximum?)");
}

}  // namespace ddm
