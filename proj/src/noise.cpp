#include "ddmorozov/noise.hpp"

namespace ddm {

double noise_scale(const Vec& clean_data, double sigma) {
  if (sigma < 0.0) throw config_error("draw_noise: sigma must be >= 0");
  if (clean_data.size() == 0) throw config_error("draw_noise: empty data");
  return sigma * clean_data.cwiseAbs().mean();
}

NoiseDraw draw_noise(const Signal& clean_data, double sigma, std::uint64_t seed) {
  const double s = noise_scale(clean_data.values, sigma);
  auto rng = CounterRng::for_stream(seed, 0x6e6f697365ull);  // "noise"
  NoiseDraw draw;
  draw.sigma = sigma;
  draw.seed = seed;
  draw.values.resize(clean_data.size());
  for (int k = 0; k < clean_data.size(); ++k) draw.values[k] = s * rng.next_gaussian();
  return draw;
}

}  // namespace ddm
