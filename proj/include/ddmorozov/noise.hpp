#pragma once

#include "ddmorozov/rng.hpp"
#include "ddmorozov/signal.hpp"

#include <cstdint>

namespace ddm {

/// One reproducible realization of measurement noise.
struct NoiseDraw {
  Vec values;
  double sigma = 0.0;  ///< relative noise parameter
  std::uint64_t seed = 0;
};

/// Absolute noise standard deviation: sigma times the mean of |clean data|.
/// The absolute-value mean keeps the scale strictly positive for oscillating
/// data.
double noise_scale(const Vec& clean_data, double sigma);

/// I.i.d. zero-mean Gaussian noise with standard deviation
/// noise_scale(clean_data, sigma). Identical (clean_data, sigma, seed) give
/// identical draws.
NoiseDraw draw_noise(const Signal& clean_data, double sigma, std::uint64_t seed);

}  // namespace ddm
