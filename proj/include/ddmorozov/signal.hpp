#pragma once

#include "ddmorozov/common.hpp"

namespace ddm {

/// Uniform time grid t_k = t0 + k*dt, k = 0..size-1.
struct TimeGrid {
  int size = 0;
  double t0 = 0.0;
  double dt = 0.0;

  double time(int k) const { return t0 + k * dt; }
  double span() const { return (size - 1) * dt; }
  bool valid() const { return size > 0 && dt > 0.0; }
};

/// Real-valued time-discretized signal with grid metadata.
struct Signal {
  Vec values;
  double t0 = 0.0;
  double dt = 1.0;

  int size() const { return static_cast<int>(values.size()); }
  TimeGrid grid() const { return TimeGrid{size(), t0, dt}; }
};

inline Signal make_signal(Vec v, const TimeGrid& g) {
  Signal s;
  s.values = std::move(v);
  s.t0 = g.t0;
  s.dt = g.dt;
  return s;
}

}  // namespace ddm
