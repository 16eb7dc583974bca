#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ddm {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Invalid user input: bad parameters, infeasible configs, malformed files.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerical failure: divergence, non-finite intermediates, factorization breakdown.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Filesystem / serialization failure.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// FNV-1a on raw bytes; used for content hashes of cached artifacts.
inline std::uint64_t fnv1a64(const void* data, std::size_t n,
                             std::uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t hash_doubles(const double* v, std::size_t n,
                                  std::uint64_t h = 0xcbf29ce484222325ull) {
  return fnv1a64(v, n * sizeof(double), h);
}

inline std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace ddm
