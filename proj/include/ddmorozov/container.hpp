#pragma once

#include "ddmorozov/common.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace ddm {

/// Self-describing binary container used by every cached artifact: a small
/// header (magic, version, kind, JSON metadata) followed by raw little-endian
/// 64-bit float arrays. Payload round trips are bit-exact.
struct Container {
  enum Kind : std::uint32_t {
    kSignalDataset = 1,
    kTrainingSet = 2,
    kOperator = 3,
    kSvd = 4,
    kNetworkWeights = 5,
  };

  std::uint32_t kind = 0;
  nlohmann::json meta;
  std::vector<Vec> arrays;
};

inline constexpr std::uint32_t kContainerVersion = 1;

void save_container(const std::filesystem::path& path, const Container& c);
Container load_container(const std::filesystem::path& path, std::uint32_t expected_kind);

}  // namespace ddm
