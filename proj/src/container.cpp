#include "ddmorozov/container.hpp"

#include <bit>
#include <cstring>
#include <fstream>

namespace ddm {

namespace {

constexpr char kMagic[4] = {'D', 'D', 'M', 'Z'};

void put_u32(std::ostream& os, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& os, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(b), 8);
}

void put_f64_array(std::ostream& os, const double* v, std::size_t n) {
  static_assert(sizeof(double) == 8);
  if constexpr (std::endian::native == std::endian::little) {
    os.write(reinterpret_cast<const char*>(v), static_cast<std::streamsize>(n * 8));
  } else {
    for (std::size_t i = 0; i < n; ++i) put_u64(os, std::bit_cast<std::uint64_t>(v[i]));
  }
}

std::uint32_t get_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  if (!is) throw io_error("container: truncated file");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return v;
}

std::uint64_t get_u64(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  if (!is) throw io_error("container: truncated file");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}

void get_f64_array(std::istream& is, double* v, std::size_t n) {
  if constexpr (std::endian::native == std::endian::little) {
    is.read(reinterpret_cast<char*>(v), static_cast<std::streamsize>(n * 8));
    if (!is) throw io_error("container: truncated payload");
  } else {
    for (std::size_t i = 0; i < n; ++i) v[i] = std::bit_cast<double>(get_u64(is));
  }
}

}  // namespace

void save_container(const std::filesystem::path& path, const Container& c) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw io_error("container: cannot open for writing: " + path.string());
  os.write(kMagic, 4);
  put_u32(os, kContainerVersion);
  put_u32(os, c.kind);
  const std::string meta = c.meta.dump();
  put_u64(os, meta.size());
  os.write(meta.data(), static_cast<std::streamsize>(meta.size()));
  put_u64(os, c.arrays.size());
  for (const auto& a : c.arrays) {
    put_u64(os, static_cast<std::uint64_t>(a.size()));
    put_f64_array(os, a.data(), static_cast<std::size_t>(a.size()));
  }
  if (!os) throw io_error("container: write failed: " + path.string());
}

Container load_container(const std::filesystem::path& path, std::uint32_t expected_kind) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw io_error("container: cannot open: " + path.string());
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw io_error("container: bad magic in " + path.string());
  const std::uint32_t version = get_u32(is);
  if (version != kContainerVersion)
    throw io_error("container: version mismatch (" + std::to_string(version) +
                   " != " + std::to_string(kContainerVersion) + ") in " + path.string());
  Container c;
  c.kind = get_u32(is);
  if (c.kind != expected_kind)
    throw io_error("container: kind mismatch (got " + std::to_string(c.kind) +
                   ", expected " + std::to_string(expected_kind) + ") in " + path.string());
  const std::uint64_t meta_len = get_u64(is);
  std::string meta(meta_len, '\0');
  is.read(meta.data(), static_cast<std::streamsize>(meta_len));
  if (!is) throw io_error("container: truncated metadata in " + path.string());
  try {
    c.meta = nlohmann::json::parse(meta);
  } catch (const nlohmann::json::exception& e) {
    throw io_error("container: corrupt metadata in " + path.string() + ": " + e.what());
  }
  const std::uint64_t count = get_u64(is);
  c.arrays.resize(count);
  for (auto& a : c.arrays) {
    const std::uint64_t n = get_u64(is);
    a.resize(static_cast<Eigen::Index>(n));
    get_f64_array(is, a.data(), n);
  }
  return c;
}

}  // namespace ddm
