#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace auris::io {

/// Rank-3 float32 tensor container. Layout, bit-exact:
///   bytes 0..3   magic "ATF1"
///   bytes 4..15  three uint32 little-endian dims (d0, d1, d2)
///   bytes 16..   d0*d1*d2 float32 little-endian values, row-major
struct TensorFile {
  std::array<std::uint32_t, 3> dims{};
  std::vector<float> values;
};

void write_tensor(const std::filesystem::path& path, const TensorFile& t);
TensorFile read_tensor(const std::filesystem::path& path);

}  // namespace auris::io
