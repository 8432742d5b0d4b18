#include "auris/io/tensor_file.hpp"

#include <cstring>
#include <fstream>

#include "auris/common/error.hpp"

namespace auris::io {

namespace {
constexpr char kMagic[4] = {'A', 'T', 'F', '1'};

void put_u32(std::ofstream& out, std::uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
               static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(b, 4);
}

std::uint32_t get_u32(std::ifstream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}
}  // namespace

void write_tensor(const std::filesystem::path& path, const TensorFile& t) {
  const std::size_t n = static_cast<std::size_t>(t.dims[0]) * t.dims[1] * t.dims[2];
  if (t.values.size() != n) {
    throw DomainError("io", "write_tensor", "value count does not match dims");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("io", "write_tensor", "cannot open for writing: " + path.string());
  out.write(kMagic, 4);
  for (std::uint32_t d : t.dims) put_u32(out, d);
  for (float v : t.values) {
    std::uint32_t u;
    std::memcpy(&u, &v, 4);
    put_u32(out, u);
  }
  if (!out) throw DomainError("io", "write_tensor", "write failed: " + path.string());
}

TensorFile read_tensor(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("io", "read_tensor", "cannot open: " + path.string());
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) {
    throw DomainError("io", "read_tensor", "bad magic in " + path.string());
  }
  TensorFile t;
  for (auto& d : t.dims) d = get_u32(in);
  const std::size_t n = static_cast<std::size_t>(t.dims[0]) * t.dims[1] * t.dims[2];
  t.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t u = get_u32(in);
    float f;
    std::memcpy(&f, &u, 4);
    t.values[i] = f;
  }
  if (!in) throw DomainError("io", "read_tensor", "truncated tensor file: " + path.string());
  return t;
}

}  // namespace auris::io
