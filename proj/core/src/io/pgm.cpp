#include "auris/io/pgm.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "auris/common/error.hpp"
#include "auris/io/tensor_file.hpp"

namespace auris::io {

namespace {

// next whitespace-delimited token, skipping '#' comment lines
std::string next_token(std::istream& in) {
  std::string tok;
  char c;
  while (in.get(c)) {
    if (c == '#') {
      std::string dummy;
      std::getline(in, dummy);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!tok.empty()) return tok;
      continue;
    }
    tok.push_back(c);
  }
  return tok;
}

}  // namespace

fusion::LocalizationMap read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("io", "read_pgm", "cannot open: " + path.string());

  if (next_token(in) != "P5") throw DomainError("io", "read_pgm", "not a binary PGM (P5): " + path.string());
  const std::string ws = next_token(in), hs = next_token(in), ms = next_token(in);
  std::size_t w = 0, h = 0;
  int maxval = 0;
  try {
    w = std::stoul(ws);
    h = std::stoul(hs);
    maxval = std::stoi(ms);
  } catch (...) {
    throw DomainError("io", "read_pgm", "malformed PGM header: " + path.string());
  }
  if (w == 0 || h == 0 || maxval != 255) {
    throw DomainError("io", "read_pgm", "expected 8-bit PGM with maxval 255: " + path.string());
  }

  fusion::LocalizationMap map;
  map.width = w;
  map.height = h;
  map.values.resize(w * h);
  std::vector<unsigned char> raw(w * h);
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (!in) throw DomainError("io", "read_pgm", "truncated pixel data: " + path.string());
  for (std::size_t i = 0; i < raw.size(); ++i) map.values[i] = raw[i] / 255.0;
  return map;
}

void write_pgm(const std::filesystem::path& path, const fusion::LocalizationMap& map) {
  map.validate();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("io", "write_pgm", "cannot open for writing: " + path.string());
  out << "P5\n" << map.width << " " << map.height << "\n255\n";
  for (double v : map.values) {
    out.put(static_cast<char>(static_cast<unsigned char>(std::lround(v * 255.0))));
  }
}

fusion::LocalizationMap read_localization_map(const std::filesystem::path& path) {
  if (path.extension() == ".pgm") return read_pgm(path);
  const TensorFile t = read_tensor(path);
  if (t.dims[0] != 1) {
    throw DomainError("io", "read_localization_map", "tensor map must have dims (1, H, W)");
  }
  fusion::LocalizationMap map;
  map.height = t.dims[1];
  map.width = t.dims[2];
  map.values.assign(t.values.begin(), t.values.end());
  map.validate();
  return map;
}

}  // namespace auris::io
