#include "auris/fusion/bbox.hpp"

#include <algorithm>

namespace auris::fusion {

void LocalizationMap::validate() const {
  if (height < 1 || width < 1) throw DomainError("fusion", "LocalizationMap", "map needs H,W >= 1");
  if (values.size() != height * width) {
    throw DomainError("fusion", "LocalizationMap", "value count does not match H*W");
  }
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw DomainError("fusion", "LocalizationMap", "map values must lie in [0, 1]");
    }
  }
}

std::vector<std::uint8_t> threshold_map(const LocalizationMap& map, double tau) {
  map.validate();
  std::vector<std::uint8_t> grid(map.values.size());
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = map.values[i] > tau ? 1 : 0;
  return grid;
}

std::optional<BBox> pseudo_bbox(const std::vector<std::uint8_t>& grid, std::size_t height, std::size_t width) {
  std::size_t min_r = height, max_r = 0, min_c = width, max_c = 0;
  bool any = false;
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      if (grid[r * width + c]) {
        any = true;
        min_r = std::min(min_r, r);
        max_r = std::max(max_r, r);
        min_c = std::min(min_c, c);
        max_c = std::max(max_c, c);
      }
    }
  }
  if (!any) return std::nullopt;
  return BBox{static_cast<int>(min_c), static_cast<int>(min_r), static_cast<int>(max_c - min_c + 1),
              static_cast<int>(max_r - min_r + 1)};
}

double iou(const BBox& a, const BBox& b) {
  a.validate();
  b.validate();
  const int ix = std::max(a.x, b.x);
  const int iy = std::max(a.y, b.y);
  const int ix2 = std::min(a.x + a.w, b.x + b.w);
  const int iy2 = std::min(a.y + a.h, b.y + b.h);
  const long long iw = std::max(0, ix2 - ix);
  const long long ih = std::max(0, iy2 - iy);
  const long long inter = iw * ih;
  if (inter == 0) return 0.0;
  const long long uni = static_cast<long long>(a.w) * a.h + static_cast<long long>(b.w) * b.h - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace auris::fusion
