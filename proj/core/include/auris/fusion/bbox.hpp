#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "auris/common/error.hpp"

namespace auris::fusion {

/// Axis-aligned pixel rectangle, y down, integer pixel semantics:
/// area = w * h, edge-touching boxes do not intersect.
struct BBox {
  int x = 0;
  int y = 0;
  int w = 1;
  int h = 1;

  bool operator==(const BBox&) const = default;

  void validate() const {
    if (w < 1 || h < 1) throw DomainError("fusion", "BBox", "box needs w >= 1 and h >= 1");
  }
};

/// H x W grid with values in [0, 1].
struct LocalizationMap {
  std::size_t height = 0;
  std::size_t width = 0;
  std::vector<double> values;  // row-major

  double at(std::size_t r, std::size_t c) const { return values[r * width + c]; }
  double& at(std::size_t r, std::size_t c) { return values[r * width + c]; }

  void validate() const;
};

struct Candidate {
  BBox box;
  std::string class_name;
  double confidence = 0.0;
};

struct CandidateSet {
  std::vector<Candidate> boxes;
  int image_w = 0;
  int image_h = 0;
};

/// Binary grid: cell = 1 iff value > tau (strict).
std::vector<std::uint8_t> threshold_map(const LocalizationMap& map, double tau);

/// Tightest box covering all positive cells; nullopt when there are none.
std::optional<BBox> pseudo_bbox(const std::vector<std::uint8_t>& grid, std::size_t height, std::size_t width);

/// Intersection over union, in [0, 1]; disjoint boxes give 0.
double iou(const BBox& a, const BBox& b);

}  // namespace auris::fusion
