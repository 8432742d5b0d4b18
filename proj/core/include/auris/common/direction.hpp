#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>

#include "auris/common/error.hpp"

namespace auris {

/// The nine arrival classes: eight 45-degree compass sectors (front = 0
/// degrees, clockwise positive when viewed from above) plus `self`, the
/// wearer speaking.
enum class DirectionClass : int {
  kFront = 0,
  kFrontRight = 1,
  kRight = 2,
  kBackRight = 3,
  kBack = 4,
  kBackLeft = 5,
  kLeft = 6,
  kFrontLeft = 7,
  kSelf = 8,
};

inline constexpr std::size_t kNumDirectionClasses = 9;
inline constexpr std::size_t kNumCompassClasses = 8;
inline constexpr double kSectorWidthDeg = 45.0;

inline constexpr std::array<std::string_view, kNumDirectionClasses> kDirectionNames = {
    "front", "front-right", "right", "back-right", "back", "back-left", "left", "front-left", "self"};

inline std::string direction_name(DirectionClass c) {
  return std::string(kDirectionNames[static_cast<std::size_t>(c)]);
}

inline DirectionClass direction_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumDirectionClasses; ++i) {
    if (kDirectionNames[i] == name) return static_cast<DirectionClass>(i);
  }
  throw DomainError("common", "direction_from_name", "unknown direction class: " + std::string(name));
}

inline DirectionClass direction_from_index(int i) {
  if (i < 0 || i >= static_cast<int>(kNumDirectionClasses)) {
    throw DomainError("common", "direction_from_index", "direction index out of range: " + std::to_string(i));
  }
  return static_cast<DirectionClass>(i);
}

/// Normalizes an azimuth to [0, 360).
inline double normalize_azimuth_deg(double az) {
  double a = std::fmod(az, 360.0);
  if (a < 0) a += 360.0;
  return a;
}

/// Sector k spans [k*45 - 22.5, k*45 + 22.5) with front = 0 degrees.
inline DirectionClass sector_of_azimuth(double azimuth_deg) {
  const double a = normalize_azimuth_deg(azimuth_deg + kSectorWidthDeg / 2.0);
  int k = static_cast<int>(std::floor(a / kSectorWidthDeg));
  if (k >= 8) k = 0;
  return static_cast<DirectionClass>(k);
}

inline double sector_center_deg(DirectionClass c) {
  return static_cast<double>(static_cast<int>(c)) * kSectorWidthDeg;
}

inline bool azimuth_in_sector(double azimuth_deg, DirectionClass c) {
  return sector_of_azimuth(azimuth_deg) == c;
}

}  // namespace auris
