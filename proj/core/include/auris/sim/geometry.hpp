#pragma once

#include <array>
#include <cmath>

#include "auris/common/error.hpp"

namespace auris::sim {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
};

/// Four microphones in the device frame (x = right, y = front, z = up),
/// arranged as a non-degenerate rectangle, plus the speed of sound.
struct ArrayGeometry {
  std::array<Vec3, 4> mic_positions;
  double speed_of_sound = 343.0;

  Vec3 centroid() const {
    Vec3 c;
    for (const auto& m : mic_positions) c = c + m;
    return c * 0.25;
  }

  double max_pair_spacing() const {
    double d = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) d = std::max(d, (mic_positions[i] - mic_positions[j]).norm());
    return d;
  }

  /// Throws unless the four positions form a rectangle: some pairing into two
  /// diagonals with coincident midpoints and equal lengths (tolerance 1e-9 m).
  void validate() const;

  /// Rectangle width (left-right) x depth (front-back), centered on the
  /// origin in the z = 0 plane.
  static ArrayGeometry rectangular(double width_m = 0.14, double depth_m = 0.12,
                                   double speed_of_sound = 343.0);
};

}  // namespace auris::sim
