#include "auris/sim/geometry.hpp"

namespace auris::sim {

namespace {
constexpr double kTol = 1e-9;

// (i,j) and (k,l) as the two diagonals.
bool diagonal_pairing_is_rectangle(const std::array<Vec3, 4>& p, int i, int j, int k, int l) {
  const Vec3 mid1 = (p[i] + p[j]) * 0.5;
  const Vec3 mid2 = (p[k] + p[l]) * 0.5;
  if ((mid1 - mid2).norm() > kTol) return false;  // not even a parallelogram
  const double d1 = (p[i] - p[j]).norm();
  const double d2 = (p[k] - p[l]).norm();
  return std::abs(d1 - d2) <= kTol && d1 > kTol;
}
}  // namespace

void ArrayGeometry::validate() const {
  if (speed_of_sound <= 0.0) {
    throw DomainError("array-sim", "ArrayGeometry", "speed_of_sound must be > 0");
  }
  const auto& p = mic_positions;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if ((p[i] - p[j]).norm() <= kTol) {
        throw DomainError("array-sim", "ArrayGeometry", "microphone positions must be pairwise distinct");
      }
    }
  }
  // A parallelogram (diagonals share a midpoint) with equal diagonals is a
  // rectangle; try the three possible diagonal pairings.
  const bool ok = diagonal_pairing_is_rectangle(p, 0, 1, 2, 3) ||
                  diagonal_pairing_is_rectangle(p, 0, 2, 1, 3) ||
                  diagonal_pairing_is_rectangle(p, 0, 3, 1, 2);
  if (!ok) {
    throw DomainError("array-sim", "ArrayGeometry",
                      "microphone positions do not form a non-degenerate rectangle");
  }
}

ArrayGeometry ArrayGeometry::rectangular(double width_m, double depth_m, double speed_of_sound) {
  ArrayGeometry g;
  g.speed_of_sound = speed_of_sound;
  const double hw = width_m / 2.0;
  const double hd = depth_m / 2.0;
  // mic 1 front-left, mic 2 front-right, mic 3 back-left, mic 4 back-right
  g.mic_positions = {Vec3{-hw, hd, 0.0}, Vec3{hw, hd, 0.0}, Vec3{-hw, -hd, 0.0}, Vec3{hw, -hd, 0.0}};
  g.validate();
  return g;
}

}  // namespace auris::sim
