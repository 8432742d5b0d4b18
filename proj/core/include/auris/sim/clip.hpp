#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "auris/common/direction.hpp"

namespace auris::sim {

/// Synchronized 4-channel audio, amplitudes within [-1, 1].
struct MultiChannelClip {
  std::array<std::vector<double>, 4> channels;
  double sample_rate = 16000.0;
  double duration_s = 0.0;
  std::optional<DirectionClass> label;

  std::size_t frames() const { return channels[0].size(); }

  /// Mean of the four channels, sample by sample.
  std::vector<double> mono_mixdown() const {
    std::vector<double> m(frames(), 0.0);
    for (const auto& ch : channels)
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += ch[i] * 0.25;
    return m;
  }

  double peak() const {
    double p = 0.0;
    for (const auto& ch : channels)
      for (double v : ch) p = std::max(p, std::abs(v));
    return p;
  }
};

}  // namespace auris::sim
