#include "auris/pipeline/gate.hpp"

#include <cmath>
#include <limits>

#include "auris/common/error.hpp"

namespace auris::pipeline {

double rms_db(const sim::MultiChannelClip& clip, double calibration_offset_db) {
  const std::size_t n = clip.frames();
  if (n == 0) throw DomainError("pipeline-loop", "rms_db", "empty clip");
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double mean = 0.0;
    for (const auto& ch : clip.channels) mean += ch[i] * 0.25;
    sum += mean * mean;
  }
  const double rms = std::sqrt(sum / static_cast<double>(n));
  if (rms <= 0.0) return -std::numeric_limits<double>::infinity();
  return 20.0 * std::log10(rms) + calibration_offset_db;
}

}  // namespace auris::pipeline
