#pragma once

#include <array>

#include "auris/common/direction.hpp"
#include "auris/dsp/stft.hpp"
#include "auris/sim/clip.hpp"
#include "auris/sim/geometry.hpp"

namespace auris::doa {

/// Closed-form oracle settings. TDOAs come from the phase slope of the
/// time-averaged cross spectrum, fitted only below each pair's spatial
/// aliasing limit c/(2d) where the phase cannot wrap.
struct ClassicalConfig {
  double f_min_hz = 50.0;
  double aliasing_safety = 0.95;  // use bins below safety * c/(2d)
  /// Far-field plane waves fit with ||u|| near 1; the wearer's mouth sits
  /// below the array and yields near-zero TDOAs on every pair, so a tiny
  /// fitted direction vector flags `self`.
  double self_unorm_max = 0.4;
  /// Secondary trigger: poor far-field fit plus a loud clip.
  double self_residual_min = 0.5;
  double self_level_min_db = 75.0;
  double calibration_offset_db = 94.0;
};

struct ClassicalEstimate {
  DirectionClass direction = DirectionClass::kFront;
  double azimuth_deg = 0.0;
  std::array<double, 3> tdoa_s{};  // pairs (1,2), (1,3), (1,4)
  double u_norm = 0.0;
  double residual_rel = 0.0;
  double level_db = 0.0;
};

ClassicalEstimate classical_estimate(const sim::MultiChannelClip& clip, const sim::ArrayGeometry& geometry,
                                     const dsp::StftConfig& stft_cfg, const ClassicalConfig& cfg = {});

DirectionClass classical_doa(const sim::MultiChannelClip& clip, const sim::ArrayGeometry& geometry,
                             const dsp::StftConfig& stft_cfg, const ClassicalConfig& cfg = {});

}  // namespace auris::doa
