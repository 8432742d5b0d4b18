#pragma once

#include "auris/sim/clip.hpp"

namespace auris::pipeline {

/// Calibrated level of a window: 20*log10(rms of the channel-mean signal)
/// plus the calibration offset (raw digital level can never "reach 60" on its
/// own). All-zero input gives -inf and never passes a gate.
double rms_db(const sim::MultiChannelClip& clip, double calibration_offset_db);

}  // namespace auris::pipeline
