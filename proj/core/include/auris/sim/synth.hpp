#pragma once

#include <cstdint>
#include <vector>

#include "auris/sim/clip.hpp"
#include "auris/sim/geometry.hpp"
#include "auris/sim/source.hpp"

namespace auris::sim {

/// Position of the emitter in the device frame. Compass classes sit on the
/// z = 0 plane at `distance` from the array centroid; `self` sits `distance`
/// below the centroid (the wearer's mouth).
Vec3 source_position(const ArrayGeometry& geometry, const SourceSpec& source);

/// Exact propagation delay from the source position to each microphone, s.
std::array<double, 4> propagation_delays(const ArrayGeometry& geometry, const SourceSpec& source);

/// Synthesizes one labeled 4-channel clip: the source waveform delayed by
/// tau_i = |source_pos - mic_i| / c per channel (fractional delays are exact:
/// closed-form evaluation for tones/chirps, frequency-domain phase shifts for
/// band noise), attenuated by 1/distance per microphone, plus white sensor
/// noise at source.snr_db. Peak-normalized to <= 1 across channels.
/// Deterministic given seed.
MultiChannelClip synth_clip(const ArrayGeometry& geometry, const SourceSpec& source, double duration_s,
                            double sample_rate, std::uint64_t seed);

/// Scales each channel's deviation from the 4-channel mean by `gain`
/// (gain >= 1), then renormalizes the peak to <= 1.
MultiChannelClip amplify_differences(const MultiChannelClip& clip, double gain);

}  // namespace auris::sim
