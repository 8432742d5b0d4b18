#pragma once

#include <cstdint>
#include <vector>

#include "auris/sim/clip.hpp"
#include "auris/sim/geometry.hpp"
#include "auris/sim/source.hpp"
#include "auris/sim/synth.hpp"

namespace auris::sim {

/// Sampling ranges for the generated dataset. These stand in for the paper's
/// unstated recording conditions, so everything is configurable.
struct DatasetConfig {
  double distance_min_m = 1.5;
  double distance_max_m = 3.5;
  /// Keep sampled azimuths this far away from sector edges. Sector boundaries
  /// are ambiguous by definition; a small margin keeps labels well-posed.
  double azimuth_margin_deg = 2.0;
  double self_distance_min_m = 0.08;
  double self_distance_max_m = 0.13;
  double self_level_gain_db = 20.0;
  double snr_min_db = 15.0;
  double snr_max_db = 30.0;
  bool noiseless = false;
  /// Signal-kind mixture weights.
  double w_band_noise = 0.5;
  double w_chirp = 0.3;
  double w_pure_tone = 0.2;
  /// Defaults keep source energy below every mic pair's spatial aliasing
  /// limit (~0.88 kHz for the default rectangle's diagonal), so the classical
  /// estimator always sees unambiguous phase.
  double tone_min_hz = 200.0;
  double tone_max_hz = 850.0;
  double band_lo_min_hz = 250.0;
  double band_lo_max_hz = 700.0;
  double band_hi_min_hz = 2500.0;
  double band_hi_max_hz = 7000.0;
};

/// Draws the per-clip source parameters for clip `index` of class `cls`.
SourceSpec sample_source(const DatasetConfig& cfg, DirectionClass cls, std::uint64_t clip_seed);

/// 9 * per_class labeled clips (class-major order, per_class each),
/// deterministic given seed.
std::vector<MultiChannelClip> make_dataset(const ArrayGeometry& geometry, const DatasetConfig& cfg,
                                           int per_class, double duration_s, double sample_rate,
                                           std::uint64_t seed);

/// The SourceSpec used for each clip of make_dataset, in the same order.
std::vector<SourceSpec> dataset_sources(const DatasetConfig& cfg, int per_class, std::uint64_t seed);

}  // namespace auris::sim
