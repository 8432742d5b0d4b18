#include "auris/sim/dataset.hpp"

#include <cmath>
#include <limits>

#include "auris/common/rng.hpp"

namespace auris::sim {

SourceSpec sample_source(const DatasetConfig& cfg, DirectionClass cls, std::uint64_t clip_seed) {
  Rng rng(clip_seed);
  SourceSpec src;
  src.direction_class = cls;

  if (cls == DirectionClass::kSelf) {
    src.distance_m = rng.uniform(cfg.self_distance_min_m, cfg.self_distance_max_m);
    src.azimuth_deg = 0.0;
    src.level_gain_db = cfg.self_level_gain_db;
  } else {
    const double center = sector_center_deg(cls);
    const double half = kSectorWidthDeg / 2.0 - cfg.azimuth_margin_deg;
    src.azimuth_deg = normalize_azimuth_deg(center + rng.uniform(-half, half));
    src.distance_m = rng.uniform(cfg.distance_min_m, cfg.distance_max_m);
    src.level_gain_db = 0.0;
  }

  const double wsum = cfg.w_band_noise + cfg.w_chirp + cfg.w_pure_tone;
  const double u = rng.uniform() * wsum;
  if (u < cfg.w_band_noise) {
    src.signal_kind = SignalKind::kBandNoise;
  } else if (u < cfg.w_band_noise + cfg.w_chirp) {
    src.signal_kind = SignalKind::kChirp;
  } else {
    src.signal_kind = SignalKind::kPureTone;
  }

  if (src.signal_kind == SignalKind::kPureTone) {
    src.freq_lo_hz = rng.uniform(cfg.tone_min_hz, cfg.tone_max_hz);
    src.freq_hi_hz = src.freq_lo_hz;
  } else {
    src.freq_lo_hz = rng.uniform(cfg.band_lo_min_hz, cfg.band_lo_max_hz);
    src.freq_hi_hz = rng.uniform(cfg.band_hi_min_hz, cfg.band_hi_max_hz);
  }

  src.snr_db = cfg.noiseless ? std::numeric_limits<double>::infinity()
                             : rng.uniform(cfg.snr_min_db, cfg.snr_max_db);
  return src;
}

std::vector<SourceSpec> dataset_sources(const DatasetConfig& cfg, int per_class, std::uint64_t seed) {
  if (per_class < 1) throw DomainError("array-sim", "make_dataset", "per_class must be >= 1");
  std::vector<SourceSpec> out;
  out.reserve(kNumDirectionClasses * static_cast<std::size_t>(per_class));
  std::uint64_t index = 0;
  for (std::size_t c = 0; c < kNumDirectionClasses; ++c) {
    for (int i = 0; i < per_class; ++i, ++index) {
      out.push_back(sample_source(cfg, static_cast<DirectionClass>(c), derive_seed(seed, "clip-params", index)));
    }
  }
  return out;
}

std::vector<MultiChannelClip> make_dataset(const ArrayGeometry& geometry, const DatasetConfig& cfg,
                                           int per_class, double duration_s, double sample_rate,
                                           std::uint64_t seed) {
  const auto sources = dataset_sources(cfg, per_class, seed);
  std::vector<MultiChannelClip> clips;
  clips.reserve(sources.size());
  for (std::size_t i = 0; i < sources.size(); ++i) {
    clips.push_back(synth_clip(geometry, sources[i], duration_s, sample_rate, derive_seed(seed, "clip-synth", i)));
  }
  return clips;
}

}  // namespace auris::sim
