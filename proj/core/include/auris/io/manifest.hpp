#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "auris/common/direction.hpp"
#include "auris/dsp/stft.hpp"
#include "auris/sim/source.hpp"

namespace auris::io {

/// Sidecar metadata written next to each WAV. A null snr_db in the JSON means
/// noiseless (+inf).
struct ClipManifest {
  DirectionClass label = DirectionClass::kFront;
  double azimuth_deg = 0.0;
  double distance_m = 0.0;
  double snr_db = 0.0;
  std::uint64_t seed = 0;
};

void write_clip_manifest(const std::filesystem::path& path, const ClipManifest& m);
ClipManifest read_clip_manifest(const std::filesystem::path& path);

/// WAV + sidecar pairs found in a directory, sorted by filename.
struct ClipEntry {
  std::filesystem::path wav;
  ClipManifest manifest;
};
std::vector<ClipEntry> scan_clip_dir(const std::filesystem::path& dir);

/// Featurize output manifest: the STFT configuration (and its hash, which
/// checkpoints must match) plus one row per tensor file.
struct FeatureManifest {
  dsp::StftConfig stft;
  double sample_rate = 16000.0;
  struct Item {
    std::string tensor_file;
    DirectionClass label = DirectionClass::kFront;
  };
  std::vector<Item> items;
};

void write_feature_manifest(const std::filesystem::path& path, const FeatureManifest& m);
FeatureManifest read_feature_manifest(const std::filesystem::path& path);

/// Stable hash of the canonical JSON encoding of an STFT configuration.
std::uint64_t stft_config_hash(const dsp::StftConfig& cfg);

}  // namespace auris::io
