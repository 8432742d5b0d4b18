#pragma once

#include <cstdint>
#include <filesystem>

#include "auris/doa/model.hpp"

namespace auris::doa {

/// Trained model plus everything needed to reproduce its inputs. Binary file:
/// magic "ADM1", u32 version, u64 config hash, u32 tensor count, then per
/// tensor (u32 name length, name, u32 ndims, u32 dims..., float32 payload),
/// all little-endian. A JSON sidecar (<file>.json) duplicates the configs.
struct Checkpoint {
  NetConfig net;
  dsp::StftConfig stft;
  double sample_rate = 16000.0;
  ModelParams params;
};

/// Stable hash over the canonical JSON of (net, stft, sample_rate); a
/// checkpoint only evaluates against features with a matching STFT hash.
std::uint64_t checkpoint_config_hash(const NetConfig& net, const dsp::StftConfig& stft, double sample_rate);

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace auris::doa
