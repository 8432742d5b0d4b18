#pragma once

#include <filesystem>
#include <string>

#include "auris/sim/clip.hpp"

namespace auris::io {

enum class WavEncoding { kPcm16, kFloat32 };

/// Writes the 4 channels interleaved. Samples are expected within [-1, 1].
void write_wav(const std::filesystem::path& path, const sim::MultiChannelClip& clip,
               WavEncoding encoding = WavEncoding::kFloat32);

/// Reads a 4-channel WAV (16-bit PCM or 32-bit IEEE float). The label is left
/// unset; callers read it from the sidecar manifest.
sim::MultiChannelClip read_wav(const std::filesystem::path& path);

}  // namespace auris::io
