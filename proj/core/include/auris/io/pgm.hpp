#pragma once

#include <filesystem>

#include "auris/fusion/bbox.hpp"

namespace auris::io {

/// Binary PGM (P5, maxval 255); pixel/255 becomes the map value.
fusion::LocalizationMap read_pgm(const std::filesystem::path& path);
void write_pgm(const std::filesystem::path& path, const fusion::LocalizationMap& map);

/// Loads a localization map from either format by extension:
/// .pgm -> P5, anything else -> the rank-3 tensor container with dims (1,H,W).
fusion::LocalizationMap read_localization_map(const std::filesystem::path& path);

}  // namespace auris::io
