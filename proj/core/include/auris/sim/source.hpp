#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "auris/common/direction.hpp"

namespace auris::sim {

enum class SignalKind { kPureTone, kBandNoise, kChirp };

inline std::string signal_kind_name(SignalKind k) {
  switch (k) {
    case SignalKind::kPureTone: return "pure_tone";
    case SignalKind::kBandNoise: return "band_noise";
    case SignalKind::kChirp: return "chirp";
  }
  return "?";
}

inline SignalKind signal_kind_from_name(const std::string& s) {
  if (s == "pure_tone") return SignalKind::kPureTone;
  if (s == "band_noise") return SignalKind::kBandNoise;
  if (s == "chirp") return SignalKind::kChirp;
  throw DomainError("array-sim", "signal_kind_from_name", "unknown signal kind: " + s);
}

/// One emitted source: a direction class, the concrete azimuth inside the
/// class sector, a distance, the waveform kind and an SNR for the added
/// sensor noise (+inf = noiseless).
struct SourceSpec {
  DirectionClass direction_class = DirectionClass::kFront;
  double azimuth_deg = 0.0;  // ignored for `self`
  double distance_m = 2.0;
  SignalKind signal_kind = SignalKind::kBandNoise;
  double freq_lo_hz = 300.0;   // tone frequency for pure_tone; band edge otherwise
  double freq_hi_hz = 4000.0;  // unused for pure_tone
  double snr_db = std::numeric_limits<double>::infinity();
  /// Received amplitude gain in dB on top of the 1/distance law; used to give
  /// `self` its declared +20 dB level.
  double level_gain_db = 0.0;

  void validate() const {
    if (direction_class == DirectionClass::kSelf) {
      if (distance_m <= 0.0 || distance_m > 0.15) {
        throw DomainError("array-sim", "SourceSpec",
                          "`self` requires 0 < distance_m <= 0.15, got " + std::to_string(distance_m));
      }
      return;
    }
    if (distance_m <= 0.0) {
      throw DomainError("array-sim", "SourceSpec", "distance_m must be > 0");
    }
    if (!azimuth_in_sector(azimuth_deg, direction_class)) {
      throw DomainError("array-sim", "SourceSpec",
                        "azimuth " + std::to_string(azimuth_deg) + " deg is outside the sector of class " +
                            direction_name(direction_class));
    }
  }
};

}  // namespace auris::sim
