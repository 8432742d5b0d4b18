#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "auris/common/error.hpp"
#include "auris/sim/clip.hpp"

namespace auris::dsp {

enum class WindowFn { kHann, kHamming, kRect };

std::string window_fn_name(WindowFn w);
WindowFn window_fn_from_name(const std::string& s);

struct StftConfig {
  std::size_t window_len = 512;  // N, even
  std::size_t hop = 256;         // H, 0 < H <= N
  WindowFn window_fn = WindowFn::kHann;

  void validate() const {
    if (window_len == 0 || window_len % 2 != 0) {
      throw DomainError("phase-features", "StftConfig", "window_len must be even and > 0");
    }
    if (hop == 0 || hop > window_len) {
      throw DomainError("phase-features", "StftConfig", "hop must satisfy 0 < hop <= window_len");
    }
  }

  std::size_t num_bins() const { return window_len / 2 + 1; }

  /// Full frames only, no padding: floor((len - N)/H) + 1.
  std::size_t num_frames(std::size_t signal_len) const {
    if (signal_len < window_len) return 0;
    return (signal_len - window_len) / hop + 1;
  }

  bool operator==(const StftConfig&) const = default;
};

/// Complex one-sided time-frequency matrix, F x T row-major (bin rows).
struct Spectrogram {
  std::size_t num_bins = 0;    // F = N/2 + 1
  std::size_t num_frames = 0;  // T
  double freq_resolution = 0.0;
  double frame_rate = 0.0;
  std::vector<std::complex<double>> bins;

  std::complex<double>& at(std::size_t f, std::size_t t) { return bins[f * num_frames + t]; }
  std::complex<double> at(std::size_t f, std::size_t t) const { return bins[f * num_frames + t]; }
};

/// Stack of the three reference-mic phase-difference maps, 3 x F x T,
/// entries wrapped to (-pi, pi].
struct PhaseMatrix {
  std::size_t num_bins = 0;
  std::size_t num_frames = 0;
  std::vector<double> values;  // row-major (pair, bin, frame)

  double& at(std::size_t p, std::size_t f, std::size_t t) {
    return values[(p * num_bins + f) * num_frames + t];
  }
  double at(std::size_t p, std::size_t f, std::size_t t) const {
    return values[(p * num_bins + f) * num_frames + t];
  }
};

/// Wraps an angle to (-pi, pi].
double wrap_phase(double x);

/// Phase of a complex bin; 0 when the magnitude is below 1e-12 (instead of
/// the meaningless angle of ~0).
double bin_phase(const std::complex<double>& v);

/// Windowed, hopped one-sided DFT: X(f,tau) = sum_n x(tau*H + n) w(n) e^{-j 2 pi n f / N}.
/// Requires at least one full frame.
Spectrogram stft(const std::vector<double>& signal, double sample_rate, const StftConfig& cfg);

/// Entrywise phase(ref) - phase(other), wrapped to (-pi, pi]. F x T row-major.
std::vector<double> ipd(const Spectrogram& ref, const Spectrogram& other);

/// IPD of channels 2..4 against channel 1, stacked in that order.
PhaseMatrix phase_matrix(const sim::MultiChannelClip& clip, const StftConfig& cfg);

}  // namespace auris::dsp
