#include "auris/dsp/stft.hpp"

#include <cmath>
#include <numbers>

#include "auris/dsp/fft.hpp"

namespace auris::dsp {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kZeroMagnitude = 1e-12;

std::vector<double> make_window(WindowFn fn, std::size_t n) {
  std::vector<double> w(n, 1.0);
  switch (fn) {
    case WindowFn::kRect:
      break;
    case WindowFn::kHann:
      for (std::size_t i = 0; i < n; ++i) w[i] = 0.5 - 0.5 * std::cos(kTwoPi * i / n);
      break;
    case WindowFn::kHamming:
      for (std::size_t i = 0; i < n; ++i) w[i] = 0.54 - 0.46 * std::cos(kTwoPi * i / n);
      break;
  }
  return w;
}
}  // namespace

std::string window_fn_name(WindowFn w) {
  switch (w) {
    case WindowFn::kHann: return "hann";
    case WindowFn::kHamming: return "hamming";
    case WindowFn::kRect: return "rect";
  }
  return "?";
}

WindowFn window_fn_from_name(const std::string& s) {
  if (s == "hann") return WindowFn::kHann;
  if (s == "hamming") return WindowFn::kHamming;
  if (s == "rect") return WindowFn::kRect;
  throw DomainError("phase-features", "window_fn_from_name", "unknown window function: " + s);
}

double wrap_phase(double x) {
  double y = x - kTwoPi * std::floor((x + kPi) / kTwoPi);
  // floor puts y in [-pi, pi); fold the open edge onto +pi
  if (y <= -kPi) y = kPi;
  return y;
}

double bin_phase(const std::complex<double>& v) {
  if (std::abs(v) < kZeroMagnitude) return 0.0;
  return std::arg(v);
}

Spectrogram stft(const std::vector<double>& signal, double sample_rate, const StftConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.window_len;
  if (signal.size() < n) {
    throw DomainError("phase-features", "stft",
                      "signal shorter than one frame (" + std::to_string(signal.size()) + " < " +
                          std::to_string(n) + ")");
  }

  Spectrogram spec;
  spec.num_bins = cfg.num_bins();
  spec.num_frames = cfg.num_frames(signal.size());
  spec.freq_resolution = sample_rate / static_cast<double>(n);
  spec.frame_rate = sample_rate / static_cast<double>(cfg.hop);
  spec.bins.resize(spec.num_bins * spec.num_frames);

  const std::vector<double> window = make_window(cfg.window_fn, n);
  std::vector<double> frame(n);
  for (std::size_t t = 0; t < spec.num_frames; ++t) {
    const double* x = signal.data() + t * cfg.hop;
    for (std::size_t i = 0; i < n; ++i) frame[i] = x[i] * window[i];
    const auto fx = rfft(frame);
    for (std::size_t f = 0; f < spec.num_bins; ++f) spec.at(f, t) = fx[f];
  }
  return spec;
}

std::vector<double> ipd(const Spectrogram& ref, const Spectrogram& other) {
  if (ref.num_bins != other.num_bins || ref.num_frames != other.num_frames) {
    throw DomainError("phase-features", "ipd", "spectrogram shapes differ");
  }
  std::vector<double> out(ref.bins.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = wrap_phase(bin_phase(ref.bins[i]) - bin_phase(other.bins[i]));
  }
  return out;
}

PhaseMatrix phase_matrix(const sim::MultiChannelClip& clip, const StftConfig& cfg) {
  std::array<Spectrogram, 4> specs;
  for (int ch = 0; ch < 4; ++ch) specs[ch] = stft(clip.channels[ch], clip.sample_rate, cfg);

  PhaseMatrix pm;
  pm.num_bins = specs[0].num_bins;
  pm.num_frames = specs[0].num_frames;
  pm.values.resize(3 * pm.num_bins * pm.num_frames);
  for (int pair = 0; pair < 3; ++pair) {
    const auto m = ipd(specs[0], specs[pair + 1]);
    std::copy(m.begin(), m.end(), pm.values.begin() + pair * m.size());
  }
  return pm;
}

}  // namespace auris::dsp
