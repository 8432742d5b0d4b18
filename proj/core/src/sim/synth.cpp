#include "auris/sim/synth.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "auris/common/rng.hpp"
#include "auris/dsp/fft.hpp"

namespace auris::sim {

namespace {

constexpr double kPi = std::numbers::pi;

double channel_rms(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s / static_cast<double>(x.size()));
}

// Closed-form source waveform at continuous time t (tone / chirp only).
double eval_source(const SourceSpec& src, double duration_s, double t) {
  switch (src.signal_kind) {
    case SignalKind::kPureTone:
      return std::sin(2.0 * kPi * src.freq_lo_hz * t);
    case SignalKind::kChirp: {
      const double k = (src.freq_hi_hz - src.freq_lo_hz) / (2.0 * duration_s);
      return std::sin(2.0 * kPi * (src.freq_lo_hz * t + k * t * t));
    }
    case SignalKind::kBandNoise:
      break;
  }
  return 0.0;
}

}  // namespace

Vec3 source_position(const ArrayGeometry& geometry, const SourceSpec& source) {
  const Vec3 c = geometry.centroid();
  if (source.direction_class == DirectionClass::kSelf) {
    return c + Vec3{0.0, 0.0, -source.distance_m};
  }
  const double az = source.azimuth_deg * kPi / 180.0;
  return c + Vec3{std::sin(az), std::cos(az), 0.0} * source.distance_m;
}

std::array<double, 4> propagation_delays(const ArrayGeometry& geometry, const SourceSpec& source) {
  const Vec3 pos = source_position(geometry, source);
  std::array<double, 4> tau{};
  for (int i = 0; i < 4; ++i) {
    tau[i] = (pos - geometry.mic_positions[i]).norm() / geometry.speed_of_sound;
  }
  return tau;
}

MultiChannelClip synth_clip(const ArrayGeometry& geometry, const SourceSpec& source, double duration_s,
                            double sample_rate, std::uint64_t seed) {
  geometry.validate();
  source.validate();
  if (duration_s <= 0.0) throw DomainError("array-sim", "synth_clip", "duration_s must be > 0");
  if (sample_rate < 8000.0) throw DomainError("array-sim", "synth_clip", "sample_rate must be >= 8000 Hz");

  const double nyquist = sample_rate / 2.0;
  if (source.signal_kind == SignalKind::kPureTone) {
    if (source.freq_lo_hz <= 0.0 || source.freq_lo_hz >= nyquist) {
      throw DomainError("array-sim", "synth_clip",
                        "tone frequency must lie in (0, Nyquist), got " + std::to_string(source.freq_lo_hz));
    }
  } else {
    if (source.freq_lo_hz <= 0.0 || source.freq_hi_hz >= nyquist || source.freq_lo_hz >= source.freq_hi_hz) {
      throw DomainError("array-sim", "synth_clip", "band edges must satisfy 0 < lo < hi < Nyquist");
    }
  }

  const std::size_t n = static_cast<std::size_t>(std::llround(duration_s * sample_rate));
  const auto tau = propagation_delays(geometry, source);
  const Vec3 pos = source_position(geometry, source);

  // Received amplitude per mic: 1/r law plus the spec'd level gain.
  std::array<double, 4> gain{};
  const double level = std::pow(10.0, source.level_gain_db / 20.0);
  for (int i = 0; i < 4; ++i) {
    const double r = (pos - geometry.mic_positions[i]).norm();
    gain[i] = level / std::max(r, 1e-6);
  }

  MultiChannelClip clip;
  clip.sample_rate = sample_rate;
  clip.duration_s = duration_s;
  clip.label = source.direction_class;

  Rng rng(seed);

  if (source.signal_kind == SignalKind::kBandNoise) {
    // Random Fourier series on the clip's own bin grid: band-limited, periodic
    // in the clip length, so a frequency-domain phase shift applies the
    // fractional delay exactly.
    const double bin_hz = sample_rate / static_cast<double>(n);
    std::vector<std::complex<double>> spec(n / 2 + 1, {0.0, 0.0});
    double power = 0.0;
    for (std::size_t k = 1; k < spec.size(); ++k) {
      const double f = static_cast<double>(k) * bin_hz;
      if (f < source.freq_lo_hz || f > source.freq_hi_hz) continue;
      const double a = rng.normal();
      const double b = rng.normal();
      spec[k] = {a, b};
      power += (a * a + b * b) / 2.0;
    }
    if (power <= 0.0) {
      throw DomainError("array-sim", "synth_clip", "band too narrow: no DFT bins inside it");
    }
    // Scale so the source waveform has unit RMS: after irfft's 1/n, bin k
    // contributes (2/n)^2 * (a_k^2+b_k^2)/2 of mean square.
    const double scale = static_cast<double>(n) / (2.0 * std::sqrt(power));
    for (auto& c : spec) c *= scale;

    for (int ch = 0; ch < 4; ++ch) {
      std::vector<std::complex<double>> shifted(spec.size());
      for (std::size_t k = 0; k < spec.size(); ++k) {
        const double f = static_cast<double>(k) * bin_hz;
        const double phase = -2.0 * kPi * f * tau[ch];
        shifted[k] = spec[k] * std::complex<double>(std::cos(phase), std::sin(phase));
      }
      clip.channels[ch] = dsp::irfft(shifted, n);
      for (double& v : clip.channels[ch]) v *= gain[ch];
    }
  } else {
    for (int ch = 0; ch < 4; ++ch) {
      auto& x = clip.channels[ch];
      x.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / sample_rate - tau[ch];
        x[i] = gain[ch] * eval_source(source, duration_s, t);
      }
    }
  }

  if (std::isfinite(source.snr_db)) {
    double mean_rms = 0.0;
    for (const auto& ch : clip.channels) mean_rms += channel_rms(ch) * 0.25;
    const double sigma = mean_rms * std::pow(10.0, -source.snr_db / 20.0);
    for (auto& ch : clip.channels) {
      for (double& v : ch) v += sigma * rng.normal();
    }
  }

  const double p = clip.peak();
  if (p > 1.0) {
    const double s = 1.0 / p;
    for (auto& ch : clip.channels)
      for (double& v : ch) v *= s;
  }
  return clip;
}

MultiChannelClip amplify_differences(const MultiChannelClip& clip, double gain) {
  if (gain < 1.0) throw DomainError("array-sim", "amplify_differences", "gain must be >= 1");
  MultiChannelClip out = clip;
  const std::size_t n = clip.frames();
  for (std::size_t i = 0; i < n; ++i) {
    double mean = 0.0;
    for (const auto& ch : clip.channels) mean += ch[i] * 0.25;
    for (int c = 0; c < 4; ++c) {
      out.channels[c][i] = mean + gain * (clip.channels[c][i] - mean);
    }
  }
  const double p = out.peak();
  if (p > 1.0) {
    const double s = 1.0 / p;
    for (auto& ch : out.channels)
      for (double& v : ch) v *= s;
  }
  return out;
}

}  // namespace auris::sim
