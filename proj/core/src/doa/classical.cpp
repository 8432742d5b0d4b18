#include "auris/doa/classical.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "auris/pipeline/gate.hpp"

namespace auris::doa {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

ClassicalEstimate classical_estimate(const sim::MultiChannelClip& clip, const sim::ArrayGeometry& geometry,
                                     const dsp::StftConfig& stft_cfg, const ClassicalConfig& cfg) {
  geometry.validate();

  std::array<dsp::Spectrogram, 4> specs;
  for (int ch = 0; ch < 4; ++ch) specs[ch] = dsp::stft(clip.channels[ch], clip.sample_rate, stft_cfg);

  const auto& mics = geometry.mic_positions;
  const double c = geometry.speed_of_sound;

  ClassicalEstimate est;
  est.level_db = pipeline::rms_db(clip, cfg.calibration_offset_db);

  // TDOA per pair from the cross-spectrum phase slope: below the aliasing
  // limit, angle(X1 * conj(Xj)) = 2 pi f (tau_j - tau_1) without wrapping, so
  // a weighted least-squares line through the origin recovers the delay.
  for (int pair = 0; pair < 3; ++pair) {
    const auto& ref = specs[0];
    const auto& other = specs[pair + 1];
    const double spacing = (mics[pair + 1] - mics[0]).norm();
    const double f_lim = cfg.aliasing_safety * c / (2.0 * spacing);

    std::vector<double> weights, freqs, phases;
    double w_max = 0.0;
    for (std::size_t f = 1; f < ref.num_bins; ++f) {
      const double freq = static_cast<double>(f) * ref.freq_resolution;
      if (freq < cfg.f_min_hz || freq > f_lim) continue;
      std::complex<double> cross{0.0, 0.0};
      for (std::size_t t = 0; t < ref.num_frames; ++t) {
        cross += ref.at(f, t) * std::conj(other.at(f, t));
      }
      const double w = std::abs(cross);
      if (w <= 0.0) continue;
      weights.push_back(w);
      freqs.push_back(freq);
      phases.push_back(std::arg(cross));
      w_max = std::max(w_max, w);
    }
    // bins orders of magnitude below the strongest carry leakage, whose phase
    // tracks the source frequency rather than the bin; drop them
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] < 1e-3 * w_max) continue;
      num += weights[i] * freqs[i] * phases[i];
      den += weights[i] * freqs[i] * freqs[i];
    }
    est.tdoa_s[pair] = den > 0.0 ? num / (kTwoPi * den) : 0.0;
  }

  // Far-field least squares: tdoa_j = (m1 - mj) . u / c over the three pairs,
  // unknown u = (ux, uy). Sources live in the device's horizontal plane.
  double a11 = 0.0, a12 = 0.0, a22 = 0.0, b1 = 0.0, b2 = 0.0, bnorm2 = 0.0;
  for (int pair = 0; pair < 3; ++pair) {
    const sim::Vec3 d = (mics[0] - mics[pair + 1]) * (1.0 / c);
    a11 += d.x * d.x;
    a12 += d.x * d.y;
    a22 += d.y * d.y;
    b1 += d.x * est.tdoa_s[pair];
    b2 += d.y * est.tdoa_s[pair];
    bnorm2 += est.tdoa_s[pair] * est.tdoa_s[pair];
  }
  const double det = a11 * a22 - a12 * a12;
  const double scale = std::max({a11, a22, 1e-30});
  if (std::abs(det) < 1e-12 * scale * scale) {
    throw DomainError("doa-model", "classical_doa", "degenerate geometry: microphone pairs are collinear");
  }
  const double ux = (a22 * b1 - a12 * b2) / det;
  const double uy = (a11 * b2 - a12 * b1) / det;
  est.u_norm = std::hypot(ux, uy);

  double resid2 = 0.0;
  for (int pair = 0; pair < 3; ++pair) {
    const sim::Vec3 d = (mics[0] - mics[pair + 1]) * (1.0 / c);
    const double fit = d.x * ux + d.y * uy;
    resid2 += (fit - est.tdoa_s[pair]) * (fit - est.tdoa_s[pair]);
  }
  est.residual_rel = bnorm2 > 0.0 ? std::sqrt(resid2 / bnorm2) : 0.0;

  est.azimuth_deg = normalize_azimuth_deg(std::atan2(ux, uy) * 180.0 / std::numbers::pi);

  const bool near_field = est.u_norm < cfg.self_unorm_max ||
                          (est.residual_rel > cfg.self_residual_min && est.level_db > cfg.self_level_min_db);
  est.direction = near_field ? DirectionClass::kSelf : sector_of_azimuth(est.azimuth_deg);
  return est;
}

DirectionClass classical_doa(const sim::MultiChannelClip& clip, const sim::ArrayGeometry& geometry,
                             const dsp::StftConfig& stft_cfg, const ClassicalConfig& cfg) {
  return classical_estimate(clip, geometry, stft_cfg, cfg).direction;
}

}  // namespace auris::doa
