#include "auris/classify/mel_provider.hpp"

#include <cmath>

#include "auris/classify/zero_shot.hpp"
#include "auris/common/error.hpp"

namespace auris::classify {

namespace {

double hz_to_mel(double f) { return 2595.0 * std::log10(1.0 + f / 700.0); }

}  // namespace

std::vector<double> mel_embedding(const sim::MultiChannelClip& clip, const MelConfig& cfg) {
  if (cfg.bands < 2) throw DomainError("classifier", "mel_embedding", "need at least 2 mel bands");

  const auto mono = clip.mono_mixdown();
  const dsp::Spectrogram spec = dsp::stft(mono, clip.sample_rate, cfg.stft);

  // time-averaged power per frequency bin
  std::vector<double> power(spec.num_bins, 0.0);
  for (std::size_t f = 0; f < spec.num_bins; ++f) {
    double acc = 0.0;
    for (std::size_t t = 0; t < spec.num_frames; ++t) acc += std::norm(spec.at(f, t));
    power[f] = acc / static_cast<double>(spec.num_frames);
  }

  // triangular mel filterbank between f_lo and Nyquist
  const double f_hi = clip.sample_rate / 2.0;
  const double mel_lo = hz_to_mel(cfg.f_lo_hz);
  const double mel_hi = hz_to_mel(f_hi);
  std::vector<double> edges(cfg.bands + 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const double mel = mel_lo + (mel_hi - mel_lo) * static_cast<double>(i) / (cfg.bands + 1);
    edges[i] = 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
  }

  std::vector<double> bands(cfg.bands, 0.0);
  for (std::size_t f = 1; f < spec.num_bins; ++f) {
    const double freq = static_cast<double>(f) * spec.freq_resolution;
    for (std::size_t b = 0; b < cfg.bands; ++b) {
      const double lo = edges[b], mid = edges[b + 1], hi = edges[b + 2];
      if (freq <= lo || freq >= hi) continue;
      const double w = freq <= mid ? (freq - lo) / (mid - lo) : (hi - freq) / (hi - mid);
      bands[b] += w * power[f];
    }
  }

  double max_e = 0.0;
  for (double e : bands) max_e = std::max(max_e, e);
  if (max_e <= 0.0) {
    // silent clip: no spectral shape to speak of; a flat unit vector keeps
    // downstream cosines well-defined
    std::vector<double> flat(cfg.bands, 1.0);
    unit_normalize(flat, "silent-clip embedding");
    return flat;
  }

  // log energies with a floor relative to the peak band, so a global gain
  // shifts every entry equally; removing the mean then cancels gain exactly
  std::vector<double> v(cfg.bands);
  double mean = 0.0;
  for (std::size_t b = 0; b < cfg.bands; ++b) {
    v[b] = std::log(bands[b] + 1e-12 * max_e);
    mean += v[b];
  }
  mean /= static_cast<double>(cfg.bands);
  for (double& x : v) x -= mean;
  unit_normalize(v, "audio embedding");
  return v;
}

TemplateStore fit_templates(const std::vector<std::pair<std::string, sim::MultiChannelClip>>& labelled,
                            const MelConfig& cfg) {
  if (labelled.empty()) throw DomainError("classifier", "fit_templates", "no labelled clips");
  std::map<std::string, std::vector<double>> sums;
  std::map<std::string, std::size_t> counts;
  for (const auto& [name, clip] : labelled) {
    const auto emb = mel_embedding(clip, cfg);
    auto& acc = sums[name];
    if (acc.empty()) acc.assign(emb.size(), 0.0);
    for (std::size_t i = 0; i < emb.size(); ++i) acc[i] += emb[i];
    counts[name]++;
  }
  TemplateStore store;
  for (auto& [name, acc] : sums) {
    for (double& x : acc) x /= static_cast<double>(counts[name]);
    store.put(name, acc);
  }
  return store;
}

}  // namespace auris::classify
