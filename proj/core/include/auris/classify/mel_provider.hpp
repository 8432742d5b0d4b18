#pragma once

#include "auris/classify/provider.hpp"
#include "auris/classify/template_store.hpp"
#include "auris/dsp/stft.hpp"

namespace auris::classify {

/// Desk-scale audio embedding: time-averaged power spectrum of the mono
/// mixdown, folded into mel bands, log-compressed, mean-removed (so overall
/// gain cancels) and unit-normalized.
struct MelConfig {
  std::size_t bands = 64;
  double f_lo_hz = 50.0;
  dsp::StftConfig stft;

  bool operator==(const MelConfig&) const = default;
};

std::vector<double> mel_embedding(const sim::MultiChannelClip& clip, const MelConfig& cfg);

/// EmbeddingProvider over mel_embedding for audio and a fitted template store
/// for text: embed_text returns the stored class vector verbatim.
class MelTemplateProvider : public EmbeddingProvider {
 public:
  MelTemplateProvider(MelConfig cfg, TemplateStore store)
      : cfg_(std::move(cfg)), store_(std::move(store)) {}

  std::size_t dim() const override { return cfg_.bands; }
  std::vector<double> embed_audio(const sim::MultiChannelClip& clip) override {
    return mel_embedding(clip, cfg_);
  }
  std::vector<double> embed_text(const std::string& class_name) override {
    return store_.lookup(class_name);
  }

  const TemplateStore& store() const { return store_; }

 private:
  MelConfig cfg_;
  TemplateStore store_;
};

/// Builds the per-class template vectors: mean of the audio embeddings of the
/// labelled clips, unit-normalized.
TemplateStore fit_templates(const std::vector<std::pair<std::string, sim::MultiChannelClip>>& labelled,
                            const MelConfig& cfg);

}  // namespace auris::classify
