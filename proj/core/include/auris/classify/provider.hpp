#pragma once

#include <string>
#include <vector>

#include "auris/sim/clip.hpp"

namespace auris::classify {

/// Embedding contract: audio clips and class prompts map into one shared
/// space as unit vectors of a fixed dimension. The desk-scale provider below
/// implements it locally; the bridge providers forward to an external model.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual std::size_t dim() const = 0;
  virtual std::vector<double> embed_audio(const sim::MultiChannelClip& clip) = 0;
  virtual std::vector<double> embed_text(const std::string& class_name) = 0;
};

}  // namespace auris::classify
