#pragma once

#include <string>
#include <vector>

#include "auris/common/error.hpp"

namespace auris::classify {

struct ClassScore {
  std::string class_name;
  double prob = 0.0;
};

/// Cosine similarity of the audio embedding against every class embedding,
/// divided by the temperature, through a softmax. Probabilities sum to 1.
std::vector<ClassScore> zero_shot_scores(const std::vector<double>& audio_emb,
                                         const std::vector<std::pair<std::string, std::vector<double>>>& class_embs,
                                         double temperature = 0.07);

double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b);

/// L2-normalizes in place; throws on a zero vector.
void unit_normalize(std::vector<double>& v, const std::string& what);

}  // namespace auris::classify
