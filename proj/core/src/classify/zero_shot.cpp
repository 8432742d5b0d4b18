#include "auris/classify/zero_shot.hpp"

#include <algorithm>
#include <cmath>

namespace auris::classify {

double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.empty()) {
    throw DomainError("classifier", "cosine_similarity", "embedding dimensions differ");
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na <= 0.0 || nb <= 0.0) {
    throw DomainError("classifier", "cosine_similarity", "zero-norm embedding");
  }
  return dot / std::sqrt(na * nb);
}

void unit_normalize(std::vector<double>& v, const std::string& what) {
  double n = 0.0;
  for (double x : v) n += x * x;
  if (n <= 0.0) throw DomainError("classifier", "unit_normalize", "zero-norm embedding: " + what);
  const double inv = 1.0 / std::sqrt(n);
  for (double& x : v) x *= inv;
}

std::vector<ClassScore> zero_shot_scores(const std::vector<double>& audio_emb,
                                         const std::vector<std::pair<std::string, std::vector<double>>>& class_embs,
                                         double temperature) {
  if (class_embs.empty()) throw DomainError("classifier", "zero_shot_scores", "no classes to score");
  if (temperature <= 0.0) throw DomainError("classifier", "zero_shot_scores", "temperature must be > 0");

  std::vector<double> logits(class_embs.size());
  for (std::size_t i = 0; i < class_embs.size(); ++i) {
    logits[i] = cosine_similarity(audio_emb, class_embs[i].second) / temperature;
  }

  const double mx = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (double& v : logits) {
    v = std::exp(v - mx);
    sum += v;
  }

  std::vector<ClassScore> scores(class_embs.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    scores[i].class_name = class_embs[i].first;
    scores[i].prob = logits[i] / sum;
  }
  return scores;
}

}  // namespace auris::classify
