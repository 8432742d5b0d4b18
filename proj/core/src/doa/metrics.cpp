#include "auris/doa/metrics.hpp"

#include "auris/common/error.hpp"

namespace auris::doa {

EvalMetrics compute_metrics(const std::vector<int>& truth, const std::vector<int>& predicted) {
  if (truth.empty() || truth.size() != predicted.size()) {
    throw DomainError("doa-model", "evaluate", "need equal, non-empty truth/prediction lists");
  }
  EvalMetrics m;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const int t = truth[i], p = predicted[i];
    if (t < 0 || t >= static_cast<int>(kNumDirectionClasses) || p < 0 ||
        p >= static_cast<int>(kNumDirectionClasses)) {
      throw DomainError("doa-model", "evaluate", "class index out of range");
    }
    m.confusion[t][p]++;
    if (t == p) ++correct;
  }
  m.accuracy = static_cast<double>(correct) / static_cast<double>(truth.size());

  double f1_sum = 0.0;
  std::size_t f1_classes = 0;
  for (std::size_t c = 0; c < kNumDirectionClasses; ++c) {
    std::size_t tp = m.confusion[c][c];
    std::size_t fn = 0, fp = 0;
    for (std::size_t j = 0; j < kNumDirectionClasses; ++j) {
      if (j != c) {
        fn += m.confusion[c][j];
        fp += m.confusion[j][c];
      }
    }
    if (tp + fn + fp == 0) continue;  // class absent from both truth and predictions
    ++f1_classes;
    if (tp > 0) {
      const double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
      const double recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
      f1_sum += 2.0 * precision * recall / (precision + recall);
    }
  }
  m.macro_f1 = f1_classes ? f1_sum / static_cast<double>(f1_classes) : 0.0;
  return m;
}

}  // namespace auris::doa
