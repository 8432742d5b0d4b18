#pragma once

#include <array>
#include <vector>

#include "auris/common/direction.hpp"

namespace auris::doa {

/// Accuracy, macro-F1 and the 9x9 confusion matrix (rows = true class).
/// Macro-F1 averages over the classes present in truth or predictions.
struct EvalMetrics {
  double accuracy = 0.0;
  double macro_f1 = 0.0;
  std::array<std::array<std::size_t, kNumDirectionClasses>, kNumDirectionClasses> confusion{};
};

EvalMetrics compute_metrics(const std::vector<int>& truth, const std::vector<int>& predicted);

}  // namespace auris::doa
