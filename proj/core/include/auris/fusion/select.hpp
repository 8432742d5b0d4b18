#pragma once

#include <optional>
#include <utility>

#include "auris/common/direction.hpp"
#include "auris/fusion/bbox.hpp"

namespace auris::fusion {

/// Optional pre-filter on candidates: once the wearer has turned toward the
/// sound, the emitting object is expected near the horizontal center of the
/// photo, so only candidates whose center lies in the middle band survive.
/// Disabled by default.
struct DoaGateConfig {
  bool enabled = false;
  double band_frac = 1.0 / 3.0;
};

struct SelectionResult {
  Candidate chosen;
  double iou = 0.0;
  BBox pseudo_box;
};

/// Nearest-neighbor rescale to the target size (no-op if already matching).
LocalizationMap rescale_map(const LocalizationMap& map, std::size_t height, std::size_t width);

/// The four-step box selection: threshold the localization map, take the
/// tightest rectangle over the positive pixels, score every candidate by IoU
/// against it, return the maximum. Ties break toward higher detector
/// confidence, then the leftmost x.
SelectionResult select_box(const CandidateSet& cands, const LocalizationMap& map, double tau,
                           std::optional<DirectionClass> doa = std::nullopt, const DoaGateConfig& gate = {});

struct DatasetMetrics {
  double ciou_rate = 0.0;  // success rate at the given IoU threshold
  double auc = 0.0;        // trapezoidal area under success(t), t = 0, 0.05, ..., 1
};

/// Success-rate metrics over (predicted pseudo box, ground-truth box) pairs.
/// Success at threshold t means IoU >= t, so every sample succeeds at t = 0.
DatasetMetrics dataset_metrics(const std::vector<std::pair<BBox, BBox>>& pairs,
                               double iou_success_threshold = 0.5);

}  // namespace auris::fusion
