#include "auris/fusion/select.hpp"

#include <algorithm>
#include <cmath>

namespace auris::fusion {

LocalizationMap rescale_map(const LocalizationMap& map, std::size_t height, std::size_t width) {
  map.validate();
  if (map.height == height && map.width == width) return map;
  LocalizationMap out;
  out.height = height;
  out.width = width;
  out.values.resize(height * width);
  for (std::size_t r = 0; r < height; ++r) {
    const auto sr = std::min(map.height - 1, static_cast<std::size_t>(static_cast<double>(r) * map.height / height));
    for (std::size_t c = 0; c < width; ++c) {
      const auto sc = std::min(map.width - 1, static_cast<std::size_t>(static_cast<double>(c) * map.width / width));
      out.at(r, c) = map.at(sr, sc);
    }
  }
  return out;
}

SelectionResult select_box(const CandidateSet& cands, const LocalizationMap& map, double tau,
                           std::optional<DirectionClass> doa, const DoaGateConfig& gate) {
  if (cands.boxes.empty()) throw DomainError("fusion", "select_box", "candidate set is empty");
  if (cands.image_w < 1 || cands.image_h < 1) {
    throw DomainError("fusion", "select_box", "candidate set needs a valid image size");
  }

  const LocalizationMap scaled =
      rescale_map(map, static_cast<std::size_t>(cands.image_h), static_cast<std::size_t>(cands.image_w));
  const auto grid = threshold_map(scaled, tau);
  const auto pseudo = pseudo_bbox(grid, scaled.height, scaled.width);
  if (!pseudo) throw DomainError("fusion", "select_box", "no localized region (empty binary map)");

  const bool apply_gate = gate.enabled && doa.has_value();
  const double band_lo = cands.image_w * (0.5 - gate.band_frac / 2.0);
  const double band_hi = cands.image_w * (0.5 + gate.band_frac / 2.0);

  const Candidate* best = nullptr;
  double best_iou = -1.0;
  for (const auto& cand : cands.boxes) {
    cand.box.validate();
    if (cand.box.x < 0 || cand.box.y < 0 || cand.box.x + cand.box.w > cands.image_w ||
        cand.box.y + cand.box.h > cands.image_h) {
      throw DomainError("fusion", "select_box", "candidate box out of image bounds");
    }
    if (apply_gate) {
      const double cx = cand.box.x + cand.box.w / 2.0;
      if (cx < band_lo || cx > band_hi) continue;
    }
    const double v = iou(cand.box, *pseudo);
    if (best == nullptr || v > best_iou ||
        (v == best_iou && (cand.confidence > best->confidence ||
                           (cand.confidence == best->confidence && cand.box.x < best->box.x)))) {
      best = &cand;
      best_iou = v;
    }
  }
  if (best == nullptr) {
    throw DomainError("fusion", "select_box", "DoA gate eliminated all candidates");
  }

  SelectionResult res;
  res.chosen = *best;
  res.iou = best_iou;
  res.pseudo_box = *pseudo;
  return res;
}

DatasetMetrics dataset_metrics(const std::vector<std::pair<BBox, BBox>>& pairs, double iou_success_threshold) {
  if (pairs.empty()) throw DomainError("fusion", "dataset_metrics", "no samples");

  std::vector<double> ious;
  ious.reserve(pairs.size());
  for (const auto& [pred, gt] : pairs) ious.push_back(iou(pred, gt));

  DatasetMetrics m;
  std::size_t hits = 0;
  for (double v : ious) {
    if (v >= iou_success_threshold) ++hits;
  }
  m.ciou_rate = static_cast<double>(hits) / static_cast<double>(ious.size());

  // success-rate curve on t = 0, 0.05, ..., 1.0; trapezoidal area
  constexpr int kSteps = 20;
  double prev = 0.0;
  for (int i = 0; i <= kSteps; ++i) {
    const double t = static_cast<double>(i) / kSteps;
    std::size_t ok = 0;
    for (double v : ious) {
      if (v >= t) ++ok;
    }
    const double rate = static_cast<double>(ok) / static_cast<double>(ious.size());
    if (i > 0) m.auc += 0.5 * (prev + rate) * (1.0 / kSteps);
    prev = rate;
  }
  return m;
}

}  // namespace auris::fusion
