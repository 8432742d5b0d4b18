#pragma once

#include <cstdint>
#include <vector>

#include "auris/doa/model.hpp"

namespace auris::doa {

/// One featurized training item. Values are kept as float32 (the on-disk
/// precision) and widened per forward pass.
struct TrainExample {
  std::vector<float> values;  // 3 x F x T, row-major
  std::size_t num_bins = 0;
  std::size_t num_frames = 0;
  int label = 0;
};

struct AugmentConfig {
  double ipd_noise_std = 0.15;   // radians, added entrywise
  double time_crop_frac = 0.10;  // max fraction of frames cropped and re-padded with zeros
};

struct TrainConfig {
  double learning_rate = 0.05;
  int batch_size = 16;
  int epochs = 30;
  std::uint64_t seed = 1;
  AugmentConfig augment;
  double val_fraction = 0.2;  // used by callers that split before training
};

struct EpochStats {
  int epoch = 0;
  double train_acc = 0.0;
  double val_acc = 0.0;
  double train_loss = 0.0;
  double val_loss = 0.0;
};

struct TrainResult {
  ModelParams params;
  std::vector<EpochStats> history;
};

Tensor example_input(const TrainExample& ex, InputLayout layout);

/// Shuffled mini-batch SGD with He-uniform init, deterministic given
/// cfg.seed. Aborts with a diagnostic if the loss goes non-finite.
TrainResult train(const NetConfig& net_cfg, const std::vector<TrainExample>& train_set,
                  const std::vector<TrainExample>& val_set, const TrainConfig& cfg);

/// Deterministic stratified split: for each class, every ceil(1/val_fraction)-th
/// item (after a seeded shuffle) goes to validation.
void stratified_split(const std::vector<TrainExample>& all, double val_fraction, std::uint64_t seed,
                      std::vector<TrainExample>& train_out, std::vector<TrainExample>& val_out);

}  // namespace auris::doa
