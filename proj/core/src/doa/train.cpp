#include "auris/doa/train.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "auris/common/rng.hpp"

namespace auris::doa {

namespace {

Tensor augmented_input(const TrainExample& ex, InputLayout layout, const AugmentConfig& aug, Rng& rng) {
  Tensor t = example_input(ex, layout);
  if (aug.time_crop_frac > 0.0) {
    // Drop a random contiguous span of frames and re-pad with zeros at the end.
    const std::size_t frames = ex.num_frames;
    const auto max_crop = static_cast<std::size_t>(aug.time_crop_frac * static_cast<double>(frames));
    if (max_crop > 0) {
      const std::size_t crop = rng.uniform_index(max_crop + 1);
      if (crop > 0) {
        const std::size_t start = rng.uniform_index(frames - crop + 1);
        const std::size_t rows = t.size() / frames;
        for (std::size_t r = 0; r < rows; ++r) {
          double* row = t.data() + r * frames;
          for (std::size_t i = start; i + crop < frames; ++i) row[i] = row[i + crop];
          for (std::size_t i = frames - crop; i < frames; ++i) row[i] = 0.0;
        }
      }
    }
  }
  if (aug.ipd_noise_std > 0.0) {
    for (std::size_t i = 0; i < t.size(); ++i) t[i] += rng.normal(0.0, aug.ipd_noise_std);
  }
  return t;
}

}  // namespace

Tensor example_input(const TrainExample& ex, InputLayout layout) {
  dsp::PhaseMatrix pm;
  pm.num_bins = ex.num_bins;
  pm.num_frames = ex.num_frames;
  pm.values.assign(ex.values.begin(), ex.values.end());
  return to_input(pm, layout);
}

void stratified_split(const std::vector<TrainExample>& all, double val_fraction, std::uint64_t seed,
                      std::vector<TrainExample>& train_out, std::vector<TrainExample>& val_out) {
  train_out.clear();
  val_out.clear();
  std::vector<std::vector<std::size_t>> by_class(kNumDirectionClasses);
  for (std::size_t i = 0; i < all.size(); ++i) by_class[all[i].label].push_back(i);

  Rng rng(derive_seed(seed, "split"));
  for (auto& idxs : by_class) {
    for (std::size_t i = idxs.size(); i > 1; --i) {
      std::swap(idxs[i - 1], idxs[rng.uniform_index(i)]);
    }
    const auto n_val = static_cast<std::size_t>(std::round(val_fraction * static_cast<double>(idxs.size())));
    for (std::size_t i = 0; i < idxs.size(); ++i) {
      (i < n_val ? val_out : train_out).push_back(all[idxs[i]]);
    }
  }
}

TrainResult train(const NetConfig& net_cfg, const std::vector<TrainExample>& train_set,
                  const std::vector<TrainExample>& val_set, const TrainConfig& cfg) {
  if (train_set.empty()) throw DomainError("doa-model", "train", "empty training set");
  if (cfg.learning_rate < 0.0) throw DomainError("doa-model", "train", "learning_rate must be >= 0");
  if (cfg.batch_size < 1) throw DomainError("doa-model", "train", "batch_size must be >= 1");

  const auto& first = train_set.front();
  const Tensor probe = example_input(first, net_cfg.input_layout);
  const ShapePlan plan = plan_shapes(net_cfg, probe.dim(0), probe.dim(1), probe.dim(2));

  TrainResult result;
  result.params = init_params(net_cfg, plan, derive_seed(cfg.seed, "weights"));

  std::vector<std::size_t> order(train_set.size());
  std::iota(order.begin(), order.end(), 0);

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    Rng shuffle_rng(derive_seed(cfg.seed, "shuffle", static_cast<std::uint64_t>(epoch)));
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[shuffle_rng.uniform_index(i)]);
    }

    double epoch_loss = 0.0;
    std::size_t epoch_correct = 0;

    for (std::size_t start = 0; start < order.size(); start += static_cast<std::size_t>(cfg.batch_size)) {
      const std::size_t end = std::min(order.size(), start + static_cast<std::size_t>(cfg.batch_size));
      ModelParams batch_grads = zeros_like(result.params);

      for (std::size_t bi = start; bi < end; ++bi) {
        const TrainExample& ex = train_set[order[bi]];
        Rng aug_rng(derive_seed(cfg.seed, "augment",
                                static_cast<std::uint64_t>(epoch) * train_set.size() + order[bi]));
        const Tensor input = augmented_input(ex, net_cfg.input_layout, cfg.augment, aug_rng);
        auto fb = forward_backward(net_cfg, result.params, input, ex.label);
        if (!std::isfinite(fb.loss)) {
          throw DomainError("doa-model", "train",
                            "non-finite loss at epoch " + std::to_string(epoch) + ", item " +
                                std::to_string(order[bi]));
        }
        epoch_loss += fb.loss;
        if (fb.pred.argmax_class == ex.label) ++epoch_correct;
        for (std::size_t t = 0; t < batch_grads.tensors.size(); ++t) {
          Tensor& acc = batch_grads.tensors[t].tensor;
          const Tensor& g = fb.grads.tensors[t].tensor;
          for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += g[j];
        }
      }

      const double step = cfg.learning_rate / static_cast<double>(end - start);
      for (std::size_t t = 0; t < result.params.tensors.size(); ++t) {
        Tensor& p = result.params.tensors[t].tensor;
        const Tensor& g = batch_grads.tensors[t].tensor;
        for (std::size_t j = 0; j < p.size(); ++j) p[j] -= step * g[j];
      }
    }

    EpochStats stats;
    stats.epoch = epoch;
    stats.train_loss = epoch_loss / static_cast<double>(train_set.size());
    stats.train_acc = static_cast<double>(epoch_correct) / static_cast<double>(train_set.size());

    if (!val_set.empty()) {
      double val_loss = 0.0;
      std::size_t val_correct = 0;
      for (const auto& ex : val_set) {
        const Tensor input = example_input(ex, net_cfg.input_layout);
        const Prediction pred = forward(net_cfg, result.params, input);
        val_loss += loss_value(net_cfg, pred, ex.label);
        if (pred.argmax_class == ex.label) ++val_correct;
      }
      stats.val_loss = val_loss / static_cast<double>(val_set.size());
      stats.val_acc = static_cast<double>(val_correct) / static_cast<double>(val_set.size());
    }
    result.history.push_back(stats);
  }

  return result;
}

}  // namespace auris::doa
