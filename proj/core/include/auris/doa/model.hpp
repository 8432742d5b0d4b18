#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "auris/common/direction.hpp"
#include "auris/common/tensor.hpp"
#include "auris/dsp/stft.hpp"

namespace auris::doa {

struct BlockSpec {
  int convs_per_block = 1;
  int out_channels = 8;
};

enum class InputLayout { kThreeChannel, kSingleChannelStacked };
enum class LossKind { kSoftmaxBce, kCategoricalCe };

std::string input_layout_name(InputLayout l);
InputLayout input_layout_from_name(const std::string& s);
std::string loss_kind_name(LossKind k);
LossKind loss_kind_from_name(const std::string& s);

/// Direction-classifier CNN. Every conv uses a 1x2 kernel with unit stride
/// (fine-grained structure along the time axis); each block ends in a 2x2 max
/// pool; flattened features feed the fully connected stack and a final linear
/// layer over the 9 classes.
struct NetConfig {
  std::vector<BlockSpec> blocks;
  std::vector<int> fc_dims;  // hidden layer widths (ReLU); final layer is linear to num_classes
  int num_classes = static_cast<int>(kNumDirectionClasses);
  InputLayout input_layout = InputLayout::kThreeChannel;
  LossKind loss = LossKind::kSoftmaxBce;

  /// Four blocks [8,16,32,64] with one conv each and FC [256,64]: deep enough
  /// for the 2 s / 16 kHz default input, small enough to train on a CPU.
  static NetConfig desk_default();

  /// The full-scale topology: ten blocks of two convs and FC [4096,256].
  /// Only valid for inputs large enough to survive ten 2x2 pools.
  static NetConfig full_scale();

  bool operator==(const NetConfig&) const = default;
};

/// Per-layer shapes for a concrete input, computed once and validated:
/// pooling must never reduce a spatial dim below 1, convs need width >= 2.
struct ShapePlan {
  struct BlockShapes {
    std::vector<std::array<std::size_t, 3>> conv_out;  // after each conv (C,H,W)
    std::array<std::size_t, 3> pool_out;
  };
  std::array<std::size_t, 3> input;
  std::vector<BlockShapes> blocks;
  std::size_t flat_size = 0;
};

ShapePlan plan_shapes(const NetConfig& cfg, std::size_t in_c, std::size_t in_h, std::size_t in_w);

/// All weights and biases as a flat, ordered, named list so that training,
/// serialization and finite-difference checking can enumerate every entry.
struct ModelParams {
  struct Named {
    std::string name;
    Tensor tensor;
  };
  std::vector<Named> tensors;

  std::size_t total_size() const;
  double get_flat(std::size_t i) const;
  void set_flat(std::size_t i, double v);
  Tensor& find(const std::string& name);
  void check_finite() const;
};

/// He-uniform initialization, deterministic given seed; biases zero.
ModelParams init_params(const NetConfig& cfg, const ShapePlan& plan, std::uint64_t seed);

/// Gradients in the same order/shapes as the params they refer to.
ModelParams zeros_like(const ModelParams& params);

struct Prediction {
  std::vector<double> probs;
  std::vector<double> logits;
  int argmax_class = 0;  // ties broken toward the lowest class index
};

/// Phase matrix as a CNN input tensor under the configured layout:
/// 3 x F x T, or 1 x 3F x T with the pair maps stacked along frequency.
Tensor to_input(const dsp::PhaseMatrix& pm, InputLayout layout);

Prediction forward(const NetConfig& cfg, const ModelParams& params, const Tensor& input);

/// Mean binary cross-entropy over the 9 softmax probabilities against the
/// one-hot label, probabilities clamped to [1e-7, 1 - 1e-7] before the logs.
double bce_loss(const Prediction& pred, int label);

/// Loss under cfg.loss (BCE over softmax by default, plain categorical
/// cross-entropy behind the switch).
double loss_value(const NetConfig& cfg, const Prediction& pred, int label);

/// Full backward pass: d loss / d theta for every parameter tensor. Also
/// reports the forward prediction and loss so training needs one pass.
struct ForwardBackwardResult {
  Prediction pred;
  double loss = 0.0;
  ModelParams grads;
};

ForwardBackwardResult forward_backward(const NetConfig& cfg, const ModelParams& params, const Tensor& input,
                                       int label);

}  // namespace auris::doa
