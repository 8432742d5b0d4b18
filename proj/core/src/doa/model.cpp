#include "auris/doa/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "auris/common/rng.hpp"

namespace auris::doa {

namespace {

constexpr double kProbClampLo = 1e-7;
constexpr double kProbClampHi = 1.0 - 1e-7;

void conv_1x2_forward(const Tensor& x, const Tensor& w, const Tensor& b, Tensor& z) {
  const std::size_t ci = x.dim(0), h = x.dim(1), wi = x.dim(2);
  const std::size_t co = z.dim(0), wo = wi - 1;
  for (std::size_t o = 0; o < co; ++o) {
    double* zo = z.data() + o * h * wo;
    const double bias = b[o];
    for (std::size_t idx = 0; idx < h * wo; ++idx) zo[idx] = bias;
    for (std::size_t i = 0; i < ci; ++i) {
      const double w0 = w[(o * ci + i) * 2 + 0];
      const double w1 = w[(o * ci + i) * 2 + 1];
      const double* xi = x.data() + i * h * wi;
      for (std::size_t r = 0; r < h; ++r) {
        const double* xr = xi + r * wi;
        double* zr = zo + r * wo;
        for (std::size_t c = 0; c < wo; ++c) {
          zr[c] += w0 * xr[c] + w1 * xr[c + 1];
        }
      }
    }
  }
}

void conv_1x2_backward(const Tensor& x, const Tensor& w, const Tensor& dz, Tensor& dw, Tensor& db,
                       Tensor* dx) {
  const std::size_t ci = x.dim(0), h = x.dim(1), wi = x.dim(2);
  const std::size_t co = dz.dim(0), wo = wi - 1;
  for (std::size_t o = 0; o < co; ++o) {
    const double* dzo = dz.data() + o * h * wo;
    double acc = 0.0;
    for (std::size_t idx = 0; idx < h * wo; ++idx) acc += dzo[idx];
    db[o] += acc;
    for (std::size_t i = 0; i < ci; ++i) {
      const double* xi = x.data() + i * h * wi;
      double g0 = 0.0, g1 = 0.0;
      for (std::size_t r = 0; r < h; ++r) {
        const double* xr = xi + r * wi;
        const double* dzr = dzo + r * wo;
        for (std::size_t c = 0; c < wo; ++c) {
          g0 += dzr[c] * xr[c];
          g1 += dzr[c] * xr[c + 1];
        }
      }
      dw[(o * ci + i) * 2 + 0] += g0;
      dw[(o * ci + i) * 2 + 1] += g1;
      if (dx) {
        const double w0 = w[(o * ci + i) * 2 + 0];
        const double w1 = w[(o * ci + i) * 2 + 1];
        double* dxi = dx->data() + i * h * wi;
        for (std::size_t r = 0; r < h; ++r) {
          double* dxr = dxi + r * wi;
          const double* dzr = dzo + r * wo;
          for (std::size_t c = 0; c < wo; ++c) {
            dxr[c] += w0 * dzr[c];
            dxr[c + 1] += w1 * dzr[c];
          }
        }
      }
    }
  }
}

void relu_forward(const Tensor& z, Tensor& a) {
  for (std::size_t i = 0; i < z.size(); ++i) a[i] = z[i] > 0.0 ? z[i] : 0.0;
}

/// 2x2 max pool with stride 2, trailing row/column dropped. Records the flat
/// source index of each pooled maximum (first hit wins on exact ties).
void maxpool_forward(const Tensor& a, Tensor& p, std::vector<std::size_t>& src) {
  const std::size_t c = a.dim(0), h = a.dim(1), w = a.dim(2);
  const std::size_t ho = h / 2, wo = w / 2;
  src.resize(c * ho * wo);
  std::size_t out = 0;
  for (std::size_t ch = 0; ch < c; ++ch) {
    const double* ac = a.data() + ch * h * w;
    for (std::size_t r = 0; r < ho; ++r) {
      for (std::size_t q = 0; q < wo; ++q) {
        const std::size_t base = (2 * r) * w + 2 * q;
        std::size_t best = base;
        double bv = ac[base];
        const std::size_t cand[3] = {base + 1, base + w, base + w + 1};
        for (std::size_t k : cand) {
          if (ac[k] > bv) {
            bv = ac[k];
            best = k;
          }
        }
        p[out] = bv;
        src[out] = ch * h * w + best;
        ++out;
      }
    }
  }
}

std::vector<double> softmax(const std::vector<double>& logits) {
  double mx = -std::numeric_limits<double>::infinity();
  for (double v : logits) mx = std::max(mx, v);
  std::vector<double> p(logits.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = std::exp(logits[i] - mx);
    sum += p[i];
  }
  for (double& v : p) v /= sum;
  return p;
}

struct Trace {
  std::vector<Tensor> conv_in;   // input of each conv, in global conv order
  std::vector<Tensor> conv_z;    // pre-activation of each conv
  std::vector<Tensor> block_act; // relu output entering each block's pool
  std::vector<std::vector<std::size_t>> pool_src;
  std::vector<Tensor> pool_out;
  std::vector<std::vector<double>> fc_in;  // input of each fc layer incl. final
  std::vector<std::vector<double>> fc_z;   // pre-activation of each hidden fc
  std::vector<double> logits;
};

void run_forward(const NetConfig& cfg, const ShapePlan& plan, const ModelParams& params, const Tensor& input,
                 Trace* trace, std::vector<double>& logits) {
  const std::size_t expected = 2 * (cfg.fc_dims.size() + 1);
  std::size_t expected_convs = 0;
  for (const auto& b : cfg.blocks) expected_convs += static_cast<std::size_t>(b.convs_per_block);
  if (params.tensors.size() != expected + 2 * expected_convs) {
    throw DomainError("doa-model", "forward", "parameter count does not match config");
  }
  if (params.tensors[0].tensor.dim(1) != input.dim(0)) {
    throw DomainError("doa-model", "forward",
                      "input channel count " + std::to_string(input.dim(0)) +
                          " does not match first conv fan-in " +
                          std::to_string(params.tensors[0].tensor.dim(1)));
  }
  Tensor cur = input;
  std::size_t pi = 0;  // index into params.tensors, relies on construction order
  for (std::size_t b = 0; b < cfg.blocks.size(); ++b) {
    for (int c = 0; c < cfg.blocks[b].convs_per_block; ++c) {
      const Tensor& w = params.tensors[pi].tensor;
      const Tensor& bias = params.tensors[pi + 1].tensor;
      pi += 2;
      const auto& zshape = plan.blocks[b].conv_out[c];
      Tensor z({zshape[0], zshape[1], zshape[2]});
      conv_1x2_forward(cur, w, bias, z);
      Tensor a({zshape[0], zshape[1], zshape[2]});
      relu_forward(z, a);
      if (trace) {
        trace->conv_in.push_back(std::move(cur));
        trace->conv_z.push_back(std::move(z));
      }
      cur = std::move(a);
    }
    const auto& pshape = plan.blocks[b].pool_out;
    Tensor p({pshape[0], pshape[1], pshape[2]});
    std::vector<std::size_t> src;
    maxpool_forward(cur, p, src);
    if (trace) {
      trace->block_act.push_back(std::move(cur));
      trace->pool_src.push_back(std::move(src));
      trace->pool_out.push_back(p);
    }
    cur = std::move(p);
  }

  std::vector<double> x(cur.data(), cur.data() + cur.size());
  const std::size_t n_fc = cfg.fc_dims.size();
  for (std::size_t i = 0; i <= n_fc; ++i) {
    const Tensor& w = params.tensors[pi].tensor;
    const Tensor& bias = params.tensors[pi + 1].tensor;
    pi += 2;
    const std::size_t out_n = w.dim(0), in_n = w.dim(1);
    if (x.size() != in_n) {
      throw DomainError("doa-model", "forward",
                        "flattened feature size " + std::to_string(x.size()) +
                            " does not match fc fan-in " + std::to_string(in_n) +
                            " (input shape vs config mismatch)");
    }
    std::vector<double> z(out_n);
    for (std::size_t o = 0; o < out_n; ++o) {
      const double* wr = w.data() + o * in_n;
      double acc = bias[o];
      for (std::size_t k = 0; k < in_n; ++k) acc += wr[k] * x[k];
      z[o] = acc;
    }
    if (trace) trace->fc_in.push_back(x);
    if (i < n_fc) {
      if (trace) trace->fc_z.push_back(z);
      for (double& v : z) v = v > 0.0 ? v : 0.0;
      x = std::move(z);
    } else {
      logits = std::move(z);
    }
  }
}

std::vector<double> loss_grad_logits(const NetConfig& cfg, const std::vector<double>& probs, int label) {
  const std::size_t n = probs.size();
  std::vector<double> dz(n, 0.0);
  if (cfg.loss == LossKind::kCategoricalCe) {
    for (std::size_t k = 0; k < n; ++k) dz[k] = probs[k] - (static_cast<int>(k) == label ? 1.0 : 0.0);
    return dz;
  }
  // BCE over the softmax outputs. Folding the softmax Jacobian into dL/dp
  // analytically gives dL/dz_j = -(1/n) (g_j - p_j * sum_k g_k) with
  // g_k = y_k - (1 - y_k) p_k / (1 - p_k); this form stays finite and
  // non-vanishing even when the softmax saturates (the clamp only guards the
  // reported loss value).
  std::vector<double> g(n, 0.0);
  double gsum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double p = probs[k];
    if (static_cast<int>(k) == label) {
      g[k] = 1.0;
    } else {
      g[k] = -p / std::max(1.0 - p, 1e-12);
    }
    gsum += g[k];
  }
  for (std::size_t j = 0; j < n; ++j) {
    dz[j] = -(g[j] - probs[j] * gsum) / static_cast<double>(n);
  }
  return dz;
}

}  // namespace

std::string input_layout_name(InputLayout l) {
  return l == InputLayout::kThreeChannel ? "three_channel" : "single_channel_stacked";
}

InputLayout input_layout_from_name(const std::string& s) {
  if (s == "three_channel") return InputLayout::kThreeChannel;
  if (s == "single_channel_stacked") return InputLayout::kSingleChannelStacked;
  throw DomainError("doa-model", "input_layout_from_name", "unknown input layout: " + s);
}

std::string loss_kind_name(LossKind k) {
  return k == LossKind::kSoftmaxBce ? "softmax_bce" : "categorical_ce";
}

LossKind loss_kind_from_name(const std::string& s) {
  if (s == "softmax_bce") return LossKind::kSoftmaxBce;
  if (s == "categorical_ce") return LossKind::kCategoricalCe;
  throw DomainError("doa-model", "loss_kind_from_name", "unknown loss kind: " + s);
}

NetConfig NetConfig::desk_default() {
  NetConfig cfg;
  cfg.blocks = {{1, 8}, {1, 16}, {1, 32}, {1, 64}};
  cfg.fc_dims = {256, 64};
  return cfg;
}

NetConfig NetConfig::full_scale() {
  NetConfig cfg;
  for (int b = 0; b < 10; ++b) {
    cfg.blocks.push_back({2, std::min(512, 8 << std::min(b, 6))});
  }
  cfg.fc_dims = {4096, 256};
  return cfg;
}

ShapePlan plan_shapes(const NetConfig& cfg, std::size_t in_c, std::size_t in_h, std::size_t in_w) {
  if (cfg.num_classes != static_cast<int>(kNumDirectionClasses)) {
    throw DomainError("doa-model", "plan_shapes", "num_classes must be 9");
  }
  if (cfg.blocks.empty() || cfg.fc_dims.empty()) {
    throw DomainError("doa-model", "plan_shapes", "config needs at least one block and one fc layer");
  }
  ShapePlan plan;
  plan.input = {in_c, in_h, in_w};
  std::size_t c = in_c, h = in_h, w = in_w;
  for (std::size_t b = 0; b < cfg.blocks.size(); ++b) {
    ShapePlan::BlockShapes bs;
    if (cfg.blocks[b].convs_per_block < 1 || cfg.blocks[b].out_channels < 1) {
      throw DomainError("doa-model", "plan_shapes", "block specs must be positive");
    }
    for (int k = 0; k < cfg.blocks[b].convs_per_block; ++k) {
      if (w < 2) {
        throw DomainError("doa-model", "plan_shapes",
                          "input too narrow for a 1x2 conv in block " + std::to_string(b));
      }
      c = static_cast<std::size_t>(cfg.blocks[b].out_channels);
      w = w - 1;
      bs.conv_out.push_back({c, h, w});
    }
    if (h < 2 || w < 2) {
      throw DomainError("doa-model", "plan_shapes",
                        "2x2 pooling in block " + std::to_string(b) + " would reduce a spatial dim below 1 (" +
                            std::to_string(h) + "x" + std::to_string(w) + ")");
    }
    h /= 2;
    w /= 2;
    bs.pool_out = {c, h, w};
    plan.blocks.push_back(std::move(bs));
  }
  plan.flat_size = c * h * w;
  return plan;
}

std::size_t ModelParams::total_size() const {
  std::size_t n = 0;
  for (const auto& t : tensors) n += t.tensor.size();
  return n;
}

double ModelParams::get_flat(std::size_t i) const {
  for (const auto& t : tensors) {
    if (i < t.tensor.size()) return t.tensor[i];
    i -= t.tensor.size();
  }
  throw DomainError("doa-model", "ModelParams", "flat index out of range");
}

void ModelParams::set_flat(std::size_t i, double v) {
  for (auto& t : tensors) {
    if (i < t.tensor.size()) {
      t.tensor[i] = v;
      return;
    }
    i -= t.tensor.size();
  }
  throw DomainError("doa-model", "ModelParams", "flat index out of range");
}

Tensor& ModelParams::find(const std::string& name) {
  for (auto& t : tensors) {
    if (t.name == name) return t.tensor;
  }
  throw DomainError("doa-model", "ModelParams", "no tensor named " + name);
}

void ModelParams::check_finite() const {
  for (const auto& t : tensors) {
    for (std::size_t i = 0; i < t.tensor.size(); ++i) {
      if (!std::isfinite(t.tensor[i])) {
        throw DomainError("doa-model", "ModelParams", "non-finite value in " + t.name);
      }
    }
  }
}

ModelParams init_params(const NetConfig& cfg, const ShapePlan& plan, std::uint64_t seed) {
  Rng rng(derive_seed(seed, "init"));
  ModelParams p;
  auto he_uniform = [&](Tensor& t, std::size_t fan_in) {
    const double bound = std::sqrt(6.0 / static_cast<double>(fan_in));
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = rng.uniform(-bound, bound);
  };

  std::size_t in_c = plan.input[0];
  for (std::size_t b = 0; b < cfg.blocks.size(); ++b) {
    for (int k = 0; k < cfg.blocks[b].convs_per_block; ++k) {
      const std::size_t out_c = static_cast<std::size_t>(cfg.blocks[b].out_channels);
      Tensor w({out_c, in_c, 2});
      he_uniform(w, in_c * 2);
      p.tensors.push_back({"block" + std::to_string(b) + ".conv" + std::to_string(k) + ".weight", std::move(w)});
      p.tensors.push_back({"block" + std::to_string(b) + ".conv" + std::to_string(k) + ".bias", Tensor({out_c})});
      in_c = out_c;
    }
  }

  std::size_t in_n = plan.flat_size;
  for (std::size_t i = 0; i < cfg.fc_dims.size(); ++i) {
    const std::size_t out_n = static_cast<std::size_t>(cfg.fc_dims[i]);
    Tensor w({out_n, in_n});
    he_uniform(w, in_n);
    p.tensors.push_back({"fc" + std::to_string(i) + ".weight", std::move(w)});
    p.tensors.push_back({"fc" + std::to_string(i) + ".bias", Tensor({out_n})});
    in_n = out_n;
  }
  {
    const std::size_t out_n = static_cast<std::size_t>(cfg.num_classes);
    Tensor w({out_n, in_n});
    he_uniform(w, in_n);
    p.tensors.push_back({"out.weight", std::move(w)});
    p.tensors.push_back({"out.bias", Tensor({out_n})});
  }
  return p;
}

ModelParams zeros_like(const ModelParams& params) {
  ModelParams g;
  g.tensors.reserve(params.tensors.size());
  for (const auto& t : params.tensors) {
    g.tensors.push_back({t.name, Tensor(t.tensor.shape())});
  }
  return g;
}

Tensor to_input(const dsp::PhaseMatrix& pm, InputLayout layout) {
  if (layout == InputLayout::kThreeChannel) {
    Tensor t({3, pm.num_bins, pm.num_frames});
    std::copy(pm.values.begin(), pm.values.end(), t.data());
    return t;
  }
  Tensor t({1, 3 * pm.num_bins, pm.num_frames});
  std::copy(pm.values.begin(), pm.values.end(), t.data());
  return t;
}

Prediction forward(const NetConfig& cfg, const ModelParams& params, const Tensor& input) {
  const ShapePlan plan = plan_shapes(cfg, input.dim(0), input.dim(1), input.dim(2));
  Prediction pred;
  run_forward(cfg, plan, params, input, nullptr, pred.logits);
  pred.probs = softmax(pred.logits);
  pred.argmax_class = 0;
  for (std::size_t i = 1; i < pred.probs.size(); ++i) {
    if (pred.probs[i] > pred.probs[pred.argmax_class]) pred.argmax_class = static_cast<int>(i);
  }
  return pred;
}

double bce_loss(const Prediction& pred, int label) {
  if (label < 0 || label >= static_cast<int>(pred.probs.size())) {
    throw DomainError("doa-model", "bce_loss", "label out of range");
  }
  const double n = static_cast<double>(pred.probs.size());
  double loss = 0.0;
  for (std::size_t k = 0; k < pred.probs.size(); ++k) {
    const double p = std::clamp(pred.probs[k], kProbClampLo, kProbClampHi);
    const double y = static_cast<int>(k) == label ? 1.0 : 0.0;
    loss += y * std::log(p) + (1.0 - y) * std::log(1.0 - p);
  }
  return -loss / n;
}

double loss_value(const NetConfig& cfg, const Prediction& pred, int label) {
  if (cfg.loss == LossKind::kSoftmaxBce) return bce_loss(pred, label);
  if (label < 0 || label >= static_cast<int>(pred.probs.size())) {
    throw DomainError("doa-model", "loss_value", "label out of range");
  }
  return -std::log(std::clamp(pred.probs[label], kProbClampLo, kProbClampHi));
}

ForwardBackwardResult forward_backward(const NetConfig& cfg, const ModelParams& params, const Tensor& input,
                                       int label) {
  const ShapePlan plan = plan_shapes(cfg, input.dim(0), input.dim(1), input.dim(2));

  Trace trace;
  ForwardBackwardResult res;
  run_forward(cfg, plan, params, input, &trace, res.pred.logits);
  res.pred.probs = softmax(res.pred.logits);
  res.pred.argmax_class = 0;
  for (std::size_t i = 1; i < res.pred.probs.size(); ++i) {
    if (res.pred.probs[i] > res.pred.probs[res.pred.argmax_class]) res.pred.argmax_class = static_cast<int>(i);
  }
  res.loss = loss_value(cfg, res.pred, label);
  res.grads = zeros_like(params);

  // --- fully connected stack (final layer first) ---
  std::vector<double> dx = loss_grad_logits(cfg, res.pred.probs, label);
  const std::size_t n_fc = cfg.fc_dims.size();
  std::size_t pi = params.tensors.size();
  for (std::size_t ri = 0; ri <= n_fc; ++ri) {
    const std::size_t layer = n_fc - ri;  // n_fc is the final linear layer
    pi -= 2;
    const Tensor& w = params.tensors[pi].tensor;
    Tensor& dw = res.grads.tensors[pi].tensor;
    Tensor& db = res.grads.tensors[pi + 1].tensor;
    const std::vector<double>& x = trace.fc_in[layer];
    const std::size_t out_n = w.dim(0), in_n = w.dim(1);

    std::vector<double> dprev(in_n, 0.0);
    for (std::size_t o = 0; o < out_n; ++o) {
      const double g = dx[o];
      db[o] += g;
      double* dwr = dw.data() + o * in_n;
      const double* wr = w.data() + o * in_n;
      for (std::size_t k = 0; k < in_n; ++k) {
        dwr[k] += g * x[k];
        dprev[k] += g * wr[k];
      }
    }
    if (layer > 0) {
      const std::vector<double>& z = trace.fc_z[layer - 1];
      for (std::size_t k = 0; k < in_n; ++k) {
        if (z[k] <= 0.0) dprev[k] = 0.0;
      }
    }
    dx = std::move(dprev);
  }

  // --- conv blocks, last to first ---
  const std::size_t last_block = cfg.blocks.size() - 1;
  Tensor dcur(trace.pool_out[last_block].shape());
  std::copy(dx.begin(), dx.end(), dcur.data());

  std::size_t conv_idx = trace.conv_z.size();
  for (std::size_t rb = 0; rb <= last_block; ++rb) {
    const std::size_t b = last_block - rb;
    // pool backward: route each pooled gradient to its argmax source
    Tensor dact(trace.block_act[b].shape());
    const auto& src = trace.pool_src[b];
    for (std::size_t i = 0; i < src.size(); ++i) dact[src[i]] += dcur[i];

    for (int rc = 0; rc < cfg.blocks[b].convs_per_block; ++rc) {
      --conv_idx;
      const Tensor& z = trace.conv_z[conv_idx];
      Tensor dz(z.shape());
      for (std::size_t i = 0; i < z.size(); ++i) dz[i] = z[i] > 0.0 ? dact[i] : 0.0;

      pi -= 2;
      const Tensor& w = params.tensors[pi].tensor;
      Tensor& dw = res.grads.tensors[pi].tensor;
      Tensor& db = res.grads.tensors[pi + 1].tensor;
      const Tensor& x = trace.conv_in[conv_idx];

      const bool need_dx = !(b == 0 && rc == cfg.blocks[b].convs_per_block - 1);
      Tensor dxin;
      if (need_dx) dxin = Tensor(x.shape());
      conv_1x2_backward(x, w, dz, dw, db, need_dx ? &dxin : nullptr);
      dact = std::move(dxin);
    }
    if (b > 0) dcur = std::move(dact);
  }

  return res;
}

}  // namespace auris::doa
