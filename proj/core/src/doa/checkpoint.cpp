#include "auris/doa/checkpoint.hpp"

#include <cstring>
#include <fstream>

#include <json.hpp>

#include "auris/common/rng.hpp"

namespace auris::doa {

namespace {

constexpr char kMagic[4] = {'A', 'D', 'M', '1'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ofstream& out, std::uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
               static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(b, 4);
}

void put_u64(std::ofstream& out, std::uint64_t v) {
  put_u32(out, static_cast<std::uint32_t>(v & 0xffffffffULL));
  put_u32(out, static_cast<std::uint32_t>(v >> 32));
}

std::uint32_t get_u32(std::ifstream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::uint64_t get_u64(std::ifstream& in) {
  const std::uint64_t lo = get_u32(in);
  const std::uint64_t hi = get_u32(in);
  return lo | (hi << 32);
}

nlohmann::json net_to_json(const NetConfig& net) {
  nlohmann::json j;
  j["blocks"] = nlohmann::json::array();
  for (const auto& b : net.blocks) {
    j["blocks"].push_back({{"convs_per_block", b.convs_per_block}, {"out_channels", b.out_channels}});
  }
  j["fc_dims"] = net.fc_dims;
  j["num_classes"] = net.num_classes;
  j["input_layout"] = input_layout_name(net.input_layout);
  j["loss"] = loss_kind_name(net.loss);
  return j;
}

NetConfig net_from_json(const nlohmann::json& j) {
  NetConfig net;
  net.blocks.clear();
  for (const auto& b : j.at("blocks")) {
    net.blocks.push_back({b.at("convs_per_block").get<int>(), b.at("out_channels").get<int>()});
  }
  net.fc_dims = j.at("fc_dims").get<std::vector<int>>();
  net.num_classes = j.at("num_classes").get<int>();
  net.input_layout = input_layout_from_name(j.at("input_layout").get<std::string>());
  net.loss = loss_kind_from_name(j.at("loss").get<std::string>());
  return net;
}

nlohmann::json sidecar_json(const Checkpoint& ckpt) {
  nlohmann::json j;
  j["model"] = net_to_json(ckpt.net);
  j["stft"] = {{"window_len", ckpt.stft.window_len},
               {"hop", ckpt.stft.hop},
               {"window_fn", dsp::window_fn_name(ckpt.stft.window_fn)}};
  j["sample_rate"] = ckpt.sample_rate;
  return j;
}

}  // namespace

std::uint64_t checkpoint_config_hash(const NetConfig& net, const dsp::StftConfig& stft, double sample_rate) {
  Checkpoint tmp;
  tmp.net = net;
  tmp.stft = stft;
  tmp.sample_rate = sample_rate;
  return stable_hash(sidecar_json(tmp).dump());
}

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt) {
  ckpt.params.check_finite();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("doa-model", "save_checkpoint", "cannot open for writing: " + path.string());

  out.write(kMagic, 4);
  put_u32(out, kVersion);
  put_u64(out, checkpoint_config_hash(ckpt.net, ckpt.stft, ckpt.sample_rate));
  put_u32(out, static_cast<std::uint32_t>(ckpt.params.tensors.size()));
  for (const auto& nt : ckpt.params.tensors) {
    put_u32(out, static_cast<std::uint32_t>(nt.name.size()));
    out.write(nt.name.data(), static_cast<std::streamsize>(nt.name.size()));
    put_u32(out, static_cast<std::uint32_t>(nt.tensor.rank()));
    for (std::size_t d : nt.tensor.shape()) put_u32(out, static_cast<std::uint32_t>(d));
    for (std::size_t i = 0; i < nt.tensor.size(); ++i) {
      const float f = static_cast<float>(nt.tensor[i]);
      std::uint32_t u;
      std::memcpy(&u, &f, 4);
      put_u32(out, u);
    }
  }
  if (!out) throw DomainError("doa-model", "save_checkpoint", "write failed: " + path.string());

  auto sidecar = path;
  sidecar += ".json";
  std::ofstream js(sidecar);
  if (!js) throw DomainError("doa-model", "save_checkpoint", "cannot write sidecar: " + sidecar.string());
  js << sidecar_json(ckpt).dump(2) << "\n";
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("doa-model", "load_checkpoint", "cannot open: " + path.string());
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) {
    throw DomainError("doa-model", "load_checkpoint", "bad magic in " + path.string());
  }
  const std::uint32_t version = get_u32(in);
  if (version != kVersion) {
    throw DomainError("doa-model", "load_checkpoint",
                      "unsupported checkpoint version " + std::to_string(version));
  }
  const std::uint64_t stored_hash = get_u64(in);

  Checkpoint ckpt;
  const std::uint32_t n_tensors = get_u32(in);
  for (std::uint32_t t = 0; t < n_tensors; ++t) {
    const std::uint32_t name_len = get_u32(in);
    std::string name(name_len, '\0');
    in.read(name.data(), name_len);
    const std::uint32_t ndims = get_u32(in);
    std::vector<std::size_t> dims(ndims);
    for (auto& d : dims) d = get_u32(in);
    Tensor tensor(dims);
    for (std::size_t i = 0; i < tensor.size(); ++i) {
      const std::uint32_t u = get_u32(in);
      float f;
      std::memcpy(&f, &u, 4);
      tensor[i] = f;
    }
    ckpt.params.tensors.push_back({std::move(name), std::move(tensor)});
  }
  if (!in) throw DomainError("doa-model", "load_checkpoint", "truncated checkpoint: " + path.string());

  auto sidecar = path;
  sidecar += ".json";
  std::ifstream js(sidecar);
  if (!js) throw DomainError("doa-model", "load_checkpoint", "missing sidecar: " + sidecar.string());
  nlohmann::json j;
  try {
    js >> j;
    ckpt.net = net_from_json(j.at("model"));
    ckpt.stft.window_len = j.at("stft").at("window_len").get<std::size_t>();
    ckpt.stft.hop = j.at("stft").at("hop").get<std::size_t>();
    ckpt.stft.window_fn = dsp::window_fn_from_name(j.at("stft").at("window_fn").get<std::string>());
    ckpt.sample_rate = j.at("sample_rate").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("doa-model", "load_checkpoint", "bad sidecar " + sidecar.string() + ": " + e.what());
  }

  const std::uint64_t expect = checkpoint_config_hash(ckpt.net, ckpt.stft, ckpt.sample_rate);
  if (expect != stored_hash) {
    throw DomainError("doa-model", "load_checkpoint",
                      "config hash mismatch between checkpoint and sidecar (file " +
                          std::to_string(stored_hash) + " vs sidecar " + std::to_string(expect) + ")");
  }
  return ckpt;
}

}  // namespace auris::doa
