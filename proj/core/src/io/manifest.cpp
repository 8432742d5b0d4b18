#include "auris/io/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "auris/common/error.hpp"
#include "auris/common/rng.hpp"

namespace auris::io {

namespace {

nlohmann::json load_json(const std::filesystem::path& path, const char* op) {
  std::ifstream in(path);
  if (!in) throw DomainError("io", op, "cannot open: " + path.string());
  try {
    nlohmann::json j;
    in >> j;
    return j;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("io", op, "bad JSON in " + path.string() + ": " + e.what());
  }
}

nlohmann::json stft_to_json(const dsp::StftConfig& cfg) {
  nlohmann::json j;
  j["window_len"] = cfg.window_len;
  j["hop"] = cfg.hop;
  j["window_fn"] = dsp::window_fn_name(cfg.window_fn);
  return j;
}

dsp::StftConfig stft_from_json(const nlohmann::json& j) {
  dsp::StftConfig cfg;
  cfg.window_len = j.at("window_len").get<std::size_t>();
  cfg.hop = j.at("hop").get<std::size_t>();
  cfg.window_fn = dsp::window_fn_from_name(j.at("window_fn").get<std::string>());
  cfg.validate();
  return cfg;
}

}  // namespace

void write_clip_manifest(const std::filesystem::path& path, const ClipManifest& m) {
  nlohmann::json j;
  j["label"] = direction_name(m.label);
  j["azimuth_deg"] = m.azimuth_deg;
  j["distance_m"] = m.distance_m;
  if (std::isfinite(m.snr_db)) {
    j["snr_db"] = m.snr_db;
  } else {
    j["snr_db"] = nullptr;  // noiseless
  }
  j["seed"] = m.seed;
  std::ofstream out(path);
  if (!out) throw DomainError("io", "write_clip_manifest", "cannot open for writing: " + path.string());
  out << j.dump(2) << "\n";
}

ClipManifest read_clip_manifest(const std::filesystem::path& path) {
  const auto j = load_json(path, "read_clip_manifest");
  ClipManifest m;
  try {
    m.label = direction_from_name(j.at("label").get<std::string>());
    m.azimuth_deg = j.at("azimuth_deg").get<double>();
    m.distance_m = j.at("distance_m").get<double>();
    m.snr_db = j.at("snr_db").is_null() ? std::numeric_limits<double>::infinity()
                                        : j.at("snr_db").get<double>();
    m.seed = j.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("io", "read_clip_manifest", "missing field in " + path.string() + ": " + e.what());
  }
  return m;
}

std::vector<ClipEntry> scan_clip_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw DomainError("io", "scan_clip_dir", "not a directory: " + dir.string());
  }
  std::vector<ClipEntry> entries;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() != ".wav") continue;
    auto sidecar = e.path();
    sidecar.replace_extension(".json");
    if (!std::filesystem::exists(sidecar)) {
      throw DomainError("io", "scan_clip_dir", "missing sidecar manifest for " + e.path().string());
    }
    entries.push_back({e.path(), read_clip_manifest(sidecar)});
  }
  std::sort(entries.begin(), entries.end(),
            [](const ClipEntry& a, const ClipEntry& b) { return a.wav.filename() < b.wav.filename(); });
  if (entries.empty()) throw DomainError("io", "scan_clip_dir", "no WAV clips in " + dir.string());
  return entries;
}

std::uint64_t stft_config_hash(const dsp::StftConfig& cfg) {
  return stable_hash(stft_to_json(cfg).dump());
}

void write_feature_manifest(const std::filesystem::path& path, const FeatureManifest& m) {
  nlohmann::json j;
  j["stft"] = stft_to_json(m.stft);
  j["sample_rate"] = m.sample_rate;
  j["stft_hash"] = stft_config_hash(m.stft);
  j["items"] = nlohmann::json::array();
  for (const auto& item : m.items) {
    j["items"].push_back({{"tensor", item.tensor_file}, {"label", direction_name(item.label)}});
  }
  std::ofstream out(path);
  if (!out) throw DomainError("io", "write_feature_manifest", "cannot open for writing: " + path.string());
  out << j.dump(2) << "\n";
}

FeatureManifest read_feature_manifest(const std::filesystem::path& path) {
  const auto j = load_json(path, "read_feature_manifest");
  FeatureManifest m;
  try {
    m.stft = stft_from_json(j.at("stft"));
    m.sample_rate = j.at("sample_rate").get<double>();
    for (const auto& item : j.at("items")) {
      m.items.push_back({item.at("tensor").get<std::string>(),
                         direction_from_name(item.at("label").get<std::string>())});
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("io", "read_feature_manifest", "malformed manifest " + path.string() + ": " + e.what());
  }
  return m;
}

}  // namespace auris::io
