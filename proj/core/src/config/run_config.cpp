#include "auris/config/run_config.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "auris/common/error.hpp"

namespace auris::config {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed.contains(key)) {
      throw DomainError("cli", "RunConfig", "unknown key '" + key + "' in " + where);
    }
  }
}

template <typename T>
void opt(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

void parse_geometry(const json& j, sim::ArrayGeometry& g) {
  reject_unknown(j, {"mic_positions_m", "speed_of_sound_mps"}, "geometry");
  if (j.contains("mic_positions_m")) {
    const auto& arr = j.at("mic_positions_m");
    if (!arr.is_array() || arr.size() != 4) {
      throw DomainError("cli", "RunConfig", "geometry.mic_positions_m must list exactly 4 [x,y,z] metres");
    }
    for (int i = 0; i < 4; ++i) {
      const auto& p = arr[i];
      if (!p.is_array() || p.size() != 3) {
        throw DomainError("cli", "RunConfig", "each mic position must be [x, y, z] in metres");
      }
      g.mic_positions[i] = {p[0].get<double>(), p[1].get<double>(), p[2].get<double>()};
    }
  }
  opt(j, "speed_of_sound_mps", g.speed_of_sound);
  g.validate();
}

void parse_dataset(const json& j, sim::DatasetConfig& d) {
  reject_unknown(j,
                 {"distance_min_m", "distance_max_m", "azimuth_margin_deg", "self_distance_min_m",
                  "self_distance_max_m", "self_level_gain_db", "snr_min_db", "snr_max_db", "noiseless",
                  "w_band_noise", "w_chirp", "w_pure_tone", "tone_min_hz", "tone_max_hz", "band_lo_min_hz",
                  "band_lo_max_hz", "band_hi_min_hz", "band_hi_max_hz"},
                 "dataset");
  opt(j, "distance_min_m", d.distance_min_m);
  opt(j, "distance_max_m", d.distance_max_m);
  opt(j, "azimuth_margin_deg", d.azimuth_margin_deg);
  opt(j, "self_distance_min_m", d.self_distance_min_m);
  opt(j, "self_distance_max_m", d.self_distance_max_m);
  opt(j, "self_level_gain_db", d.self_level_gain_db);
  opt(j, "snr_min_db", d.snr_min_db);
  opt(j, "snr_max_db", d.snr_max_db);
  opt(j, "noiseless", d.noiseless);
  opt(j, "w_band_noise", d.w_band_noise);
  opt(j, "w_chirp", d.w_chirp);
  opt(j, "w_pure_tone", d.w_pure_tone);
  opt(j, "tone_min_hz", d.tone_min_hz);
  opt(j, "tone_max_hz", d.tone_max_hz);
  opt(j, "band_lo_min_hz", d.band_lo_min_hz);
  opt(j, "band_lo_max_hz", d.band_lo_max_hz);
  opt(j, "band_hi_min_hz", d.band_hi_min_hz);
  opt(j, "band_hi_max_hz", d.band_hi_max_hz);
}

void parse_stft(const json& j, dsp::StftConfig& s) {
  reject_unknown(j, {"window_len", "hop", "window_fn"}, "stft");
  opt(j, "window_len", s.window_len);
  opt(j, "hop", s.hop);
  if (j.contains("window_fn")) s.window_fn = dsp::window_fn_from_name(j.at("window_fn").get<std::string>());
  s.validate();
}

void parse_classical(const json& j, doa::ClassicalConfig& c) {
  reject_unknown(j,
                 {"f_min_hz", "aliasing_safety", "self_unorm_max", "self_residual_min", "self_level_min_db",
                  "calibration_offset_db"},
                 "model.classical");
  opt(j, "f_min_hz", c.f_min_hz);
  opt(j, "aliasing_safety", c.aliasing_safety);
  opt(j, "self_unorm_max", c.self_unorm_max);
  opt(j, "self_residual_min", c.self_residual_min);
  opt(j, "self_level_min_db", c.self_level_min_db);
  opt(j, "calibration_offset_db", c.calibration_offset_db);
}

void parse_model(const json& j, doa::NetConfig& m, doa::ClassicalConfig& c) {
  reject_unknown(j, {"blocks", "fc_dims", "num_classes", "input_layout", "loss", "classical"}, "model");
  if (j.contains("blocks")) {
    m.blocks.clear();
    for (const auto& b : j.at("blocks")) {
      reject_unknown(b, {"convs_per_block", "out_channels"}, "model.blocks[]");
      doa::BlockSpec spec;
      opt(b, "convs_per_block", spec.convs_per_block);
      opt(b, "out_channels", spec.out_channels);
      m.blocks.push_back(spec);
    }
  }
  opt(j, "fc_dims", m.fc_dims);
  opt(j, "num_classes", m.num_classes);
  if (j.contains("input_layout")) m.input_layout = doa::input_layout_from_name(j.at("input_layout"));
  if (j.contains("loss")) m.loss = doa::loss_kind_from_name(j.at("loss"));
  if (j.contains("classical")) parse_classical(j.at("classical"), c);
}

void parse_train(const json& j, doa::TrainConfig& t) {
  reject_unknown(j,
                 {"learning_rate", "batch_size", "epochs", "seed", "val_fraction", "ipd_noise_std",
                  "time_crop_frac"},
                 "train");
  opt(j, "learning_rate", t.learning_rate);
  opt(j, "batch_size", t.batch_size);
  opt(j, "epochs", t.epochs);
  opt(j, "seed", t.seed);
  opt(j, "val_fraction", t.val_fraction);
  opt(j, "ipd_noise_std", t.augment.ipd_noise_std);
  opt(j, "time_crop_frac", t.augment.time_crop_frac);
}

void parse_classifier(const json& j, ClassifierConfig& c) {
  reject_unknown(j, {"temperature", "threshold", "mel_bands", "vocabulary", "priority"}, "classifier");
  opt(j, "temperature", c.temperature);
  opt(j, "threshold", c.threshold);
  opt(j, "mel_bands", c.mel_bands);
  opt(j, "vocabulary", c.vocabulary);
  if (j.contains("priority")) {
    c.priority = classify::PriorityList(j.at("priority").get<std::vector<std::string>>());
  }
}

void parse_fusion(const json& j, FusionConfig& f) {
  reject_unknown(j, {"tau", "doa_gate_enabled", "doa_gate_band_frac"}, "fusion");
  opt(j, "tau", f.tau);
  opt(j, "doa_gate_enabled", f.gate.enabled);
  opt(j, "doa_gate_band_frac", f.gate.band_frac);
}

void parse_loop(const json& j, pipeline::MachineConfig& l) {
  reject_unknown(j, {"gate_db", "calibration_offset_db", "image_timeout_s"}, "loop");
  opt(j, "gate_db", l.gate_db);
  opt(j, "calibration_offset_db", l.calibration_offset_db);
  opt(j, "image_timeout_s", l.image_timeout_s);
}

}  // namespace

RunConfig RunConfig::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw DomainError("cli", "RunConfig", "cannot open config: " + file.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DomainError("cli", "RunConfig", "bad JSON in " + file.string() + ": " + e.what());
  }

  RunConfig cfg;
  reject_unknown(j,
                 {"geometry", "dataset", "stft", "sample_rate", "duration_s", "model", "train", "classifier",
                  "fusion", "loop", "paths"},
                 "top level");
  if (j.contains("geometry")) parse_geometry(j.at("geometry"), cfg.geometry);
  if (j.contains("dataset")) parse_dataset(j.at("dataset"), cfg.dataset);
  if (j.contains("stft")) parse_stft(j.at("stft"), cfg.stft);
  opt(j, "sample_rate", cfg.sample_rate);
  opt(j, "duration_s", cfg.duration_s);
  if (j.contains("model")) parse_model(j.at("model"), cfg.model, cfg.classical);
  if (j.contains("train")) parse_train(j.at("train"), cfg.train);
  if (j.contains("classifier")) parse_classifier(j.at("classifier"), cfg.classifier);
  if (j.contains("fusion")) parse_fusion(j.at("fusion"), cfg.fusion);
  if (j.contains("loop")) parse_loop(j.at("loop"), cfg.loop);
  if (j.contains("paths")) {
    for (const auto& [key, value] : j.at("paths").items()) {
      const auto p = value.get<std::string>();
      if (!std::filesystem::exists(p)) {
        throw DomainError("cli", "RunConfig", "paths." + key + " does not exist: " + p);
      }
      cfg.paths[key] = p;
    }
  }

  if (cfg.classifier.vocabulary.empty()) cfg.classifier.vocabulary = cfg.classifier.priority.ordered();
  return cfg;
}

void RunConfig::save(const std::filesystem::path& file) const {
  json j;
  j["geometry"]["speed_of_sound_mps"] = geometry.speed_of_sound;
  auto& mics = j["geometry"]["mic_positions_m"];
  for (const auto& m : geometry.mic_positions) mics.push_back({m.x, m.y, m.z});

  j["dataset"] = {{"distance_min_m", dataset.distance_min_m},
                  {"distance_max_m", dataset.distance_max_m},
                  {"azimuth_margin_deg", dataset.azimuth_margin_deg},
                  {"self_distance_min_m", dataset.self_distance_min_m},
                  {"self_distance_max_m", dataset.self_distance_max_m},
                  {"self_level_gain_db", dataset.self_level_gain_db},
                  {"snr_min_db", dataset.snr_min_db},
                  {"snr_max_db", dataset.snr_max_db},
                  {"noiseless", dataset.noiseless},
                  {"w_band_noise", dataset.w_band_noise},
                  {"w_chirp", dataset.w_chirp},
                  {"w_pure_tone", dataset.w_pure_tone},
                  {"tone_min_hz", dataset.tone_min_hz},
                  {"tone_max_hz", dataset.tone_max_hz},
                  {"band_lo_min_hz", dataset.band_lo_min_hz},
                  {"band_lo_max_hz", dataset.band_lo_max_hz},
                  {"band_hi_min_hz", dataset.band_hi_min_hz},
                  {"band_hi_max_hz", dataset.band_hi_max_hz}};
  j["stft"] = {{"window_len", stft.window_len}, {"hop", stft.hop}, {"window_fn", dsp::window_fn_name(stft.window_fn)}};
  j["sample_rate"] = sample_rate;
  j["duration_s"] = duration_s;
  j["model"]["fc_dims"] = model.fc_dims;
  j["model"]["num_classes"] = model.num_classes;
  j["model"]["input_layout"] = doa::input_layout_name(model.input_layout);
  j["model"]["loss"] = doa::loss_kind_name(model.loss);
  for (const auto& b : model.blocks) {
    j["model"]["blocks"].push_back({{"convs_per_block", b.convs_per_block}, {"out_channels", b.out_channels}});
  }
  j["model"]["classical"] = {{"f_min_hz", classical.f_min_hz},
                             {"aliasing_safety", classical.aliasing_safety},
                             {"self_unorm_max", classical.self_unorm_max},
                             {"self_residual_min", classical.self_residual_min},
                             {"self_level_min_db", classical.self_level_min_db},
                             {"calibration_offset_db", classical.calibration_offset_db}};
  j["train"] = {{"learning_rate", train.learning_rate}, {"batch_size", train.batch_size},
                {"epochs", train.epochs},               {"seed", train.seed},
                {"val_fraction", train.val_fraction},   {"ipd_noise_std", train.augment.ipd_noise_std},
                {"time_crop_frac", train.augment.time_crop_frac}};
  j["classifier"] = {{"temperature", classifier.temperature},
                     {"threshold", classifier.threshold},
                     {"mel_bands", classifier.mel_bands},
                     {"vocabulary", classifier.vocabulary},
                     {"priority", classifier.priority.ordered()}};
  j["fusion"] = {{"tau", fusion.tau},
                 {"doa_gate_enabled", fusion.gate.enabled},
                 {"doa_gate_band_frac", fusion.gate.band_frac}};
  j["loop"] = {{"gate_db", loop.gate_db},
               {"calibration_offset_db", loop.calibration_offset_db},
               {"image_timeout_s", loop.image_timeout_s}};
  if (!paths.empty()) j["paths"] = paths;

  std::ofstream out(file);
  if (!out) throw DomainError("cli", "RunConfig", "cannot write config: " + file.string());
  out << j.dump(2) << "\n";
}

}  // namespace auris::config
