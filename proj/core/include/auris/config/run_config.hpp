#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "auris/classify/importance.hpp"
#include "auris/classify/mel_provider.hpp"
#include "auris/doa/classical.hpp"
#include "auris/doa/model.hpp"
#include "auris/doa/train.hpp"
#include "auris/dsp/stft.hpp"
#include "auris/fusion/select.hpp"
#include "auris/pipeline/machine.hpp"
#include "auris/sim/dataset.hpp"
#include "auris/sim/geometry.hpp"

namespace auris::config {

struct ClassifierConfig {
  double temperature = 0.07;
  double threshold = 0.3;
  std::size_t mel_bands = 64;
  std::vector<std::string> vocabulary;  // defaults to the priority list entries
  classify::PriorityList priority = classify::PriorityList::default_list();
};

struct FusionConfig {
  double tau = 0.5;
  fusion::DoaGateConfig gate;
};

/// The whole configuration tree. Every field has a default; a JSON config
/// file overrides selectively, and unknown keys are rejected outright so
/// typos cannot silently fall back to defaults.
struct RunConfig {
  sim::ArrayGeometry geometry = sim::ArrayGeometry::rectangular();
  sim::DatasetConfig dataset;
  dsp::StftConfig stft;
  double sample_rate = 16000.0;
  double duration_s = 2.0;
  doa::NetConfig model = doa::NetConfig::desk_default();
  doa::ClassicalConfig classical;
  doa::TrainConfig train;
  ClassifierConfig classifier;
  FusionConfig fusion;
  pipeline::MachineConfig loop;
  std::map<std::string, std::string> paths;

  static RunConfig load(const std::filesystem::path& file);
  void save(const std::filesystem::path& file) const;
};

}  // namespace auris::config
