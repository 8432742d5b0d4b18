#include "auris/classify/template_store.hpp"

#include <fstream>

#include <json.hpp>

#include "auris/classify/zero_shot.hpp"
#include "auris/common/error.hpp"

namespace auris::classify {

void TemplateStore::put(const std::string& class_name, std::vector<double> embedding) {
  unit_normalize(embedding, "template for " + class_name);
  if (!templates_.empty() && embedding.size() != dim()) {
    throw DomainError("classifier", "TemplateStore", "template dimension mismatch for " + class_name);
  }
  templates_[class_name] = std::move(embedding);
}

const std::vector<double>& TemplateStore::lookup(const std::string& class_name) const {
  auto it = templates_.find(class_name);
  if (it == templates_.end()) {
    throw DomainError("classifier", "embed_text", "unknown class name: " + class_name);
  }
  return it->second;
}

std::size_t TemplateStore::dim() const {
  if (templates_.empty()) return 0;
  return templates_.begin()->second.size();
}

void TemplateStore::save(const std::filesystem::path& path) const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, emb] : templates_) j[name] = emb;
  std::ofstream out(path);
  if (!out) throw DomainError("classifier", "TemplateStore::save", "cannot open " + path.string());
  out << j.dump(2) << "\n";
}

TemplateStore TemplateStore::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("classifier", "TemplateStore::load", "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("classifier", "TemplateStore::load", "bad JSON in " + path.string() + ": " + e.what());
  }
  if (!j.is_object()) {
    throw DomainError("classifier", "TemplateStore::load", "template store must be a JSON object");
  }
  TemplateStore store;
  for (const auto& [name, arr] : j.items()) {
    if (!arr.is_array()) {
      throw DomainError("classifier", "TemplateStore::load", "template for " + name + " must be an array");
    }
    store.put(name, arr.get<std::vector<double>>());
  }
  return store;
}

}  // namespace auris::classify
