#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace auris::classify {

/// Class-name -> embedding map, persisted as JSON {name: [floats]} and
/// unit-normalized on load.
class TemplateStore {
 public:
  TemplateStore() = default;

  void put(const std::string& class_name, std::vector<double> embedding);
  const std::vector<double>& lookup(const std::string& class_name) const;
  bool contains(const std::string& class_name) const { return templates_.contains(class_name); }
  const std::map<std::string, std::vector<double>>& all() const { return templates_; }
  std::size_t dim() const;

  void save(const std::filesystem::path& path) const;
  static TemplateStore load(const std::filesystem::path& path);

 private:
  std::map<std::string, std::vector<double>> templates_;
};

}  // namespace auris::classify
