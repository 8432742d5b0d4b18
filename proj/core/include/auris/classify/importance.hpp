#pragma once

#include <optional>
#include <string>
#include <vector>

#include "auris/classify/zero_shot.hpp"

namespace auris::classify {

/// Ordered urgency list, rank 1 = most urgent. Classes not on the list are
/// treated as infinitely low priority but remain selectable.
class PriorityList {
 public:
  PriorityList() = default;
  explicit PriorityList(std::vector<std::string> ordered);

  /// 1-based rank; classes off the list get a rank past the end.
  std::size_t rank(const std::string& class_name) const;
  const std::vector<std::string>& ordered() const { return ordered_; }

  /// The eight default sound classes, most urgent first.
  static PriorityList default_list();

 private:
  std::vector<std::string> ordered_;
};

/// Keeps the classes scoring strictly above `threshold`; among those, the
/// best (lowest) priority rank wins, probability breaks rank ties, and the
/// lexicographically smaller name breaks exact probability ties. Returns
/// nothing when no class clears the threshold.
std::optional<std::string> importance_filter(const std::vector<ClassScore>& scores,
                                             const PriorityList& priority, double threshold = 0.3);

}  // namespace auris::classify
