#include "auris/classify/importance.hpp"

#include <set>

namespace auris::classify {

PriorityList::PriorityList(std::vector<std::string> ordered) : ordered_(std::move(ordered)) {
  std::set<std::string> seen;
  for (const auto& name : ordered_) {
    if (!seen.insert(name).second) {
      throw DomainError("classifier", "PriorityList", "duplicate class in priority list: " + name);
    }
  }
}

std::size_t PriorityList::rank(const std::string& class_name) const {
  for (std::size_t i = 0; i < ordered_.size(); ++i) {
    if (ordered_[i] == class_name) return i + 1;
  }
  return ordered_.size() + 1;
}

PriorityList PriorityList::default_list() {
  return PriorityList({"siren", "car honking", "bike bell", "person talking", "doorbell", "phone ringing",
                       "dog barking", "instruments"});
}

std::optional<std::string> importance_filter(const std::vector<ClassScore>& scores,
                                             const PriorityList& priority, double threshold) {
  const ClassScore* best = nullptr;
  std::size_t best_rank = 0;
  for (const auto& s : scores) {
    if (!(s.prob > threshold)) continue;
    const std::size_t r = priority.rank(s.class_name);
    if (best == nullptr || r < best_rank || (r == best_rank && s.prob > best->prob) ||
        (r == best_rank && s.prob == best->prob && s.class_name < best->class_name)) {
      best = &s;
      best_rank = r;
    }
  }
  if (best == nullptr) return std::nullopt;
  return best->class_name;
}

}  // namespace auris::classify
