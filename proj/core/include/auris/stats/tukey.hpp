#pragma once

#include <string>
#include <vector>

#include "auris/stats/anova.hpp"

namespace auris::stats {

struct TukeyComparison {
  std::string model_a;
  std::string model_b;
  double mean_diff = 0.0;  // mean(a) - mean(b)
  double q_stat = 0.0;
  bool significant = false;
};

/// Critical value of the studentized range, from the embedded table:
/// alpha in {0.05, 0.01}, 2 <= k <= 10, df_within >= 2 (bucketed down to the
/// nearest tabulated row, which is conservative). Throws outside the table.
double studentized_range_critical(std::size_t k, std::size_t df_within, double alpha);

/// All pairwise comparisons with the Tukey-Kramer statistic
/// q = |mean_i - mean_j| / sqrt(MS_within/2 * (1/n_i + 1/n_j)).
std::vector<TukeyComparison> tukey_hsd(const std::vector<RunGroup>& groups, double alpha = 0.05);

}  // namespace auris::stats
