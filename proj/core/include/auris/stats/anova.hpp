#pragma once

#include <string>
#include <vector>

namespace auris::stats {

struct RunGroup {
  std::string model_name;
  std::vector<double> accuracies;
};

struct AnovaResult {
  double f = 0.0;
  std::size_t df_between = 0;
  std::size_t df_within = 0;
  double p = 1.0;
  /// Set when every observation in every group is the same constant: F is a
  /// 0/0 there, reported as F = 0, p = 1.
  bool degenerate = false;
  double ms_within = 0.0;
};

/// One-way ANOVA. Zero within-group variance with unequal means gives
/// F = +inf, p = 0. The p-value comes from the F survival function via the
/// regularized incomplete beta (documented accuracy 1e-8).
AnovaResult anova_oneway(const std::vector<RunGroup>& groups);

/// Survival function of the F(d1, d2) distribution at x.
double f_survival(double x, std::size_t d1, std::size_t d2);

/// Regularized incomplete beta I_x(a, b) by Lentz's continued fraction.
double incomplete_beta(double a, double b, double x);

}  // namespace auris::stats
