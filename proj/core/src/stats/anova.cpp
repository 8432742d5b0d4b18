#include "auris/stats/anova.hpp"

#include <cmath>
#include <limits>

#include "auris/common/error.hpp"

namespace auris::stats {

namespace {

double beta_cf(double a, double b, double x) {
  // Lentz's algorithm for the continued fraction of I_x(a,b)
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-15;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 500; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                       b * std::log(1.0 - x);
  const double bt = std::exp(ln_bt);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return bt * beta_cf(a, b, x) / a;
  }
  return 1.0 - bt * beta_cf(b, a, 1.0 - x) / b;
}

double f_survival(double x, std::size_t d1, std::size_t d2) {
  if (x <= 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  const double a = static_cast<double>(d2) / 2.0;
  const double b = static_cast<double>(d1) / 2.0;
  const double t = static_cast<double>(d2) / (static_cast<double>(d2) + static_cast<double>(d1) * x);
  return incomplete_beta(a, b, t);
}

AnovaResult anova_oneway(const std::vector<RunGroup>& groups) {
  if (groups.size() < 2) throw DomainError("eval-stats", "anova_oneway", "need at least 2 groups");
  std::size_t total_n = 0;
  double grand_sum = 0.0;
  for (const auto& g : groups) {
    if (g.accuracies.size() < 2) {
      throw DomainError("eval-stats", "anova_oneway",
                        "group " + g.model_name + " needs at least 2 observations");
    }
    for (double v : g.accuracies) {
      if (!std::isfinite(v)) {
        throw DomainError("eval-stats", "anova_oneway", "non-finite observation in " + g.model_name);
      }
      grand_sum += v;
    }
    total_n += g.accuracies.size();
  }
  const double grand_mean = grand_sum / static_cast<double>(total_n);

  double ss_between = 0.0, ss_within = 0.0;
  for (const auto& g : groups) {
    double mean = 0.0;
    for (double v : g.accuracies) mean += v;
    mean /= static_cast<double>(g.accuracies.size());
    ss_between += static_cast<double>(g.accuracies.size()) * (mean - grand_mean) * (mean - grand_mean);
    for (double v : g.accuracies) ss_within += (v - mean) * (v - mean);
  }

  AnovaResult res;
  res.df_between = groups.size() - 1;
  res.df_within = total_n - groups.size();
  res.ms_within = ss_within / static_cast<double>(res.df_within);

  if (ss_within == 0.0 && ss_between == 0.0) {
    res.f = 0.0;
    res.p = 1.0;
    res.degenerate = true;
    return res;
  }
  if (ss_within == 0.0) {
    res.f = std::numeric_limits<double>::infinity();
    res.p = 0.0;
    return res;
  }
  const double ms_between = ss_between / static_cast<double>(res.df_between);
  res.f = ms_between / res.ms_within;
  res.p = f_survival(res.f, res.df_between, res.df_within);
  return res;
}

}  // namespace auris::stats
