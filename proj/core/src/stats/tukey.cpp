#include "auris/stats/tukey.hpp"

#include <cmath>
#include <limits>

#include "auris/common/error.hpp"

namespace auris::stats {

namespace {

// Upper critical values q(alpha; k, df) of the studentized range
// distribution. Provenance: computed from the studentized range CDF
// (scipy.stats.studentized_range.ppf, scipy 1.15.3), August 2026; rows are
// df = 2..30, 40, 60, 120, inf and columns k = 2..10, rounded to 4 decimals.
constexpr std::size_t kNumDf = 33;
constexpr std::size_t kNumK = 9;  // k = 2..10

constexpr std::size_t kDfValues[kNumDf] = {2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12,  13,  14,  15, 16, 17, 18,
                                           19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29,  30,  40,  60, 120,
                                           std::numeric_limits<std::size_t>::max()};

constexpr double kQ05[kNumDf][kNumK] = {
    {6.0849, 8.3308, 9.7980, 10.8811, 11.7343, 12.4349, 13.0273, 13.5390, 13.9885},
    {4.5007, 5.9096, 6.8245, 7.5017, 8.0371, 8.4783, 8.8525, 9.1766, 9.4620},
    {3.9265, 5.0402, 5.7571, 6.2870, 6.7064, 7.0526, 7.3465, 7.6015, 7.8263},
    {3.6354, 4.6017, 5.2183, 5.6731, 6.0329, 6.3299, 6.5823, 6.8014, 6.9947},
    {3.4605, 4.3392, 4.8956, 5.3049, 5.6284, 5.8953, 6.1222, 6.3192, 6.4931},
    {3.3441, 4.1649, 4.6813, 5.0601, 5.3591, 5.6057, 5.8153, 5.9973, 6.1579},
    {3.2612, 4.0410, 4.5288, 4.8858, 5.1672, 5.3991, 5.5962, 5.7673, 5.9183},
    {3.1992, 3.9485, 4.4149, 4.7554, 5.0235, 5.2444, 5.4319, 5.5947, 5.7384},
    {3.1511, 3.8768, 4.3266, 4.6543, 4.9120, 5.1242, 5.3042, 5.4605, 5.5984},
    {3.1127, 3.8196, 4.2561, 4.5736, 4.8230, 5.0281, 5.2021, 5.3531, 5.4863},
    {3.0813, 3.7729, 4.1987, 4.5077, 4.7502, 4.9496, 5.1187, 5.2653, 5.3946},
    {3.0552, 3.7341, 4.1509, 4.4529, 4.6897, 4.8842, 5.0491, 5.1921, 5.3181},
    {3.0332, 3.7014, 4.1105, 4.4066, 4.6385, 4.8290, 4.9903, 5.1301, 5.2534},
    {3.0143, 3.6734, 4.0760, 4.3670, 4.5947, 4.7816, 4.9399, 5.0770, 5.1979},
    {2.9980, 3.6491, 4.0461, 4.3327, 4.5568, 4.7406, 4.8962, 5.0310, 5.1498},
    {2.9837, 3.6280, 4.0200, 4.3027, 4.5237, 4.7048, 4.8580, 4.9907, 5.1077},
    {2.9712, 3.6093, 3.9970, 4.2763, 4.4944, 4.6731, 4.8243, 4.9552, 5.0705},
    {2.9600, 3.5927, 3.9766, 4.2528, 4.4685, 4.6450, 4.7944, 4.9236, 5.0375},
    {2.9500, 3.5779, 3.9583, 4.2319, 4.4452, 4.6199, 4.7676, 4.8954, 5.0079},
    {2.9410, 3.5646, 3.9419, 4.2130, 4.4244, 4.5973, 4.7435, 4.8699, 4.9813},
    {2.9329, 3.5526, 3.9270, 4.1959, 4.4055, 4.5769, 4.7217, 4.8469, 4.9572},
    {2.9255, 3.5417, 3.9136, 4.1805, 4.3883, 4.5583, 4.7018, 4.8260, 4.9353},
    {2.9188, 3.5317, 3.9013, 4.1663, 4.3727, 4.5413, 4.6838, 4.8069, 4.9152},
    {2.9126, 3.5226, 3.8900, 4.1534, 4.3583, 4.5258, 4.6672, 4.7894, 4.8969},
    {2.9070, 3.5142, 3.8796, 4.1415, 4.3451, 4.5115, 4.6519, 4.7733, 4.8800},
    {2.9017, 3.5064, 3.8701, 4.1305, 4.3329, 4.4983, 4.6378, 4.7584, 4.8644},
    {2.8969, 3.4993, 3.8612, 4.1203, 4.3217, 4.4861, 4.6248, 4.7446, 4.8500},
    {2.8924, 3.4926, 3.8530, 4.1109, 4.3112, 4.4747, 4.6127, 4.7318, 4.8366},
    {2.8882, 3.4864, 3.8454, 4.1021, 4.3015, 4.4642, 4.6014, 4.7199, 4.8241},
    {2.8582, 3.4421, 3.7907, 4.0391, 4.2316, 4.3885, 4.5205, 4.6345, 4.7345},
    {2.8288, 3.3987, 3.7371, 3.9774, 4.1632, 4.3141, 4.4411, 4.5504, 4.6463},
    {2.8000, 3.3561, 3.6846, 3.9169, 4.0960, 4.2412, 4.3630, 4.4678, 4.5595},
    {2.7718, 3.3145, 3.6332, 3.8577, 4.0301, 4.1696, 4.2863, 4.3865, 4.4741}};

constexpr double kQ01[kNumDf][kNumK] = {
    {14.0358, 19.0189, 22.2937, 24.7172, 26.6290, 28.2006, 29.5301, 30.6794, 31.6894},
    {8.2603, 10.6185, 12.1695, 13.3243, 14.2407, 14.9978, 15.6410, 16.1990, 16.6908},
    {6.5112, 8.1198, 9.1729, 9.9583, 10.5832, 11.1009, 11.5418, 11.9251, 12.2637},
    {5.7023, 6.9757, 7.8042, 8.4215, 8.9131, 9.3209, 9.6687, 9.9715, 10.2393},
    {5.2431, 6.3305, 7.0333, 7.5560, 7.9723, 8.3177, 8.6125, 8.8693, 9.0966},
    {4.9490, 5.9193, 6.5424, 7.0050, 7.3730, 7.6784, 7.9390, 8.1662, 8.3674},
    {4.7452, 5.6354, 6.2038, 6.6248, 6.9594, 7.2369, 7.4738, 7.6803, 7.8632},
    {4.5960, 5.4280, 5.9567, 6.3473, 6.6574, 6.9145, 7.1339, 7.3251, 7.4945},
    {4.4820, 5.2702, 5.7686, 6.1361, 6.4275, 6.6690, 6.8749, 7.0544, 7.2133},
    {4.3923, 5.1460, 5.6208, 5.9701, 6.2468, 6.4759, 6.6713, 6.8414, 6.9921},
    {4.3198, 5.0459, 5.5016, 5.8363, 6.1011, 6.3202, 6.5069, 6.6696, 6.8136},
    {4.2600, 4.9635, 5.4036, 5.7262, 5.9812, 6.1920, 6.3717, 6.5280, 6.6664},
    {4.2099, 4.8945, 5.3215, 5.6340, 5.8808, 6.0847, 6.2583, 6.4095, 6.5432},
    {4.1673, 4.8359, 5.2518, 5.5558, 5.7956, 5.9936, 6.1621, 6.3087, 6.4384},
    {4.1306, 4.7855, 5.1919, 5.4885, 5.7223, 5.9152, 6.0793, 6.2221, 6.3483},
    {4.0987, 4.7418, 5.1399, 5.4301, 5.6586, 5.8471, 6.0074, 6.1468, 6.2700},
    {4.0707, 4.7034, 5.0942, 5.3788, 5.6028, 5.7874, 5.9443, 6.0807, 6.2013},
    {4.0460, 4.6694, 5.0539, 5.3336, 5.5535, 5.7346, 5.8886, 6.0223, 6.1406},
    {4.0239, 4.6392, 5.0180, 5.2933, 5.5095, 5.6876, 5.8389, 5.9703, 6.0865},
    {4.0041, 4.6122, 4.9859, 5.2572, 5.4702, 5.6455, 5.7944, 5.9238, 6.0380},
    {3.9863, 4.5878, 4.9569, 5.2246, 5.4348, 5.6076, 5.7544, 5.8818, 5.9943},
    {3.9702, 4.5657, 4.9307, 5.1952, 5.4027, 5.5733, 5.7181, 5.8438, 5.9547},
    {3.9555, 4.5456, 4.9068, 5.1684, 5.3735, 5.5420, 5.6850, 5.8092, 5.9187},
    {3.9420, 4.5272, 4.8850, 5.1439, 5.3468, 5.5135, 5.6549, 5.7775, 5.8858},
    {3.9297, 4.5104, 4.8650, 5.1215, 5.3223, 5.4873, 5.6272, 5.7485, 5.8556},
    {3.9183, 4.4948, 4.8466, 5.1008, 5.2998, 5.4632, 5.6017, 5.7218, 5.8278},
    {3.9078, 4.4805, 4.8296, 5.0817, 5.2790, 5.4409, 5.5782, 5.6972, 5.8021},
    {3.8981, 4.4672, 4.8138, 5.0640, 5.2597, 5.4203, 5.5564, 5.6743, 5.7784},
    {3.8891, 4.4549, 4.7992, 5.0476, 5.2418, 5.4012, 5.5361, 5.6531, 5.7563},
    {3.8247, 4.3672, 4.6951, 4.9308, 5.1145, 5.2648, 5.3920, 5.5020, 5.5989},
    {3.7622, 4.2822, 4.5944, 4.8178, 4.9913, 5.1330, 5.2525, 5.3558, 5.4466},
    {3.7016, 4.1999, 4.4970, 4.7085, 4.8722, 5.0055, 5.1176, 5.2143, 5.2992},
    {3.6428, 4.1203, 4.4028, 4.6028, 4.7570, 4.8822, 4.9872, 5.0775, 5.1566}};

}  // namespace

double studentized_range_critical(std::size_t k, std::size_t df_within, double alpha) {
  const bool a05 = std::abs(alpha - 0.05) < 1e-12;
  const bool a01 = std::abs(alpha - 0.01) < 1e-12;
  if (!a05 && !a01) {
    throw DomainError("eval-stats", "tukey_hsd", "alpha must be 0.05 or 0.01 (embedded table)");
  }
  if (k < 2 || k > 10) {
    throw DomainError("eval-stats", "tukey_hsd", "embedded table covers 2 <= k <= 10 groups");
  }
  if (df_within < 2) {
    throw DomainError("eval-stats", "tukey_hsd", "need df_within >= 2");
  }
  // bucket down to the nearest tabulated df (critical value shrinks with df,
  // so this errs on the conservative side)
  std::size_t row = 0;
  for (std::size_t i = 0; i < kNumDf; ++i) {
    if (kDfValues[i] <= df_within) row = i;
  }
  const std::size_t col = k - 2;
  return a05 ? kQ05[row][col] : kQ01[row][col];
}

std::vector<TukeyComparison> tukey_hsd(const std::vector<RunGroup>& groups, double alpha) {
  const AnovaResult anova = anova_oneway(groups);  // validates and gives MS_within
  const double q_crit = studentized_range_critical(groups.size(), anova.df_within, alpha);

  std::vector<TukeyComparison> out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    double mean_i = 0.0;
    for (double v : groups[i].accuracies) mean_i += v;
    mean_i /= static_cast<double>(groups[i].accuracies.size());
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      double mean_j = 0.0;
      for (double v : groups[j].accuracies) mean_j += v;
      mean_j /= static_cast<double>(groups[j].accuracies.size());

      TukeyComparison cmp;
      cmp.model_a = groups[i].model_name;
      cmp.model_b = groups[j].model_name;
      cmp.mean_diff = mean_i - mean_j;

      const double se = std::sqrt(anova.ms_within / 2.0 *
                                  (1.0 / static_cast<double>(groups[i].accuracies.size()) +
                                   1.0 / static_cast<double>(groups[j].accuracies.size())));
      if (se > 0.0) {
        cmp.q_stat = std::abs(cmp.mean_diff) / se;
      } else {
        cmp.q_stat = cmp.mean_diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
      }
      cmp.significant = cmp.q_stat > q_crit;
      out.push_back(cmp);
    }
  }
  return out;
}

}  // namespace auris::stats
