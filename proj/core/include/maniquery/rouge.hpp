#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace maniquery {

using TokenSeq = std::vector<std::string>;

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

enum class RougeMetric { R1 = 0, R2 = 1, RW = 2, RSU4 = 3 };

inline constexpr std::array<RougeMetric, 4> kAllRougeMetrics = {RougeMetric::R1, RougeMetric::R2,
                                                                RougeMetric::RW, RougeMetric::RSU4};

std::string_view rouge_metric_name(RougeMetric metric);  // "r1", "r2", "rw", "rsu4"
std::optional<RougeMetric> parse_rouge_metric(std::string_view name);

/// How scores against several references are combined.
///  - Average: mean of the per-reference precision, recall and F1.
///  - Pooled: total matches over total counts across references.
enum class RougeAggregation { Average, Pooled };

struct RougeOptions {
  RougeAggregation aggregation = RougeAggregation::Average;
  /// Average over the leave-one-out reference subsets (needs >= 2 references).
  bool jackknife = false;
  double w_weight = 1.2;
  int max_skip = 4;  // intervening tokens allowed in a skip-bigram
};

/// Lowercase, punctuation to spaces, Porter stem. Stopwords are kept.
TokenSeq rouge_tokenize(std::string_view text);

/// F1 with beta = 1; 0 when precision + recall = 0.
double f1_score(double precision, double recall);

RougeScore rouge_n(std::span<const std::string> candidate, std::span<const TokenSeq> references,
                   int n, const RougeOptions& options = {});

/// Weighted LCS with f(k) = k^weight, maximised exactly over all common
/// subsequences. Recall and precision are f^-1(WLCS / f(len)).
RougeScore rouge_w(std::span<const std::string> candidate, std::span<const TokenSeq> references,
                   const RougeOptions& options = {});

/// Skip-bigrams with at most `max_skip` intervening tokens plus unigrams.
RougeScore rouge_su(std::span<const std::string> candidate, std::span<const TokenSeq> references,
                    const RougeOptions& options = {});

inline RougeScore rouge_su4(std::span<const std::string> candidate,
                            std::span<const TokenSeq> references, RougeOptions options = {}) {
  options.max_skip = 4;
  return rouge_su(candidate, references, options);
}

/// Raw weighted LCS score between two sequences. Throws Error for weight < 1.
double weighted_lcs(std::span<const std::string> x, std::span<const std::string> y, double weight);

struct RougeReport {
  RougeAggregation aggregation = RougeAggregation::Average;
  bool jackknife = false;
  std::vector<RougeMetric> metrics;
  std::array<RougeScore, 4> scores{};  // indexed by RougeMetric
  std::vector<std::string> reference_names;
  std::vector<std::array<RougeScore, 4>> per_reference;

  const RougeScore& operator[](RougeMetric m) const { return scores[static_cast<std::size_t>(m)]; }
};

RougeScore rouge_metric(RougeMetric metric, std::span<const std::string> candidate,
                        std::span<const TokenSeq> references, const RougeOptions& options = {});

RougeReport evaluate_rouge(std::span<const std::string> candidate,
                           std::span<const TokenSeq> references,
                           std::span<const std::string> reference_names,
                           std::span<const RougeMetric> metrics, const RougeOptions& options = {});

}  // namespace maniquery
