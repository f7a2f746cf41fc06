#include "maniquery/rouge.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <map>

#include "maniquery/error.hpp"
#include "maniquery/porter.hpp"

namespace maniquery {
namespace {

using Counts = std::map<std::string, double>;

/// Matches and totals for one candidate/reference pair.
struct Tally {
  double hits_p = 0.0;   // matched mass on the candidate side
  double hits_r = 0.0;   // matched mass on the reference side
  double cand_total = 0.0;
  double ref_total = 0.0;
};

using Transform = double (*)(double, double);

double identity(double v, double) { return v; }
double weighted_inverse(double v, double w) { return std::pow(v, 1.0 / w); }

RougeScore from_ratio(const Tally& t, Transform transform, double param) {
  RougeScore s;
  s.precision = t.cand_total > 0.0 ? transform(t.hits_p / t.cand_total, param) : 0.0;
  s.recall = t.ref_total > 0.0 ? transform(t.hits_r / t.ref_total, param) : 0.0;
  s.f1 = f1_score(s.precision, s.recall);
  return s;
}

Tally clipped_overlap(const Counts& cand, const Counts& ref) {
  Tally t;
  for (const auto& [_, c] : cand) t.cand_total += c;
  for (const auto& [_, c] : ref) t.ref_total += c;
  auto a = cand.begin();
  auto b = ref.begin();
  while (a != cand.end() && b != ref.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      const double m = std::min(a->second, b->second);
      t.hits_p += m;
      t.hits_r += m;
      ++a;
      ++b;
    }
  }
  return t;
}

Counts ngram_counts(std::span<const std::string> tokens, int n) {
  Counts out;
  const auto len = static_cast<int>(tokens.size());
  for (int i = 0; i + n <= len; ++i) {
    std::string key = tokens[static_cast<std::size_t>(i)];
    for (int k = 1; k < n; ++k) {
      key += '\x1f';
      key += tokens[static_cast<std::size_t>(i + k)];
    }
    out[key] += 1.0;
  }
  return out;
}

Counts skip_unigram_counts(std::span<const std::string> tokens, int max_skip) {
  Counts out;
  const std::size_t len = tokens.size();
  for (std::size_t i = 0; i < len; ++i) {
    out["\x1e" + tokens[i]] += 1.0;
    for (std::size_t j = i + 1; j < len; ++j) {
      if (max_skip >= 0 && j - i - 1 > static_cast<std::size_t>(max_skip)) break;
      out[tokens[i] + '\x1f' + tokens[j]] += 1.0;
    }
  }
  return out;
}

/// Applies a pairwise tally function across references per the options.
template <typename PairFn>
RougeScore aggregate(std::span<const TokenSeq> refs, const RougeOptions& options, PairFn&& pair,
                     Transform transform = identity, double param = 1.0) {
  auto combine = [&](const std::vector<std::size_t>& subset) {
    RougeScore s;
    if (subset.empty()) return s;
    if (options.aggregation == RougeAggregation::Pooled) {
      Tally total;
      for (std::size_t r : subset) {
        const Tally t = pair(refs[r]);
        total.hits_p += t.hits_p;
        total.hits_r += t.hits_r;
        total.cand_total += t.cand_total;
        total.ref_total += t.ref_total;
      }
      return from_ratio(total, transform, param);
    }
    for (std::size_t r : subset) {
      const RougeScore one = from_ratio(pair(refs[r]), transform, param);
      s.precision += one.precision;
      s.recall += one.recall;
      s.f1 += one.f1;
    }
    const double k = static_cast<double>(subset.size());
    s.precision /= k;
    s.recall /= k;
    s.f1 /= k;
    return s;
  };

  std::vector<std::size_t> all(refs.size());
  for (std::size_t r = 0; r < refs.size(); ++r) all[r] = r;
  if (!options.jackknife || refs.size() < 2) return combine(all);

  RougeScore mean;
  for (std::size_t skip = 0; skip < refs.size(); ++skip) {
    std::vector<std::size_t> subset;
    for (std::size_t r = 0; r < refs.size(); ++r) {
      if (r != skip) subset.push_back(r);
    }
    const RougeScore s = combine(subset);
    mean.precision += s.precision;
    mean.recall += s.recall;
    mean.f1 += s.f1;
  }
  const double k = static_cast<double>(refs.size());
  mean.precision /= k;
  mean.recall /= k;
  mean.f1 /= k;
  return mean;
}

}  // namespace

std::string_view rouge_metric_name(RougeMetric metric) {
  switch (metric) {
    case RougeMetric::R1: return "r1";
    case RougeMetric::R2: return "r2";
    case RougeMetric::RW: return "rw";
    case RougeMetric::RSU4: return "rsu4";
  }
  return "?";
}

std::optional<RougeMetric> parse_rouge_metric(std::string_view name) {
  for (RougeMetric m : kAllRougeMetrics) {
    if (rouge_metric_name(m) == name) return m;
  }
  return std::nullopt;
}

TokenSeq rouge_tokenize(std::string_view text) {
  TokenSeq out;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) out.push_back(porter_stem(word));
    word.clear();
  };
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u)) {
      word += static_cast<char>(std::tolower(u));
    } else {
      flush();
    }
  }
  flush();
  return out;
}

double f1_score(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

RougeScore rouge_n(std::span<const std::string> candidate, std::span<const TokenSeq> references,
                   int n, const RougeOptions& options) {
  const Counts cand = ngram_counts(candidate, n);
  return aggregate(references, options,
                   [&](const TokenSeq& ref) { return clipped_overlap(cand, ngram_counts(ref, n)); });
}

RougeScore rouge_su(std::span<const std::string> candidate, std::span<const TokenSeq> references,
                    const RougeOptions& options) {
  const Counts cand = skip_unigram_counts(candidate, options.max_skip);
  return aggregate(references, options, [&](const TokenSeq& ref) {
    return clipped_overlap(cand, skip_unigram_counts(ref, options.max_skip));
  });
}

double weighted_lcs(std::span<const std::string> x, std::span<const std::string> y, double weight) {
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  if (weight < 1.0) throw Error("weighted LCS needs weight >= 1");
  if (n == 0 || m == 0) return 0.0;
  std::vector<double> f(std::min(n, m) + 1);
  for (std::size_t k = 0; k < f.size(); ++k) f[k] = std::pow(static_cast<double>(k), weight);

  // best(i, j): best score over alignments of x[0..i) and y[0..j).
  // diag(i, j): length of the run of equal tokens ending at (i-1, j-1).
  // An alignment whose last run has length k ends at (i-1, j-1) only if
  // k <= diag(i, j), and the rest lies inside the (i-k, j-k) prefixes.
  // Splitting one run in two never scores higher (f is superadditive for
  // weight >= 1), so the maximum over k is exact.
  std::vector<double> best((n + 1) * (m + 1), 0.0);
  std::vector<std::uint32_t> diag((n + 1) * (m + 1), 0);
  auto idx = [m](std::size_t i, std::size_t j) { return i * (m + 1) + j; };

  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      double cell = std::max(best[idx(i - 1, j)], best[idx(i, j - 1)]);
      if (x[i - 1] == y[j - 1]) {
        const std::uint32_t run = diag[idx(i - 1, j - 1)] + 1;
        diag[idx(i, j)] = run;
        for (std::size_t k = 1; k <= run; ++k) cell = std::max(cell, best[idx(i - k, j - k)] + f[k]);
      }
      best[idx(i, j)] = cell;
    }
  }
  return best[idx(n, m)];
}

RougeScore rouge_w(std::span<const std::string> candidate, std::span<const TokenSeq> references,
                   const RougeOptions& options) {
  const double w = options.w_weight;
  const double cand_norm = std::pow(static_cast<double>(candidate.size()), w);
  return aggregate(
      references, options,
      [&](const TokenSeq& ref) {
        Tally t;
        t.cand_total = cand_norm;
        t.ref_total = std::pow(static_cast<double>(ref.size()), w);
        t.hits_p = t.hits_r = weighted_lcs(candidate, ref, w);
        return t;
      },
      weighted_inverse, w);
}

RougeScore rouge_metric(RougeMetric metric, std::span<const std::string> candidate,
                        std::span<const TokenSeq> references, const RougeOptions& options) {
  switch (metric) {
    case RougeMetric::R1: return rouge_n(candidate, references, 1, options);
    case RougeMetric::R2: return rouge_n(candidate, references, 2, options);
    case RougeMetric::RW: return rouge_w(candidate, references, options);
    case RougeMetric::RSU4: return rouge_su4(candidate, references, options);
  }
  return {};
}

RougeReport evaluate_rouge(std::span<const std::string> candidate,
                           std::span<const TokenSeq> references,
                           std::span<const std::string> reference_names,
                           std::span<const RougeMetric> metrics, const RougeOptions& options) {
  RougeReport report;
  report.aggregation = options.aggregation;
  report.jackknife = options.jackknife;
  report.metrics.assign(metrics.begin(), metrics.end());
  report.reference_names.assign(reference_names.begin(), reference_names.end());
  for (RougeMetric m : metrics) {
    report.scores[static_cast<std::size_t>(m)] = rouge_metric(m, candidate, references, options);
  }
  RougeOptions single = options;
  single.jackknife = false;
  for (const TokenSeq& ref : references) {
    std::array<RougeScore, 4> row{};
    for (RougeMetric m : metrics) {
      row[static_cast<std::size_t>(m)] = rouge_metric(m, candidate, std::span(&ref, 1), single);
    }
    report.per_reference.push_back(row);
  }
  return report;
}

}  // namespace maniquery
