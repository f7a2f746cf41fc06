#include "maniquery/expansion.hpp"

#include <algorithm>
#include <numeric>

#include "maniquery/error.hpp"

namespace maniquery {
namespace {

constexpr std::array<Expansion, 4> kAllExpansions = {Expansion::SimWord, Expansion::Mean,
                                                     Expansion::Variance, Expansion::TextRank};

void require_size(std::span<const double> v, std::size_t n, std::string_view what) {
  if (v.size() != n) {
    throw DimensionMismatch(std::string(what) + " has length " + std::to_string(v.size()) +
                            ", expected " + std::to_string(n));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view expansion_name(Expansion e) {
  switch (e) {
    case Expansion::SimWord: return "sim_word";
    case Expansion::Mean: return "mean";
    case Expansion::Variance: return "var";
    case Expansion::TextRank: return "textrank";
  }
  return "?";
}

ExpansionSet ExpansionSet::parse(std::string_view list) {
  ExpansionSet out;
  list = trim(list);
  if (list.empty() || list == "none") return out;
  if (list == "all") return all();
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto item = trim(list.substr(0, comma));
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    if (item.empty()) continue;
    bool found = false;
    for (Expansion e : kAllExpansions) {
      if (item == expansion_name(e) || (e == Expansion::Variance && item == "variance") ||
          (e == Expansion::SimWord && item == "simword")) {
        out.insert(e);
        found = true;
      }
    }
    if (!found) throw ConfigError("unknown expansion '" + std::string(item) + "'");
  }
  return out;
}

std::string ExpansionSet::to_string() const {
  std::string out;
  for (Expansion e : kAllExpansions) {
    if (!contains(e)) continue;
    if (!out.empty()) out += ',';
    out += expansion_name(e);
  }
  return out;
}

std::vector<double> expand_simword(std::span<const double> t0, const WordSimMatrix& sim) {
  require_size(t0, sim.dim(), "query vector");
  std::vector<double> out(t0.begin(), t0.end());
  for (std::size_t j = 0; j < t0.size(); ++j) {
    if (!(t0[j] > 0.0)) continue;
    for (const auto& e : sim.row(j)) out[e.col] = std::max(out[e.col], t0[j] * e.similarity);
  }
  return out;
}

std::vector<double> expand_mean(const SentenceWordMatrix& a0) {
  if (a0.rows() < 2) throw EmptyTopic("mean expansion needs at least one document row");
  std::vector<double> sum(a0.cols(), 0.0);
  for (std::size_t i = 1; i < a0.rows(); ++i) {
    for (const auto& e : a0.row(i)) sum[e.col] += e.weight;
  }
  const double n = static_cast<double>(a0.rows() - 1);
  for (double& v : sum) v /= n;
  return sum;
}

std::vector<double> expand_variance(const SentenceWordMatrix& a0) {
  if (a0.rows() < 3) throw TooFewRows("variance expansion needs at least two document rows");
  const auto mean = expand_mean(a0);
  const std::size_t docs = a0.rows() - 1;
  std::vector<double> out(a0.cols(), 0.0);
  std::vector<std::size_t> nonzero(a0.cols(), 0);
  for (std::size_t i = 1; i < a0.rows(); ++i) {
    for (const auto& e : a0.row(i)) {
      const double d = e.weight - mean[e.col];
      out[e.col] += d * d;
      ++nonzero[e.col];
    }
  }
  // Rows without an entry contribute (0 - mean)^2 each.
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] += static_cast<double>(docs - nonzero[j]) * mean[j] * mean[j];
    out[j] /= static_cast<double>(docs - 1);
  }
  return out;
}

std::vector<double> expand_textrank(const SentenceWordMatrix& a0, std::span<const double> p_star,
                                    std::size_t c_words) {
  if (a0.rows() < 1) throw DimensionMismatch("matrix has no rows");
  require_size(p_star, a0.rows() - 1, "sentence score vector");
  std::vector<double> y(a0.cols(), 0.0);
  for (std::size_t i = 1; i < a0.rows(); ++i) {
    const auto row = a0.row(i);
    double total = 0.0;
    for (const auto& e : row) total += e.weight;
    if (total == 0.0) continue;
    for (const auto& e : row) y[e.col] += e.weight / total * p_star[i - 1];
  }
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (y[j] > 0.0) order.push_back(j);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return y[a] > y[b]; });
  std::vector<double> out(a0.cols(), 0.0);
  for (std::size_t k = 0; k < std::min(c_words, order.size()); ++k) out[order[k]] = 1.0;
  return out;
}

QueryVector combine_expansions(std::span<const double> t0, const ExpansionComponents& components,
                               const ExpansionConfig& config) {
  const std::size_t m = t0.size();
  QueryVector out;
  out.provenance = components;
  const auto& enabled = config.enabled;

  if (enabled.contains(Expansion::SimWord) && components.sim_word) {
    require_size(*components.sim_word, m, "sim_word component");
    out.values = *components.sim_word;
  } else {
    out.values.assign(t0.begin(), t0.end());
  }
  auto add = [&](Expansion e, const std::optional<std::vector<double>>& v, double theta) {
    if (!enabled.contains(e) || !v) return;
    require_size(*v, m, expansion_name(e));
    for (std::size_t j = 0; j < m; ++j) out.values[j] += theta * (*v)[j];
  };
  add(Expansion::Mean, components.mean, config.theta_mean);
  add(Expansion::Variance, components.variance, config.theta_var);
  add(Expansion::TextRank, components.textrank, config.theta_rank);
  return out;
}

}  // namespace maniquery
