#pragma once

#include <cstddef>
#include <filesystem>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "maniquery/expansion.hpp"
#include "maniquery/rouge.hpp"

namespace maniquery {

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

struct PipelineConfig {
  // Word similarity.
  double a = 1.0;
  std::size_t max_path = 4;         // L
  std::size_t max_neighbors = 5000;  // C; kUnlimited disables the filter

  // Query expansion.
  double theta_mean = 1.0;
  double theta_var = 1.0;
  double theta_rank = 1.0;
  std::size_t c_words = 100;
  ExpansionSet expansions = ExpansionSet::all();
  double r_t = 0.4;
  double damping = 0.6;

  // Ranking.
  double alpha_mr = 0.6;
  double alpha_cos = 0.9;
  double alpha_overlap = 0.1;
  double alpha_peer = 0.4;
  double tol = 1e-9;
  std::size_t max_iter = 10000;

  // Extraction.
  double omega = 8.0;
  std::size_t budget = 250;

  // Evaluation.
  RougeAggregation rouge_aggregation = RougeAggregation::Average;
  bool rouge_jackknife = false;
  double rouge_w_weight = 1.2;

  // Run.
  std::size_t workers = 1;
  std::filesystem::path corpus_dir;
  std::filesystem::path wordnet_dir;
  std::filesystem::path output_dir;
  std::filesystem::path debug_dir;  // empty: no expansion dumps
  bool dump_graph = false;

  ExpansionConfig expansion_config() const;

  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

/// Every key accepted by `set_config_value`, in serialization order.
const std::vector<std::string>& config_keys();
bool is_config_key(std::string_view key);

/// Assigns one key from its text form. Throws ConfigError for unknown keys,
/// unparsable values or negative weights.
void set_config_value(PipelineConfig& config, std::string_view key, std::string_view value);
std::string get_config_value(const PipelineConfig& config, std::string_view key);

/// Flat `key = value` lines. Blank lines and `#` comments are skipped.
PipelineConfig parse_config(std::string_view text, PipelineConfig base = {});
PipelineConfig load_config(const std::filesystem::path& file, PipelineConfig base = {});
std::string serialize_config(const PipelineConfig& config);

/// Checks cross-field constraints (weights >= 0, 0 < alpha_mr < 1, ...).
void validate_config(const PipelineConfig& config);

/// Shortest text form that parses back to the same double.
std::string format_double(double value);

}  // namespace maniquery
