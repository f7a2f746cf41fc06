#include "maniquery/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include "maniquery/error.hpp"

namespace maniquery {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view want) {
  throw ConfigError("config key '" + std::string(key) + "': cannot parse '" + std::string(value) +
                    "' as " + std::string(want));
}

double parse_double(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) bad_value(key, value, "a number");
  return out;
}

double parse_weight(std::string_view key, std::string_view value) {
  const double out = parse_double(key, value);
  if (!(out >= 0.0)) throw ConfigError("config key '" + std::string(key) + "' must be >= 0");
  return out;
}

std::size_t parse_count(std::string_view key, std::string_view value, bool allow_inf = false) {
  if (allow_inf && (value == "inf" || value == "unlimited")) return kUnlimited;
  std::size_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    bad_value(key, value, "a non-negative integer");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  bad_value(key, value, "a boolean");
}

std::string format_count(std::size_t value) {
  return value == kUnlimited ? std::string("inf") : std::to_string(value);
}

struct KeySpec {
  std::string name;
  std::function<void(PipelineConfig&, std::string_view)> set;
  std::function<std::string(const PipelineConfig&)> get;
};

#define MQ_WEIGHT(field)                                                              \
  KeySpec {                                                                           \
    #field, [](PipelineConfig& c, std::string_view v) { c.field = parse_weight(#field, v); }, \
        [](const PipelineConfig& c) { return format_double(c.field); }                \
  }
#define MQ_COUNT(field, inf)                                                               \
  KeySpec {                                                                                \
    #field, [](PipelineConfig& c, std::string_view v) { c.field = parse_count(#field, v, inf); }, \
        [](const PipelineConfig& c) { return format_count(c.field); }                      \
  }
#define MQ_PATH(field)                                                          \
  KeySpec {                                                                     \
    #field, [](PipelineConfig& c, std::string_view v) { c.field = std::string(v); }, \
        [](const PipelineConfig& c) { return c.field.string(); }                \
  }

const std::vector<KeySpec>& key_specs() {
  static const std::vector<KeySpec> specs = {
      MQ_WEIGHT(a),
      MQ_COUNT(max_path, false),
      MQ_COUNT(max_neighbors, true),
      MQ_WEIGHT(theta_mean),
      MQ_WEIGHT(theta_var),
      MQ_WEIGHT(theta_rank),
      MQ_COUNT(c_words, false),
      KeySpec{"expansions",
              [](PipelineConfig& c, std::string_view v) { c.expansions = ExpansionSet::parse(v); },
              [](const PipelineConfig& c) { return c.expansions.to_string(); }},
      MQ_WEIGHT(r_t),
      MQ_WEIGHT(damping),
      MQ_WEIGHT(alpha_mr),
      MQ_WEIGHT(alpha_cos),
      MQ_WEIGHT(alpha_overlap),
      MQ_WEIGHT(alpha_peer),
      MQ_WEIGHT(tol),
      MQ_COUNT(max_iter, false),
      MQ_WEIGHT(omega),
      MQ_COUNT(budget, false),
      KeySpec{"rouge_aggregation",
              [](PipelineConfig& c, std::string_view v) {
                if (v == "average") {
                  c.rouge_aggregation = RougeAggregation::Average;
                } else if (v == "pooled") {
                  c.rouge_aggregation = RougeAggregation::Pooled;
                } else {
                  bad_value("rouge_aggregation", v, "'average' or 'pooled'");
                }
              },
              [](const PipelineConfig& c) {
                return std::string(c.rouge_aggregation == RougeAggregation::Average ? "average"
                                                                                    : "pooled");
              }},
      KeySpec{"rouge_jackknife",
              [](PipelineConfig& c, std::string_view v) {
                c.rouge_jackknife = parse_bool("rouge_jackknife", v);
              },
              [](const PipelineConfig& c) {
                return std::string(c.rouge_jackknife ? "true" : "false");
              }},
      MQ_WEIGHT(rouge_w_weight),
      MQ_COUNT(workers, false),
      MQ_PATH(corpus_dir),
      MQ_PATH(wordnet_dir),
      MQ_PATH(output_dir),
      MQ_PATH(debug_dir),
      KeySpec{"dump_graph",
              [](PipelineConfig& c, std::string_view v) {
                c.dump_graph = parse_bool("dump_graph", v);
              },
              [](const PipelineConfig& c) { return std::string(c.dump_graph ? "true" : "false"); }},
  };
  return specs;
}

#undef MQ_WEIGHT
#undef MQ_COUNT
#undef MQ_PATH

const KeySpec& spec_for(std::string_view key) {
  for (const KeySpec& s : key_specs()) {
    if (s.name == key) return s;
  }
  throw ConfigError("unknown config key '" + std::string(key) + "'");
}

}  // namespace

ExpansionConfig PipelineConfig::expansion_config() const {
  ExpansionConfig out;
  out.theta_mean = theta_mean;
  out.theta_var = theta_var;
  out.theta_rank = theta_rank;
  out.c_words = c_words;
  out.enabled = expansions;
  return out;
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ec == std::errc{} ? ptr : buf);
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const KeySpec& s : key_specs()) out.push_back(s.name);
    return out;
  }();
  return keys;
}

bool is_config_key(std::string_view key) {
  const auto& keys = config_keys();
  return std::find(keys.begin(), keys.end(), key) != keys.end();
}

void set_config_value(PipelineConfig& config, std::string_view key, std::string_view value) {
  spec_for(key).set(config, trim(value));
}

std::string get_config_value(const PipelineConfig& config, std::string_view key) {
  return spec_for(key).get(config);
}

PipelineConfig parse_config(std::string_view text, PipelineConfig base) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    set_config_value(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return base;
}

PipelineConfig load_config(const std::filesystem::path& file, PipelineConfig base) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), std::move(base));
}

std::string serialize_config(const PipelineConfig& config) {
  std::string out;
  for (const KeySpec& s : key_specs()) {
    out += s.name;
    out += " = ";
    out += s.get(config);
    out += '\n';
  }
  return out;
}

void validate_config(const PipelineConfig& config) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw ConfigError(what);
  };
  require(config.a > 0.0, "a must be > 0");
  require(config.alpha_mr > 0.0 && config.alpha_mr < 1.0, "alpha_mr must lie in (0, 1)");
  require(config.damping >= 0.0 && config.damping < 1.0, "damping must lie in [0, 1)");
  require(config.r_t >= 0.0 && config.r_t <= 1.0, "r_t must lie in [0, 1]");
  require(config.tol > 0.0, "tol must be > 0");
  require(config.max_iter > 0, "max_iter must be > 0");
  require(config.rouge_w_weight > 1.0, "rouge_w_weight must be > 1");
  require(config.workers > 0, "workers must be > 0");
  for (double w : {config.theta_mean, config.theta_var, config.theta_rank, config.alpha_cos,
                   config.alpha_overlap, config.alpha_peer, config.omega}) {
    require(w >= 0.0, "weights must be >= 0");
  }
}

}  // namespace maniquery
