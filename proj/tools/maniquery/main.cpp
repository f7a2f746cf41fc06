// maniquery: query-focused multi-document summarization from the command line.
//
//   maniquery summarize --corpus-dir DIR [--wordnet-dir DIR] [--output-dir DIR]
//   maniquery rouge --cand FILE --refs DIR [--metrics r1,r2,rw,rsu4] [--json OUT]
//   maniquery sweep --param NAME --values v1,v2,... [--tsv OUT]
//   maniquery dump-matrix --topic DIR [--which a0|a1|w] [--out FILE]
//
// Exit status: 0 on success, 1 if any topic (or evaluation) failed, 2 on a
// configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maniquery/config.hpp"
#include "maniquery/error.hpp"
#include "maniquery/matrix_market.hpp"
#include "maniquery/pipeline.hpp"
#include "maniquery/rouge.hpp"

namespace fs = std::filesystem;
using namespace maniquery;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTopicFailure = 1;
constexpr int kExitConfig = 2;

std::string flag_name(const std::string& key) {
  std::string out = "--" + key;
  for (char& c : out) {
    if (c == '_') c = '-';
  }
  return out;
}

// Config file first, then every flag given on the command line.
struct ConfigFlags {
  std::string file;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  std::vector<std::string> sets;
  bool dump_graph = false;
  CLI::Option* dump_graph_opt = nullptr;

  void attach(CLI::App& app) {
    app.add_option("-c,--config", file, "key = value config file");
    for (const std::string& key : config_keys()) {
      if (key == "dump_graph") {
        dump_graph_opt = app.add_flag("--dump-graph", dump_graph, "write W as graph.mtx per topic");
        continue;
      }
      options[key] = app.add_option(flag_name(key), values[key], "config key " + key);
    }
    app.add_option("--set", sets, "extra KEY=VALUE overrides");
  }

  PipelineConfig resolve() const {
    PipelineConfig config;
    if (!file.empty()) config = load_config(file);
    for (const auto& [key, opt] : options) {
      if (opt->count() > 0) set_config_value(config, key, values.at(key));
    }
    if (dump_graph_opt != nullptr && dump_graph_opt->count() > 0) config.dump_graph = dump_graph;
    for (const std::string& kv : sets) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw ConfigError("--set expects KEY=VALUE, got '" + kv + "'");
      set_config_value(config, kv.substr(0, eq), kv.substr(eq + 1));
    }
    validate_config(config);
    return config;
  }
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

void note_alpha(const PipelineConfig& config) {
  std::cerr << "maniquery: alpha_mr = " << format_double(config.alpha_mr)
            << " (alpha_mr = 1 would drop the query term from the ranking; values must be < 1)\n";
}

void print_macro(const RunReport& report) {
  std::printf("macro-averaged over %zu evaluated topic(s)\n", report.evaluated);
  std::printf("%-6s %9s %9s %9s\n", "metric", "P", "R", "F1");
  for (RougeMetric m : kAllRougeMetrics) {
    const RougeScore& s = report.macro[static_cast<std::size_t>(m)];
    std::printf("%-6s %9.5f %9.5f %9.5f\n", std::string(rouge_metric_name(m)).c_str(), s.precision,
                s.recall, s.f1);
  }
}

int run_summarize(const ConfigFlags& flags) {
  const PipelineConfig config = flags.resolve();
  if (config.corpus_dir.empty()) throw ConfigError("--corpus-dir is required");
  note_alpha(config);
  const RunReport report = run_pipeline(config);
  for (const TopicResult& t : report.topics) {
    for (const std::string& w : t.warnings) std::cerr << t.name << ": warning: " << w << '\n';
    if (t.ok) {
      std::printf("%s: %zu words%s\n", t.name.c_str(), t.summary.word_count,
                  t.summary.truncated ? " (truncated)" : "");
    } else {
      std::fprintf(stderr, "%s: FAILED: %s\n", t.name.c_str(), t.error.c_str());
    }
  }
  print_macro(report);
  return report.all_ok() ? kExitOk : kExitTopicFailure;
}

struct RougeArgs {
  std::string cand;
  std::string refs;
  std::string metrics = "r1,r2,rw,rsu4";
  std::string json_out;
  std::string aggregation = "average";
  bool jackknife = false;
};

int run_rouge(const RougeArgs& args) {
  std::vector<RougeMetric> metrics;
  for (const std::string& name : split_list(args.metrics)) {
    const auto m = parse_rouge_metric(name);
    if (!m) throw ConfigError("unknown ROUGE metric '" + name + "'");
    metrics.push_back(*m);
  }
  RougeOptions options;
  if (args.aggregation == "pooled") {
    options.aggregation = RougeAggregation::Pooled;
  } else if (args.aggregation != "average") {
    throw ConfigError("--aggregation must be 'average' or 'pooled'");
  }
  options.jackknife = args.jackknife;

  std::ifstream in(args.cand, std::ios::binary);
  if (!in) throw ConfigError("cannot read candidate " + args.cand);
  std::ostringstream buf;
  buf << in.rdbuf();
  const References refs = read_references(args.refs);
  if (refs.tokens.empty()) throw ConfigError("no *.txt references in " + args.refs);

  const RougeReport report =
      evaluate_rouge(rouge_tokenize(buf.str()), refs.tokens, refs.names, metrics, options);
  for (RougeMetric m : metrics) {
    const RougeScore& s = report[m];
    std::printf("%-6s P=%.5f R=%.5f F1=%.5f\n", std::string(rouge_metric_name(m)).c_str(),
                s.precision, s.recall, s.f1);
  }
  if (!args.json_out.empty()) {
    write_file_atomic(args.json_out, rouge_json(fs::path(args.cand).stem().string(), &report));
  }
  return kExitOk;
}

struct SweepArgs {
  std::string param;
  std::string values;
  std::string tsv_out;
};

int run_sweep_cmd(const ConfigFlags& flags, const SweepArgs& args) {
  const PipelineConfig config = flags.resolve();
  if (config.corpus_dir.empty()) throw ConfigError("--corpus-dir is required");
  const SweepTable table = run_sweep(config, args.param, split_list(args.values));
  const std::string tsv = table.to_tsv();
  if (args.tsv_out.empty()) {
    std::cout << tsv;
  } else {
    write_file_atomic(args.tsv_out, tsv);
  }
  for (const SweepRow& row : table.rows) {
    if (!row.report.all_ok()) return kExitTopicFailure;
  }
  return kExitOk;
}

struct DumpArgs {
  std::string topic;
  std::string which = "a0";
  std::string out;
};

int run_dump(const ConfigFlags& flags, const DumpArgs& args) {
  const PipelineConfig config = flags.resolve();
  if (args.which != "a0" && args.which != "a1" && args.which != "w") {
    throw ConfigError("--which must be a0, a1 or w");
  }
  const auto lexicon = load_lexicon(config);
  TopicArtifacts art;
  try {
    TopicText text = read_topic_text(args.topic);
    text.name = fs::path(args.topic).filename().string();
    art = summarize_topic(text, config, lexicon.get());
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    std::cerr << "maniquery: " << args.topic << ": " << e.what() << '\n';
    return kExitTopicFailure;
  }
  std::ostringstream mm;
  if (args.which == "a0") {
    write_matrix_market(mm, art.a0);
  } else if (args.which == "a1") {
    write_matrix_market(mm, art.a1);
  } else {
    write_matrix_market(mm, art.graph.w);
  }
  if (args.out.empty()) {
    std::cout << mm.str();
  } else {
    write_file_atomic(args.out, mm.str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Query-focused extractive multi-document summarizer"};
  app.require_subcommand(1);

  ConfigFlags summarize_flags, sweep_flags, dump_flags;

  auto* summarize = app.add_subcommand("summarize", "summarize every topic of a corpus");
  summarize_flags.attach(*summarize);

  RougeArgs rouge_args;
  auto* rouge = app.add_subcommand("rouge", "score one candidate against reference summaries");
  rouge->add_option("--cand", rouge_args.cand, "candidate summary")->required();
  rouge->add_option("--refs", rouge_args.refs, "directory of *.txt references")->required();
  rouge->add_option("--metrics", rouge_args.metrics, "comma list of r1,r2,rw,rsu4");
  rouge->add_option("--json", rouge_args.json_out, "write the report as JSON");
  rouge->add_option("--aggregation", rouge_args.aggregation, "average or pooled");
  rouge->add_flag("--jackknife", rouge_args.jackknife, "leave-one-out reference averaging");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "rerun the pipeline over values of one parameter");
  sweep_flags.attach(*sweep);
  sweep->add_option("--param", sweep_args.param, "config key to vary")->required();
  sweep->add_option("--values", sweep_args.values, "comma list of values")->required();
  sweep->add_option("--tsv", sweep_args.tsv_out, "write the table here instead of stdout");

  DumpArgs dump_args;
  auto* dump = app.add_subcommand("dump-matrix", "write a topic matrix in Matrix Market format");
  dump_flags.attach(*dump);
  dump->add_option("--topic", dump_args.topic, "topic directory")->required();
  dump->add_option("--which", dump_args.which, "a0, a1 or w");
  dump->add_option("--out", dump_args.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (summarize->parsed()) return run_summarize(summarize_flags);
    if (rouge->parsed()) return run_rouge(rouge_args);
    if (sweep->parsed()) return run_sweep_cmd(sweep_flags, sweep_args);
    if (dump->parsed()) return run_dump(dump_flags, dump_args);
  } catch (const ConfigError& e) {
    std::cerr << "maniquery: configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "maniquery: " << e.what() << '\n';
    return kExitTopicFailure;
  }
  return kExitConfig;
}
