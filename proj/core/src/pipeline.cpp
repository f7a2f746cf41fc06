#include "maniquery/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "maniquery/error.hpp"
#include "maniquery/matrix_market.hpp"
#include "maniquery/text.hpp"

namespace maniquery {
namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

json score_json(const RougeScore& s) {
  return json{{"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}};
}

json metrics_json(const std::array<RougeScore, 4>& scores, std::span<const RougeMetric> metrics) {
  json out = json::object();
  for (RougeMetric m : metrics) {
    out[std::string(rouge_metric_name(m))] = score_json(scores[static_cast<std::size_t>(m)]);
  }
  return out;
}

json optional_vector(const std::optional<std::vector<double>>& v) {
  return v ? json(*v) : json(nullptr);
}

// Model parameters only: run plumbing (paths, workers) must not change reports.
bool is_model_key(std::string_view key) {
  return key != "workers" && key != "corpus_dir" && key != "wordnet_dir" && key != "output_dir" &&
         key != "debug_dir" && key != "dump_graph";
}

RougeOptions rouge_options(const PipelineConfig& config) {
  RougeOptions o;
  o.aggregation = config.rouge_aggregation;
  o.jackknife = config.rouge_jackknife;
  o.w_weight = config.rouge_w_weight;
  return o;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TopicArtifacts summarize_topic(const TopicText& text, const PipelineConfig& config,
                               const SynsetGraph* lexicon) {
  TopicArtifacts out;
  out.topic = make_topic(text, default_stopwords(), lexicon);
  out.a0 = build_matrix(out.topic);
  out.t0 = out.a0.dense_row(0);

  const SolverOptions solver{config.tol, config.max_iter};
  const ExpansionConfig exp = config.expansion_config();

  if (exp.enabled.contains(Expansion::SimWord)) {
    if (lexicon == nullptr) throw ConfigError("sim_word expansion requires WordNet");
    WordSimParams params;
    params.a = config.a;
    params.max_path = static_cast<int>(std::min<std::size_t>(config.max_path, 1 << 20));
    params.max_neighbors = config.max_neighbors;
    const WordSimMatrix sim = build_word_sim_matrix(*lexicon, out.topic.vocabulary, params);
    out.components.sim_word = expand_simword(out.t0, sim);
  }
  if (exp.enabled.contains(Expansion::Mean)) out.components.mean = expand_mean(out.a0);
  if (exp.enabled.contains(Expansion::Variance)) {
    try {
      out.components.variance = expand_variance(out.a0);
    } catch (const TooFewRows& e) {
      out.components.variance = std::vector<double>(out.a0.cols(), 0.0);
      out.warnings.push_back(std::string("variance expansion skipped: ") + e.what());
    }
  }
  if (exp.enabled.contains(Expansion::TextRank)) {
    out.textrank = textrank_scores(document_cosine_graph(out.a0), query_relevance(out.a0),
                                   config.damping, config.r_t, solver);
    if (!out.textrank->converged) out.warnings.push_back("textrank did not converge");
    out.components.textrank = expand_textrank(out.a0, out.textrank->scores, exp.c_words);
  }

  out.t1 = combine_expansions(out.t0, out.components, exp);
  out.a1 = out.a0.with_query_row(out.t1.values);
  out.graph = build_similarity_graph(out.a1, out.a0, out.topic.rows,
                                     {config.alpha_cos, config.alpha_overlap, config.alpha_peer});

  std::vector<double> y(out.topic.rows.size(), 0.0);
  y[0] = 1.0;
  out.ranking = manifold_rank(out.graph, y, config.alpha_mr, solver);
  if (!out.ranking.converged) out.warnings.push_back("manifold ranking did not converge");

  out.summary = extract_summary(out.ranking, out.graph, out.topic.rows,
                                SummaryOptions{config.omega, config.budget});
  return out;
}

bool RunReport::all_ok() const { return failures() == 0; }

std::size_t RunReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(topics.begin(), topics.end(), [](const TopicResult& t) { return !t.ok; }));
}

std::optional<fs::path> resolve_wordnet_dir(const PipelineConfig& config) {
  if (!config.wordnet_dir.empty()) return config.wordnet_dir;
  if (const char* env = std::getenv("MANIQUERY_WORDNET"); env != nullptr && *env != '\0') {
    return fs::path(env);
  }
  return std::nullopt;
}

std::unique_ptr<SynsetGraph> load_lexicon(const PipelineConfig& config) {
  const auto dir = resolve_wordnet_dir(config);
  if (!dir) {
    if (config.expansions.contains(Expansion::SimWord)) {
      throw ConfigError(
          "sim_word expansion is enabled but no WordNet directory is configured "
          "(set wordnet_dir or MANIQUERY_WORDNET)");
    }
    return nullptr;
  }
  if (!fs::is_directory(*dir)) {
    throw ConfigError("WordNet directory " + dir->string() + " does not exist");
  }
  try {
    return std::make_unique<SynsetGraph>(SynsetGraph::load(*dir));
  } catch (const Error& e) {
    throw ConfigError(std::string("cannot load WordNet: ") + e.what());
  }
}

std::vector<fs::path> list_topics(const fs::path& corpus_dir) {
  if (!fs::is_directory(corpus_dir)) {
    throw ConfigError("corpus directory " + corpus_dir.string() + " does not exist");
  }
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(corpus_dir)) {
    if (entry.is_directory() && fs::is_regular_file(entry.path() / "query.txt")) {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  return out;
}

References read_references(const fs::path& dir) {
  References out;
  if (!fs::is_directory(dir)) return out;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const fs::path& f : files) {
    out.names.push_back(f.stem().string());
    out.tokens.push_back(rouge_tokenize(read_text(f)));
  }
  return out;
}

void write_file_atomic(const fs::path& path, std::string_view content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Error("short write to " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string selection_json(const TopicArtifacts& a) {
  const Summary& s = a.summary;
  json picks = json::array();
  for (std::size_t k = 0; k < s.selected.size(); ++k) {
    const Sentence& row = a.topic.rows[s.selected[k]];
    json penalties = json::array();
    for (const Penalty& p : s.trace[k].penalties) {
      penalties.push_back(json{{"sentence", p.sentence}, {"amount", p.amount}});
    }
    picks.push_back(json{{"sentence", s.selected[k]},
                         {"doc_id", row.doc_id},
                         {"position_in_doc", row.position_in_doc},
                         {"score", s.trace[k].score},
                         {"ranking_score", a.ranking.scores[s.selected[k]]},
                         {"words", count_words(s.sentences[k])},
                         {"penalties", std::move(penalties)}});
  }
  json doc{{"topic", a.topic.name},
           {"sentences", a.topic.document_sentence_count()},
           {"word_count", s.word_count},
           {"truncated", s.truncated},
           {"ranking", json{{"iterations", a.ranking.iterations}, {"converged", a.ranking.converged}}},
           {"picks", std::move(picks)}};
  return doc.dump(2) + "\n";
}

std::string rouge_json(std::string_view topic, const RougeReport* report) {
  json doc{{"topic", topic}};
  if (report == nullptr) {
    doc["evaluated"] = false;
    return doc.dump(2) + "\n";
  }
  doc["evaluated"] = true;
  doc["aggregation"] = report->aggregation == RougeAggregation::Average ? "average" : "pooled";
  doc["jackknife"] = report->jackknife;
  doc["metrics"] = metrics_json(report->scores, report->metrics);
  json refs = json::array();
  for (std::size_t r = 0; r < report->reference_names.size(); ++r) {
    refs.push_back(json{{"name", report->reference_names[r]},
                        {"metrics", metrics_json(report->per_reference[r], report->metrics)}});
  }
  doc["references"] = std::move(refs);
  return doc.dump(2) + "\n";
}

std::string expansion_debug_json(const TopicArtifacts& a) {
  json vocab = json::array();
  for (const Term& t : a.topic.vocabulary) vocab.push_back(t.stem);
  json doc{{"topic", a.topic.name},
           {"vocabulary", std::move(vocab)},
           {"t0", a.t0},
           {"sim_word", optional_vector(a.components.sim_word)},
           {"mean", optional_vector(a.components.mean)},
           {"variance", optional_vector(a.components.variance)},
           {"textrank", optional_vector(a.components.textrank)},
           {"textrank_sentence_scores", a.textrank ? json(a.textrank->scores) : json(nullptr)},
           {"t1", a.t1.values},
           {"warnings", a.warnings}};
  return doc.dump(2) + "\n";
}

std::string aggregate_json(const RunReport& report, const PipelineConfig& config) {
  json params = json::object();
  for (const std::string& key : config_keys()) {
    if (is_model_key(key)) params[key] = get_config_value(config, key);
  }
  json topics = json::array();
  for (const TopicResult& t : report.topics) {
    json entry{{"topic", t.name}, {"status", t.ok ? "ok" : "failed"}};
    if (!t.ok) entry["error"] = t.error;
    if (t.ok) {
      entry["word_count"] = t.summary.word_count;
      entry["truncated"] = t.summary.truncated;
    }
    if (t.rouge) {
      json f1 = json::object();
      for (RougeMetric m : kAllRougeMetrics) {
        f1[std::string(rouge_metric_name(m))] = (*t.rouge)[m].f1;
      }
      entry["f1"] = std::move(f1);
    }
    if (!t.warnings.empty()) entry["warnings"] = t.warnings;
    topics.push_back(std::move(entry));
  }
  json doc{{"averaging", "macro over evaluated topics"},
           {"topics_evaluated", report.evaluated},
           {"topics_failed", report.failures()},
           {"metrics", metrics_json(report.macro, kAllRougeMetrics)},
           {"topics", std::move(topics)},
           {"parameters", std::move(params)}};
  return doc.dump(2) + "\n";
}

fs::path topic_output_dir(const PipelineConfig& config, const fs::path& topic_dir) {
  if (config.output_dir.empty()) return topic_dir / "output";
  return config.output_dir / topic_dir.filename();
}

RunReport run_pipeline(const PipelineConfig& config, const RunOptions& options) {
  validate_config(config);
  const auto lexicon = load_lexicon(config);
  return run_pipeline(config, lexicon.get(), options);
}

RunReport run_pipeline(const PipelineConfig& config, const SynsetGraph* lexicon,
                       const RunOptions& options) {
  validate_config(config);
  if (lexicon == nullptr && config.expansions.contains(Expansion::SimWord)) {
    throw ConfigError("sim_word expansion is enabled but no WordNet is loaded");
  }
  const std::vector<fs::path> dirs = list_topics(config.corpus_dir);
  const RougeOptions ropts = rouge_options(config);

  RunReport report;
  report.topics.resize(dirs.size());

  auto process = [&](std::size_t i) {
    TopicResult& result = report.topics[i];
    result.name = dirs[i].filename().string();
    try {
      TopicText text = read_topic_text(dirs[i]);
      text.name = result.name;
      const TopicArtifacts art = summarize_topic(text, config, lexicon);
      result.summary = art.summary;
      result.warnings = art.warnings;

      const References refs = read_references(dirs[i] / "models");
      if (!refs.tokens.empty()) {
        const TokenSeq cand = rouge_tokenize(art.summary.text);
        result.rouge =
            evaluate_rouge(cand, refs.tokens, refs.names, kAllRougeMetrics, ropts);
      }

      if (options.write_outputs) {
        const fs::path out = topic_output_dir(config, dirs[i]);
        write_file_atomic(out / "summary.txt", art.summary.text + "\n");
        write_file_atomic(out / "selection.json", selection_json(art));
        write_file_atomic(out / "rouge.json",
                          rouge_json(result.name, result.rouge ? &*result.rouge : nullptr));
        if (config.dump_graph) {
          std::ostringstream mm;
          write_matrix_market(mm, art.graph.w);
          write_file_atomic(out / "graph.mtx", mm.str());
        }
        if (!config.debug_dir.empty()) {
          write_file_atomic(config.debug_dir / result.name / "expansion.json",
                            expansion_debug_json(art));
        }
      }
      result.ok = true;
    } catch (const std::exception& e) {
      result.ok = false;
      result.error = e.what();
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(config.workers, dirs.size()));
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < dirs.size(); i = next++) process(i);
      });
    }
  }

  for (const TopicResult& t : report.topics) {
    if (!t.ok || !t.rouge) continue;
    ++report.evaluated;
    for (RougeMetric m : kAllRougeMetrics) {
      auto& acc = report.macro[static_cast<std::size_t>(m)];
      acc.precision += (*t.rouge)[m].precision;
      acc.recall += (*t.rouge)[m].recall;
      acc.f1 += (*t.rouge)[m].f1;
    }
  }
  if (report.evaluated > 0) {
    const double n = static_cast<double>(report.evaluated);
    for (RougeScore& s : report.macro) {
      s.precision /= n;
      s.recall /= n;
      s.f1 /= n;
    }
  }

  if (options.write_outputs) {
    const fs::path root = config.output_dir.empty() ? config.corpus_dir : config.output_dir;
    write_file_atomic(root / "aggregate.json", aggregate_json(report, config));
  }
  return report;
}

std::string SweepTable::to_tsv() const {
  std::string out = "parameter\tvalue\talpha_cos\talpha_overlap\talpha_peer";
  for (RougeMetric m : kAllRougeMetrics) {
    out += '\t';
    out += rouge_metric_name(m);
    out += "_f1";
  }
  out += "\ttopics\tfailed\n";
  for (const SweepRow& row : rows) {
    out += parameter + '\t' + row.value + '\t' + format_double(row.config.alpha_cos) + '\t' +
           format_double(row.config.alpha_overlap) + '\t' + format_double(row.config.alpha_peer);
    for (const RougeScore& s : row.report.macro) out += '\t' + format_double(s.f1);
    out += '\t' + std::to_string(row.report.topics.size()) + '\t' +
           std::to_string(row.report.failures()) + '\n';
  }
  return out;
}

SweepTable run_sweep(const PipelineConfig& config, std::string_view parameter,
                     const std::vector<std::string>& values) {
  if (!is_config_key(parameter) || !is_model_key(parameter)) {
    throw ConfigError("cannot sweep '" + std::string(parameter) + "': not a model parameter");
  }
  SweepTable table;
  table.parameter = std::string(parameter);

  // Validate every value before running anything.
  std::vector<PipelineConfig> configs;
  for (const std::string& value : values) {
    PipelineConfig c = config;
    set_config_value(c, parameter, value);
    if (parameter == "alpha_overlap") c.alpha_cos = 1.0 - c.alpha_overlap;
    validate_config(c);
    if (!config.output_dir.empty()) {
      c.output_dir = config.output_dir / (std::string(parameter) + "=" + value);
    }
    configs.push_back(std::move(c));
  }
  if (configs.empty()) return table;

  bool needs_lexicon = false;
  for (const PipelineConfig& c : configs) {
    needs_lexicon = needs_lexicon || c.expansions.contains(Expansion::SimWord);
  }
  PipelineConfig lex_config = config;
  if (needs_lexicon) lex_config.expansions.insert(Expansion::SimWord);
  const auto lexicon = load_lexicon(lex_config);

  for (std::size_t i = 0; i < configs.size(); ++i) {
    RunOptions options;
    options.write_outputs = !config.output_dir.empty();
    table.rows.push_back({values[i], configs[i], run_pipeline(configs[i], lexicon.get(), options)});
  }
  return table;
}

}  // namespace maniquery
