#pragma once

#include <array>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maniquery/config.hpp"
#include "maniquery/corpus.hpp"
#include "maniquery/expansion.hpp"
#include "maniquery/graphrank.hpp"
#include "maniquery/rouge.hpp"
#include "maniquery/summarize.hpp"
#include "maniquery/wordnet.hpp"

namespace maniquery {

/// Everything computed for one topic, kept for dumps and tests.
struct TopicArtifacts {
  Topic topic;
  SentenceWordMatrix a0;
  std::vector<double> t0;
  ExpansionComponents components;
  std::optional<RankVector> textrank;  // p* over document rows
  QueryVector t1;
  SentenceWordMatrix a1;
  SimilarityGraph graph;
  RankVector ranking;
  Summary summary;
  std::vector<std::string> warnings;
};

/// Runs ingest through extraction for one topic held in memory.
TopicArtifacts summarize_topic(const TopicText& text, const PipelineConfig& config,
                               const SynsetGraph* lexicon);

struct TopicResult {
  std::string name;
  bool ok = false;
  std::string error;
  std::vector<std::string> warnings;
  Summary summary;
  std::optional<RougeReport> rouge;  // absent without reference summaries
};

struct RunReport {
  std::vector<TopicResult> topics;  // sorted by name
  /// Macro average over topics with a ROUGE report.
  std::array<RougeScore, 4> macro{};
  std::size_t evaluated = 0;

  bool all_ok() const;
  std::size_t failures() const;
};

/// WordNet directory from the config, else from MANIQUERY_WORDNET.
std::optional<std::filesystem::path> resolve_wordnet_dir(const PipelineConfig& config);

/// Loads WordNet when a directory resolves. Throws ConfigError when it
/// cannot be loaded, or when none is configured and sim_word is enabled.
/// Returns null when WordNet is neither configured nor needed.
std::unique_ptr<SynsetGraph> load_lexicon(const PipelineConfig& config);

/// Subdirectories of `corpus_dir` that contain query.txt, sorted by name.
std::vector<std::filesystem::path> list_topics(const std::filesystem::path& corpus_dir);

struct References {
  std::vector<std::string> names;
  std::vector<TokenSeq> tokens;
};

/// `*.txt` files of `dir`, sorted by filename, tokenized for ROUGE.
References read_references(const std::filesystem::path& dir);

/// Writes through a sibling temp file and a rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string selection_json(const TopicArtifacts& artifacts);
std::string rouge_json(std::string_view topic, const RougeReport* report);
std::string expansion_debug_json(const TopicArtifacts& artifacts);
std::string aggregate_json(const RunReport& report, const PipelineConfig& config);

/// Directory that receives a topic's summary.txt, selection.json and
/// rouge.json: `<output_dir>/<topic>`, or `<topic_dir>/output` when no
/// output directory is configured.
std::filesystem::path topic_output_dir(const PipelineConfig& config,
                                       const std::filesystem::path& topic_dir);

struct RunOptions {
  bool write_outputs = true;
};

/// Processes every topic of `config.corpus_dir` on `config.workers`
/// threads. Per-topic failures are recorded, not thrown. Throws
/// ConfigError before any topic runs if the configuration is unusable.
RunReport run_pipeline(const PipelineConfig& config, const RunOptions& options = {});
RunReport run_pipeline(const PipelineConfig& config, const SynsetGraph* lexicon,
                       const RunOptions& options = {});

struct SweepRow {
  std::string value;
  PipelineConfig config;
  RunReport report;
};

struct SweepTable {
  std::string parameter;
  std::vector<SweepRow> rows;

  std::string to_tsv() const;
};

/// One pipeline run per value of `parameter`. Sweeping alpha_overlap also
/// sets alpha_cos = 1 - alpha_overlap. Outputs are written under
/// `<output_dir>/<parameter>=<value>` only when an output directory is set.
/// Throws ConfigError for unknown parameters or values.
SweepTable run_sweep(const PipelineConfig& config, std::string_view parameter,
                     const std::vector<std::string>& values);

}  // namespace maniquery
