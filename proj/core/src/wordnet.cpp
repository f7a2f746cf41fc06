#include "maniquery/wordnet.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <sstream>

#include "maniquery/error.hpp"

namespace maniquery {
namespace {

namespace fs = std::filesystem;

constexpr std::array<std::string_view, 4> kFileSuffix = {"noun", "verb", "adj", "adv"};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<std::uint64_t> parse_uint(std::string_view text, int base = 10) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value, base);
  if (ec != std::errc{} || ptr != end || text.empty()) return std::nullopt;
  return value;
}

std::optional<Pos> pos_from_char(char c) {
  switch (c) {
    case 'n': return Pos::Noun;
    case 'v': return Pos::Verb;
    case 'a':
    case 's': return Pos::Adj;
    case 'r': return Pos::Adv;
    default: return std::nullopt;
  }
}

std::string normalize_lemma(std::string_view word) {
  // Adjective syntactic markers: "(a)", "(p)", "(ip)".
  if (const auto paren = word.find('('); paren != std::string_view::npos) word = word.substr(0, paren);
  std::string out(word);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

struct Line {
  std::string_view text;
  std::size_t number = 0;  // 1-based
  std::size_t offset = 0;  // byte offset of the first character
};

template <typename Fn>
void for_each_record(std::string_view content, Fn&& fn) {
  std::size_t offset = 0;
  std::size_t number = 0;
  while (offset < content.size()) {
    std::size_t end = content.find('\n', offset);
    if (end == std::string_view::npos) end = content.size();
    ++number;
    std::string_view text = content.substr(offset, end - offset);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    // License header lines start with two spaces.
    if (!text.empty() && !text.starts_with("  ")) fn(Line{text, number, offset});
    offset = end + 1;
  }
}

struct PendingPointer {
  SynsetId source;
  Pos target_pos;
  std::uint32_t target_offset;
  bool hypernym;  // otherwise similar-to
  std::string file;
  std::size_t line;
  std::size_t byte;
};

void sort_unique(std::vector<SynsetId>& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

constexpr Rule kNounRules[] = {{"s", ""},      {"ses", "s"},   {"xes", "x"},   {"zes", "z"},
                               {"ches", "ch"}, {"shes", "sh"}, {"men", "man"}, {"ies", "y"}};
constexpr Rule kVerbRules[] = {{"s", ""},   {"ies", "y"}, {"es", "e"},  {"es", ""},
                               {"ed", "e"}, {"ed", ""},   {"ing", "e"}, {"ing", ""}};
constexpr Rule kAdjRules[] = {{"er", ""}, {"est", ""}, {"er", "e"}, {"est", "e"}};

std::span<const Rule> rules_for(Pos pos) {
  switch (pos) {
    case Pos::Noun: return kNounRules;
    case Pos::Verb: return kVerbRules;
    case Pos::Adj: return kAdjRules;
    case Pos::Adv: return {};
  }
  return {};
}

/// Breadth-first distances from a set of sources, reusable across searches.
class BfsScratch {
 public:
  explicit BfsScratch(std::size_t n) : dist_(n, -1) {}

  void run(const SynsetGraph& graph, std::span<const SynsetId> sources, std::optional<int> cap) {
    reset();
    std::deque<SynsetId> queue;
    for (SynsetId s : sources) {
      if (dist_[s.value] < 0) {
        dist_[s.value] = 0;
        touched_.push_back(s);
        queue.push_back(s);
      }
    }
    while (!queue.empty()) {
      const SynsetId cur = queue.front();
      queue.pop_front();
      const int d = dist_[cur.value];
      if (cap && d >= *cap) continue;
      for (SynsetId next : graph.neighbors(cur)) {
        if (dist_[next.value] < 0) {
          dist_[next.value] = d + 1;
          touched_.push_back(next);
          queue.push_back(next);
        }
      }
    }
    if (!cap || *cap >= 1) {
      for (SynsetId s : sources) {
        for (SynsetId t : graph.similar_to(s)) relax(t, 1);
      }
    }
  }

  void relax(SynsetId id, int d) {
    int& cur = dist_[id.value];
    if (cur < 0) {
      cur = d;
      touched_.push_back(id);
    } else if (d < cur) {
      cur = d;
    }
  }

  int distance(SynsetId id) const { return dist_[id.value]; }
  std::span<const SynsetId> touched() const { return touched_; }

 private:
  void reset() {
    for (SynsetId id : touched_) dist_[id.value] = -1;
    touched_.clear();
  }

  std::vector<int> dist_;
  std::vector<SynsetId> touched_;
};

}  // namespace

SynsetGraph SynsetGraph::load(const fs::path& dir) {
  for (std::string_view suffix : kFileSuffix) {
    for (std::string_view prefix : {"data.", "index."}) {
      const fs::path path = dir / (std::string(prefix) + std::string(suffix));
      if (!fs::is_regular_file(path)) throw MissingFile("missing WordNet file " + path.string());
    }
  }

  SynsetGraph g;
  std::vector<PendingPointer> pending;

  for (Pos pos : kAllPos) {
    const std::string name = "data." + std::string(kFileSuffix[pos_index(pos)]);
    const fs::path path = dir / name;
    const std::string content = read_file(path);
    for_each_record(content, [&](const Line& line) {
      auto fail = [&](const std::string& what) {
        throw ParseError(path.string(), line.number, line.offset, what);
      };
      std::string_view body = line.text;
      if (const auto bar = body.find(" | "); bar != std::string_view::npos) body = body.substr(0, bar);
      const auto f = split_fields(body);
      if (f.size() < 6) fail("truncated synset record");

      const auto offset = parse_uint(f[0]);
      if (!offset) fail("bad synset offset '" + std::string(f[0]) + "'");
      if (*offset != line.offset) {
        fail("synset offset " + std::string(f[0]) + " does not match byte position " +
             std::to_string(line.offset));
      }
      if (f[2].size() != 1 || pos_from_char(f[2][0]) != pos) {
        fail("synset type '" + std::string(f[2]) + "' does not belong in " + name);
      }
      const auto word_count = parse_uint(f[3], 16);
      if (!word_count || *word_count == 0) fail("bad word count '" + std::string(f[3]) + "'");

      const SynsetId id{static_cast<std::uint32_t>(g.synsets_.size())};
      Synset synset{pos, static_cast<std::uint32_t>(*offset), {}};
      std::size_t i = 4;
      for (std::uint64_t w = 0; w < *word_count; ++w, i += 2) {
        if (i + 1 >= f.size()) fail("synset " + std::string(f[0]) + ": truncated word list");
        synset.lemmas.push_back(normalize_lemma(f[i]));
      }
      if (i >= f.size()) fail("synset " + std::string(f[0]) + ": missing pointer count");
      const auto ptr_count = parse_uint(f[i]);
      if (!ptr_count) fail("synset " + std::string(f[0]) + ": bad pointer count");
      ++i;
      for (std::uint64_t p = 0; p < *ptr_count; ++p, i += 4) {
        if (i + 3 >= f.size()) {
          fail("synset " + std::string(f[0]) + ": truncated pointer list (" +
               std::to_string(p) + " of " + std::to_string(*ptr_count) + ")");
        }
        const std::string_view symbol = f[i];
        const auto target = parse_uint(f[i + 1]);
        const auto target_pos = f[i + 2].size() == 1 ? pos_from_char(f[i + 2][0]) : std::nullopt;
        if (!target || !target_pos || f[i + 3].size() != 4 || !parse_uint(f[i + 3], 16)) {
          fail("synset " + std::string(f[0]) + ": malformed pointer " + std::to_string(p));
        }
        const bool hypernym = symbol == "@" || symbol == "@i";
        const bool similar = symbol == "&";
        if (hypernym || similar) {
          pending.push_back({id, *target_pos, static_cast<std::uint32_t>(*target), hypernym,
                             path.string(), line.number, line.offset});
        }
      }
      g.by_offset_[pos_index(pos)].emplace(synset.offset, id);
      g.synsets_.push_back(std::move(synset));
      ++g.counts_[pos_index(pos)];
    });
  }

  const std::size_t n = g.synsets_.size();
  g.hypernyms_.resize(n);
  g.neighbors_.resize(n);
  g.similar_.resize(n);
  for (const PendingPointer& p : pending) {
    const auto target = g.find(p.target_pos, p.target_offset);
    if (!target) {
      throw ParseError(p.file, p.line, p.byte,
                       "pointer to unknown synset " + std::to_string(p.target_offset));
    }
    if (p.hypernym) {
      if (g.synsets_[target->value].pos != g.synsets_[p.source.value].pos) {
        throw ParseError(p.file, p.line, p.byte, "hypernym pointer crosses parts of speech");
      }
      g.hypernyms_[p.source.value].push_back(*target);
      g.neighbors_[p.source.value].push_back(*target);
      g.neighbors_[target->value].push_back(p.source);
    } else {
      g.similar_[p.source.value].push_back(*target);
      g.similar_[target->value].push_back(p.source);
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    sort_unique(g.hypernyms_[s]);
    sort_unique(g.neighbors_[s]);
    sort_unique(g.similar_[s]);
  }

  for (Pos pos : kAllPos) {
    const fs::path path = dir / ("index." + std::string(kFileSuffix[pos_index(pos)]));
    const std::string content = read_file(path);
    for_each_record(content, [&](const Line& line) {
      auto fail = [&](const std::string& what) {
        throw ParseError(path.string(), line.number, line.offset, what);
      };
      const auto f = split_fields(line.text);
      if (f.size() < 6) fail("truncated index record");
      const auto synset_count = parse_uint(f[2]);
      const auto ptr_count = parse_uint(f[3]);
      if (!synset_count || !ptr_count) fail("bad counts in index record");
      const std::size_t first = 4 + *ptr_count + 2;
      if (first + *synset_count != f.size()) fail("index record has wrong number of offsets");
      auto& senses = g.lemma_index_[normalize_lemma(f[0])].by_pos[pos_index(pos)];
      for (std::size_t k = first; k < f.size(); ++k) {
        const auto offset = parse_uint(f[k]);
        const auto id = offset ? g.find(pos, static_cast<std::uint32_t>(*offset)) : std::nullopt;
        if (!id) fail("index entry points at unknown synset '" + std::string(f[k]) + "'");
        senses.push_back(*id);
      }
    });
  }

  for (Pos pos : kAllPos) {
    const fs::path path = dir / (std::string(kFileSuffix[pos_index(pos)]) + ".exc");
    if (!fs::is_regular_file(path)) continue;
    const std::string content = read_file(path);
    for_each_record(content, [&](const Line& line) {
      const auto f = split_fields(line.text);
      if (f.size() < 2) return;
      auto& bases = g.exceptions_[pos_index(pos)][std::string(f[0])];
      for (std::size_t k = 1; k < f.size(); ++k) bases.emplace_back(f[k]);
    });
  }
  return g;
}

void SynsetGraph::check(SynsetId id) const {
  if (id.value >= synsets_.size()) throw UnknownSynset("unknown synset id " + std::to_string(id.value));
}

const Synset& SynsetGraph::synset(SynsetId id) const {
  check(id);
  return synsets_[id.value];
}

std::optional<SynsetId> SynsetGraph::find(Pos pos, std::uint32_t offset) const {
  const auto& map = by_offset_[pos_index(pos)];
  if (const auto it = map.find(offset); it != map.end()) return it->second;
  return std::nullopt;
}

std::span<const SynsetId> SynsetGraph::hypernyms(SynsetId id) const {
  check(id);
  return hypernyms_[id.value];
}

std::span<const SynsetId> SynsetGraph::neighbors(SynsetId id) const {
  check(id);
  return neighbors_[id.value];
}

std::span<const SynsetId> SynsetGraph::similar_to(SynsetId id) const {
  check(id);
  return similar_[id.value];
}

std::size_t SynsetGraph::hypernym_edge_count() const {
  std::size_t total = 0;
  for (const auto& h : hypernyms_) total += h.size();
  return total;
}

std::span<const SynsetId> SynsetGraph::senses(std::string_view lemma, Pos pos) const {
  const auto it = lemma_index_.find(std::string(lemma));
  if (it == lemma_index_.end()) return {};
  return it->second.by_pos[pos_index(pos)];
}

std::vector<std::string> SynsetGraph::morphy(std::string_view word, Pos pos) const {
  std::vector<std::string> candidates{std::string(word)};
  const auto& exc = exceptions_[pos_index(pos)];
  if (const auto it = exc.find(std::string(word)); it != exc.end()) {
    candidates.insert(candidates.end(), it->second.begin(), it->second.end());
  } else {
    for (const Rule& rule : rules_for(pos)) {
      if (word.size() >= rule.suffix.size() && word.ends_with(rule.suffix)) {
        std::string base(word.substr(0, word.size() - rule.suffix.size()));
        base += rule.replacement;
        candidates.push_back(std::move(base));
      }
    }
  }
  std::vector<std::string> out;
  for (auto& c : candidates) {
    if (!c.empty() && in_index(c, pos) && std::find(out.begin(), out.end(), c) == out.end()) {
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::optional<int> synset_distance(const SynsetGraph& graph, SynsetId from, SynsetId to,
                                   std::optional<int> cap) {
  graph.synset(from);
  graph.synset(to);
  if (from == to) return 0;
  BfsScratch bfs(graph.size());
  const SynsetId source[] = {from};
  bfs.run(graph, source, cap);
  const int d = bfs.distance(to);
  if (d < 0) return std::nullopt;
  return d;
}

double path_similarity(int distance, double a) { return a / (a + static_cast<double>(distance)); }

double synset_similarity(const SynsetGraph& graph, SynsetId from, SynsetId to, double a) {
  const auto d = synset_distance(graph, from, to);
  if (!d) {
    throw Disconnected("synsets " + std::to_string(from.value) + " and " +
                       std::to_string(to.value) + " are not connected");
  }
  return path_similarity(*d, a);
}

std::vector<SynsetId> term_senses(const SynsetGraph& graph, const Term& term) {
  std::vector<SynsetId> out;
  for (Pos pos : kAllPos) {
    if (!term.pos_tags.contains(pos)) continue;
    const auto s = graph.senses(term.lemma, pos);
    out.insert(out.end(), s.begin(), s.end());
  }
  sort_unique(out);
  return out;
}

std::optional<int> word_distance(const SynsetGraph& graph, const Term& lhs, const Term& rhs,
                                 std::optional<int> cap) {
  if (lhs.stem == rhs.stem) return 0;
  const auto from = term_senses(graph, lhs);
  const auto to = term_senses(graph, rhs);
  if (from.empty() || to.empty()) return std::nullopt;
  BfsScratch bfs(graph.size());
  bfs.run(graph, from, cap);
  std::optional<int> best;
  for (SynsetId t : to) {
    const int d = bfs.distance(t);
    if (d >= 0 && (!best || d < *best)) best = d;
  }
  return best;
}

double word_similarity(const SynsetGraph& graph, const Term& lhs, const Term& rhs, double a) {
  const auto d = word_distance(graph, lhs, rhs);
  return d ? path_similarity(*d, a) : 0.0;
}

WordSimMatrix::WordSimMatrix(std::vector<std::vector<Entry>> rows, WordSimParams params)
    : rows_(std::move(rows)), params_(params) {
  for (auto& row : rows_) {
    std::sort(row.begin(), row.end(), [](const Entry& x, const Entry& y) { return x.col < y.col; });
  }
}

WordSimMatrix WordSimMatrix::identity(std::size_t dim) {
  return WordSimMatrix(std::vector<std::vector<Entry>>(dim), WordSimParams{});
}

double WordSimMatrix::operator()(std::size_t i, std::size_t j) const {
  if (i == j) return 1.0;
  const auto& row = rows_.at(i);
  const auto it = std::lower_bound(row.begin(), row.end(), j,
                                   [](const Entry& e, std::size_t col) { return e.col < col; });
  return it != row.end() && it->col == j ? it->similarity : 0.0;
}

std::size_t WordSimMatrix::nnz() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.size();
  return total;
}

WordSimMatrix build_word_sim_matrix(const SynsetGraph& graph, std::span<const Term> vocabulary,
                                    const WordSimParams& params) {
  const std::size_t m = vocabulary.size();
  std::vector<std::vector<SynsetId>> senses(m);
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> words_of_synset;
  for (std::size_t i = 0; i < m; ++i) {
    senses[i] = term_senses(graph, vocabulary[i]);
    for (SynsetId s : senses[i]) words_of_synset[s.value].push_back(static_cast<std::uint32_t>(i));
  }

  std::vector<std::vector<WordSimMatrix::Entry>> rows(m);
  if (params.max_path >= 0) {
    BfsScratch bfs(graph.size());
    std::vector<int> best(m, -1);
    std::vector<std::uint32_t> hit;
    for (std::size_t i = 0; i < m; ++i) {
      if (senses[i].empty()) continue;
      bfs.run(graph, senses[i], params.max_path);
      for (SynsetId t : bfs.touched()) {
        const int d = bfs.distance(t);
        if (d > params.max_path) continue;
        const auto it = words_of_synset.find(t.value);
        if (it == words_of_synset.end()) continue;
        for (std::uint32_t j : it->second) {
          if (j == i) continue;
          if (best[j] < 0) hit.push_back(j);
          if (best[j] < 0 || d < best[j]) best[j] = d;
        }
      }
      for (std::uint32_t j : hit) {
        rows[i].push_back({j, best[j], path_similarity(best[j], params.a)});
        best[j] = -1;
      }
      hit.clear();
    }
  }

  // Horizontal filter: drop every entry touching a word with too many neighbours.
  std::vector<bool> dropped(m, false);
  for (std::size_t i = 0; i < m; ++i) dropped[i] = rows[i].size() > params.max_neighbors;
  for (std::size_t i = 0; i < m; ++i) {
    if (dropped[i]) {
      rows[i].clear();
      continue;
    }
    std::erase_if(rows[i], [&](const WordSimMatrix::Entry& e) { return dropped[e.col]; });
  }
  return WordSimMatrix(std::move(rows), params);
}

}  // namespace maniquery
