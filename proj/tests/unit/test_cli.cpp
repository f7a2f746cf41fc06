#include <doctest.h>

#include <array>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include "test_support.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'') {
      q += "'\\''";
    } else {
      q += c;
    }
  }
  return q + "'";
}

/// Runs the CLI through the shell with stderr discarded. `env` is a
/// prefix such as "MANIQUERY_WORDNET=/x".
Run cli(const std::vector<std::string>& args, const std::string& env = "env -u MANIQUERY_WORDNET") {
  std::string cmd = env + " " + quote(MANIQUERY_CLI);
  for (const std::string& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> base_args(const std::string& sub, const fs::path& out) {
  return {sub, "--corpus-dir", mqtest::toy_corpus_dir().string(), "--wordnet-dir",
          mqtest::stub_wordnet_dir().string(), "--output-dir", out.string()};
}

}  // namespace

TEST_CASE("summarize succeeds and reports every topic") {
  mqtest::TempDir tmp;
  const Run r = cli(base_args("summarize", tmp / "out"));
  CHECK(r.code == 0);
  CHECK(r.out.find("t01_honeybees:") != std::string::npos);
  CHECK(r.out.find("t02_coral_reefs:") != std::string::npos);
  CHECK(fs::exists(tmp / "out" / "t01_honeybees" / "summary.txt"));
  CHECK(fs::exists(tmp / "out" / "aggregate.json"));
}

TEST_CASE("empty expansion list runs without WordNet") {
  mqtest::TempDir tmp;
  const Run r = cli({"summarize", "--corpus-dir", mqtest::toy_corpus_dir().string(), "--output-dir",
                     (tmp / "out").string(), "--expansions", ""});
  CHECK(r.code == 0);
}

TEST_CASE("missing WordNet with sim_word enabled exits 2") {
  mqtest::TempDir tmp;
  const Run r = cli({"summarize", "--corpus-dir", mqtest::toy_corpus_dir().string(), "--output-dir",
                     (tmp / "out").string()});
  CHECK(r.code == 2);
  CHECK_FALSE(fs::exists(tmp / "out"));
}

TEST_CASE("MANIQUERY_WORDNET is the fallback directory") {
  mqtest::TempDir tmp;
  const Run r = cli({"summarize", "--corpus-dir", mqtest::toy_corpus_dir().string(), "--output-dir",
                     (tmp / "out").string()},
                    "MANIQUERY_WORDNET=" + quote(mqtest::stub_wordnet_dir().string()));
  CHECK(r.code == 0);
}

TEST_CASE("configuration errors exit 2") {
  mqtest::TempDir tmp;
  auto args = base_args("summarize", tmp / "out");
  args.insert(args.end(), {"--alpha-mr", "1.5"});
  CHECK(cli(args).code == 2);

  args = base_args("summarize", tmp / "out");
  args.insert(args.end(), {"--set", "no_such_key=1"});
  CHECK(cli(args).code == 2);

  CHECK(cli({"summarize", "--bogus-flag"}).code == 2);
  CHECK(cli({}).code == 2);

  mqtest::write_text(tmp / "bad.conf", "alpha_mr = nope\n");
  args = base_args("summarize", tmp / "out");
  args.insert(args.end(), {"--config", (tmp / "bad.conf").string()});
  CHECK(cli(args).code == 2);
}

TEST_CASE("config file, flags and --set resolve in that order") {
  mqtest::TempDir tmp;
  mqtest::write_text(tmp / "c.conf", "budget = 10\nomega = 0\n");
  auto args = base_args("summarize", tmp / "out");
  args.insert(args.end(), {"--config", (tmp / "c.conf").string(), "--budget", "20"});
  CHECK(cli(args).code == 0);
  const auto sel = nlohmann::json::parse(
      mqtest::read_text(tmp / "out" / "t01_honeybees" / "selection.json"));
  CHECK(sel["word_count"] == 20);

  args.insert(args.end(), {"--set", "budget=30"});
  CHECK(cli(args).code == 0);
  const auto sel2 = nlohmann::json::parse(
      mqtest::read_text(tmp / "out" / "t01_honeybees" / "selection.json"));
  CHECK(sel2["word_count"] == 30);
}

TEST_CASE("a failing topic exits 1") {
  mqtest::TempDir tmp;
  fs::copy(mqtest::toy_corpus_dir(), tmp / "corpus", fs::copy_options::recursive);
  mqtest::write_text(tmp / "corpus" / "t00_empty" / "query.txt", "Empty\n");
  const Run r = cli({"summarize", "--corpus-dir", (tmp / "corpus").string(), "--wordnet-dir",
                     mqtest::stub_wordnet_dir().string(), "--output-dir", (tmp / "out").string()});
  CHECK(r.code == 1);
  CHECK(fs::exists(tmp / "out" / "t01_honeybees" / "summary.txt"));
}

TEST_CASE("sweep prints a TSV table") {
  mqtest::TempDir tmp;
  auto args = base_args("sweep", tmp / "out");
  args.insert(args.end(), {"--param", "alpha_overlap", "--values", "0,0.5,1"});
  const Run r = cli(args);
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
  CHECK(r.out.find("alpha_overlap\t0.5\t0.5\t0.5\t") != std::string::npos);
  CHECK(r.out.find("alpha_overlap\t1\t0\t1\t") != std::string::npos);

  args = base_args("sweep", tmp / "out");
  args.insert(args.end(), {"--param", "nope", "--values", "1"});
  CHECK(cli(args).code == 2);
}

TEST_CASE("rouge subcommand") {
  mqtest::TempDir tmp;
  mqtest::write_text(tmp / "cand.txt", "the cat sat\n");
  mqtest::write_text(tmp / "refs" / "A.txt", "the cat\n");
  const Run r = cli({"rouge", "--cand", (tmp / "cand.txt").string(), "--refs",
                     (tmp / "refs").string(), "--metrics", "r1", "--json",
                     (tmp / "r.json").string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("P=0.66667 R=1.00000 F1=0.80000") != std::string::npos);
  const auto j = nlohmann::json::parse(mqtest::read_text(tmp / "r.json"));
  CHECK(j["metrics"]["r1"]["f1"].get<double>() == doctest::Approx(0.8));

  CHECK(cli({"rouge", "--cand", (tmp / "cand.txt").string(), "--refs", (tmp / "refs").string(),
             "--metrics", "r9"})
            .code == 2);
}

TEST_CASE("dump-matrix") {
  mqtest::TempDir tmp;
  const Run r = cli({"dump-matrix", "--topic", (mqtest::toy_corpus_dir() / "t01_honeybees").string(),
                     "--wordnet-dir", mqtest::stub_wordnet_dir().string(), "--which", "w"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("%%MatrixMarket matrix coordinate real general"));
}
