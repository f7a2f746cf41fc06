#include <doctest.h>

#include "maniquery/config.hpp"
#include "maniquery/error.hpp"

using namespace maniquery;

TEST_CASE("defaults") {
  const PipelineConfig c;
  CHECK(c.alpha_mr == 0.6);
  CHECK(c.alpha_cos == 0.9);
  CHECK(c.alpha_overlap == 0.1);
  CHECK(c.alpha_peer == 0.4);
  CHECK(c.omega == 8.0);
  CHECK(c.budget == 250);
  CHECK(c.max_path == 4);
  CHECK(c.max_neighbors == 5000);
  CHECK(c.c_words == 100);
  CHECK(c.r_t == 0.4);
  CHECK(c.damping == 0.6);
  CHECK(c.expansions == ExpansionSet::all());
  CHECK_NOTHROW(validate_config(c));
}

TEST_CASE("serialize then parse is the identity") {
  PipelineConfig c;
  c.alpha_mr = 0.35;
  c.alpha_overlap = 1.0 / 3.0;
  c.max_neighbors = kUnlimited;
  c.expansions = ExpansionSet::parse("mean,textrank");
  c.rouge_aggregation = RougeAggregation::Pooled;
  c.rouge_jackknife = true;
  c.corpus_dir = "/tmp/some corpus";
  c.dump_graph = true;
  c.workers = 3;
  const std::string text = serialize_config(c);
  CHECK(text.find("max_neighbors = inf") != std::string::npos);
  CHECK(parse_config(text) == c);

  const PipelineConfig d;
  CHECK(parse_config(serialize_config(d)) == d);
}

TEST_CASE("every key reads back what was written") {
  const PipelineConfig c;
  for (const std::string& key : config_keys()) {
    CAPTURE(key);
    CHECK(is_config_key(key));
    PipelineConfig copy = c;
    set_config_value(copy, key, get_config_value(c, key));
    CHECK(copy == c);
  }
  CHECK_FALSE(is_config_key("alpha"));
}

TEST_CASE("comments, blanks and whitespace") {
  const PipelineConfig c = parse_config(
      "# leading comment\n"
      "\n"
      "  alpha_mr   =   0.75  \n"
      "budget=100 # trailing\n"
      "expansions =\n");
  CHECK(c.alpha_mr == 0.75);
  CHECK(c.budget == 100);
  CHECK(c.expansions == ExpansionSet::none());
}

TEST_CASE("parse keeps the base for keys it does not mention") {
  PipelineConfig base;
  base.omega = 2.0;
  const PipelineConfig c = parse_config("budget = 10\n", base);
  CHECK(c.omega == 2.0);
  CHECK(c.budget == 10);
}

TEST_CASE("bad input is a ConfigError") {
  PipelineConfig c;
  CHECK_THROWS_AS(set_config_value(c, "no_such_key", "1"), ConfigError);
  CHECK_THROWS_AS(set_config_value(c, "alpha_mr", "abc"), ConfigError);
  CHECK_THROWS_AS(set_config_value(c, "budget", "-3"), ConfigError);
  CHECK_THROWS_AS(set_config_value(c, "budget", "1.5"), ConfigError);
  CHECK_THROWS_AS(set_config_value(c, "alpha_cos", "-0.1"), ConfigError);
  CHECK_THROWS_AS(set_config_value(c, "expansions", "mean,bogus"), ConfigError);
  CHECK_THROWS_AS(parse_config("just words\n"), ConfigError);
  CHECK_NOTHROW(set_config_value(c, "max_neighbors", "unlimited"));
  CHECK(c.max_neighbors == kUnlimited);
}

TEST_CASE("validation") {
  PipelineConfig c;
  for (double alpha : {0.0, 1.0, -0.5, 1.5}) {
    c = {};
    c.alpha_mr = alpha;
    CHECK_THROWS_AS(validate_config(c), ConfigError);
  }
  c = {};
  c.damping = 1.0;
  CHECK_THROWS_AS(validate_config(c), ConfigError);
  c = {};
  c.r_t = 1.5;
  CHECK_THROWS_AS(validate_config(c), ConfigError);
  c = {};
  c.workers = 0;
  CHECK_THROWS_AS(validate_config(c), ConfigError);
}

TEST_CASE("format_double round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 1e-9, 0.6, 250.0, 0.0}) {
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(0.6) == "0.6");
}
