#include <doctest.h>

#include <algorithm>
#include <string>

#include "fuzz_support.hpp"
#include "mars/dsl.hpp"
#include "support.hpp"

using namespace mars;
using mars::testing::Rng;

namespace {

const char* kHalFile =
    "scenario \"Hal the Diabetic\"\n"
    "actions: take_insulin, dont_take_insulin\n"
    "values: hals_life, carlas_life, property\n"
    "stratum 1: hals_life, carlas_life\n"
    "stratum 2: property\n"
    "impact take_insulin: hals_life=+1, carlas_life=-1, property=-1\n"
    "impact dont_take_insulin: hals_life=-1, carlas_life=+1, property=+1\n"
    "model: additive\n";

bool has_error(const ParseResult& result, ParseErrorKind kind, int line, int column) {
  return std::any_of(result.errors.begin(), result.errors.end(), [&](const ParseError& e) {
    return e.kind == kind && e.span.line == line && e.span.column == column;
  });
}

}  // namespace

TEST_CASE("the hal file parses into the expected scenario") {
  ParseResult result = parse_scenario(kHalFile);
  REQUIRE(result.ok());
  const Scenario& s = *result.scenario;
  CHECK(s.name == "Hal the Diabetic");
  CHECK(s.actions.size() == 2);
  CHECK(s.values.size() == 3);
  CHECK(s.stratification.stratum_count() == 2);
  CHECK(s.default_model == ModelKind::Additive);
  CHECK(impact_representation(s, "take_insulin") == std::vector<int>{1, -1, -1});
  CHECK(s == testing::hal_scenario(false));
  CHECK(validate_scenario(s).ok());
}

TEST_CASE("the selfish hal variant has three strata") {
  std::string text =
      "scenario \"Hal the Diabetic (selfish)\"\n"
      "actions: take_insulin, dont_take_insulin\n"
      "values: hals_life, carlas_life, property\n"
      "stratum 1: hals_life\n"
      "stratum 2: carlas_life\n"
      "stratum 3: property\n"
      "impact take_insulin: hals_life=+1, carlas_life=-1, property=-1\n"
      "impact dont_take_insulin: hals_life=-1, carlas_life=+1, property=+1\n"
      "model: global-maximum\n";
  ParseResult result = parse_scenario(text);
  REQUIRE(result.ok());
  CHECK(result.scenario->stratification.stratum_count() == 3);
  CHECK(result.scenario->default_model == ModelKind::GlobalMaximum);
  CHECK(*result.scenario == testing::hal_scenario(true));
}

TEST_CASE("a value in two strata is a partition violation with both spans") {
  std::string text =
      "scenario \"broken\"\n"
      "actions: a\n"
      "values: hals_life, property\n"
      "stratum 1: hals_life, property\n"
      "stratum 2: property\n";
  ParseResult result = parse_scenario(text);
  REQUIRE_FALSE(result.ok());
  CHECK(has_error(result, ParseErrorKind::PartitionViolation, 4, 23));
  CHECK(has_error(result, ParseErrorKind::PartitionViolation, 5, 12));
  CHECK(result.errors.size() == 2);
}

TEST_CASE("an out-of-range coefficient is rejected at its token") {
  std::string text =
      "scenario \"broken\"\n"
      "actions: take_insulin\n"
      "values: hals_life\n"
      "stratum 1: hals_life\n"
      "impact take_insulin: hals_life=+2\n";
  ParseResult result = parse_scenario(text);
  REQUIRE_FALSE(result.ok());
  REQUIRE(result.errors.size() == 1);
  CHECK(result.errors[0].kind == ParseErrorKind::BadCoefficient);
  CHECK(result.errors[0].span.line == 5);
  CHECK(result.errors[0].span.column == 32);
  CHECK(result.errors[0].span.length == 2);
}

TEST_CASE("all errors are reported in one pass") {
  std::string text =
      "scenario \"broken\"\n"
      "actions: a, a\n"
      "values: v, w\n"
      "stratum 1: v, ghost\n"
      "impact a: w=+3\n"
      "weight w=0\n"
      "model: nonsense\n";
  ParseResult result = parse_scenario(text);
  REQUIRE_FALSE(result.ok());
  CHECK(has_error(result, ParseErrorKind::DuplicateId, 2, 13));
  CHECK(has_error(result, ParseErrorKind::UnknownReference, 4, 15));
  CHECK(has_error(result, ParseErrorKind::PartitionViolation, 3, 12));  // w unplaced
  CHECK(has_error(result, ParseErrorKind::BadCoefficient, 5, 13));
  CHECK(has_error(result, ParseErrorKind::BadWeight, 6, 10));
  CHECK(has_error(result, ParseErrorKind::Syntax, 7, 8));
  CHECK(result.errors.size() == 6);
}

TEST_CASE("missing sections are reported") {
  ParseResult result = parse_scenario("values: v\nstratum 1: v\n");
  REQUIRE_FALSE(result.ok());
  CHECK(std::any_of(result.errors.begin(), result.errors.end(), [](const ParseError& e) {
    return e.message.find("missing 'scenario") != std::string::npos;
  }));
  CHECK(std::any_of(result.errors.begin(), result.errors.end(), [](const ParseError& e) {
    return e.message.find("missing 'actions") != std::string::npos;
  }));
}

TEST_CASE("stratum indices must be consecutive from 1") {
  std::string base =
      "scenario \"x\"\n"
      "actions: a\n"
      "values: v, w\n";
  ParseResult gap = parse_scenario(base + "stratum 1: v\nstratum 3: w\n");
  REQUIRE_FALSE(gap.ok());
  CHECK(has_error(gap, ParseErrorKind::Syntax, 5, 9));

  ParseResult dup = parse_scenario(base + "stratum 1: v\nstratum 1: w\n");
  REQUIRE_FALSE(dup.ok());
  CHECK(has_error(dup, ParseErrorKind::DuplicateId, 5, 9));

  ParseResult zero = parse_scenario(base + "stratum 0: v\nstratum 1: w\n");
  REQUIRE_FALSE(zero.ok());
  CHECK(has_error(zero, ParseErrorKind::Syntax, 4, 9));
}

TEST_CASE("duplicate impact entries and weights are rejected") {
  std::string text =
      "scenario \"x\"\n"
      "actions: a\n"
      "values: v\n"
      "stratum 1: v\n"
      "impact a: v=+1, v=-1\n"
      "weight v=2\n"
      "weight v=3\n";
  ParseResult result = parse_scenario(text);
  REQUIRE_FALSE(result.ok());
  CHECK(has_error(result, ParseErrorKind::DuplicateId, 5, 17));
  CHECK(has_error(result, ParseErrorKind::DuplicateId, 7, 8));
  CHECK(result.errors.size() == 2);
}

TEST_CASE("comments, blank lines and flexible ordering are fine") {
  std::string text =
      "# a header comment\n"
      "scenario \"tidy\"   # trailing comment\n"
      "\n"
      "values: v, w\n"
      "actions: a, b\n"
      "model: min-negative-count\n"
      "stratum 2: w   # lower stratum\n"
      "stratum 1: v\n"
      "impact b: v=-1\n"
      "weight w=0.5\n";
  ParseResult result = parse_scenario(text);
  REQUIRE(result.ok());
  CHECK(result.scenario->stratification.strata[0] == std::vector<ValueId>{"v"});
  CHECK(result.scenario->stratification.strata[1] == std::vector<ValueId>{"w"});
  CHECK(result.scenario->default_model == ModelKind::MinNegativeCount);
  CHECK(result.scenario->weights.of("w") == 0.5);
}

TEST_CASE("a scenario without values parses with a warning") {
  ParseResult result = parse_scenario("scenario \"bare\"\nactions: a, b\nvalues:\n");
  REQUIRE(result.ok());
  CHECK(result.scenario->values.empty());
  REQUIRE(result.warnings.size() == 1);
}

TEST_CASE("model line defaults to additive when omitted") {
  ParseResult result = parse_scenario("scenario \"x\"\nactions: a\nvalues:\n");
  REQUIRE(result.ok());
  CHECK(result.scenario->default_model == ModelKind::Additive);
}

TEST_CASE("string escapes round-trip") {
  Scenario s = testing::hal_scenario(false);
  s.name = "say \"hi\" \\ back";
  std::string text = serialize_scenario(s);
  ParseResult result = parse_scenario(text);
  REQUIRE(result.ok());
  CHECK(result.scenario->name == s.name);
  CHECK(*result.scenario == s);
}

TEST_CASE("serialization is canonical and round-trips") {
  ParseResult parsed = parse_scenario(kHalFile);
  REQUIRE(parsed.ok());
  std::string canonical = serialize_scenario(*parsed.scenario);
  CHECK(canonical == kHalFile);  // the hal file is already canonical

  ParseResult again = parse_scenario(canonical);
  REQUIRE(again.ok());
  CHECK(*again.scenario == *parsed.scenario);
  CHECK(serialize_scenario(*again.scenario) == canonical);
}

TEST_CASE("zero coefficients and unit weights are omitted") {
  Scenario s;
  s.name = "sparse";
  s.actions = {"a", "b"};
  s.values = {"v", "w"};
  s.stratification.strata = {{"v", "w"}};
  s.impacts.set("a", "v", 0);
  s.impacts.set("a", "w", -1);
  s.weights.entries["v"] = 1.0;
  s.weights.entries["w"] = 2.5;
  std::string text = serialize_scenario(s);
  CHECK(text ==
        "scenario \"sparse\"\n"
        "actions: a, b\n"
        "values: v, w\n"
        "stratum 1: v, w\n"
        "impact a: w=-1\n"
        "weight w=2.5\n"
        "model: additive\n");
  ParseResult result = parse_scenario(text);
  REQUIRE(result.ok());
  CHECK(*result.scenario == s);
}

TEST_CASE("weights serialize with shortest round-trip decimals") {
  Scenario s;
  s.name = "weights";
  s.actions = {"a"};
  s.values = {"v"};
  s.stratification.strata = {{"v"}};
  s.weights.entries["v"] = 0.1;
  std::string text = serialize_scenario(s);
  CHECK(text.find("weight v=0.1\n") != std::string::npos);
  ParseResult result = parse_scenario(text);
  REQUIRE(result.ok());
  CHECK(result.scenario->weights.of("v") == 0.1);
}

TEST_CASE("random scenarios survive serialize-parse round trips") {
  Rng rng(2468);
  testing::GenOptions opts;
  opts.zero_value_percent = 5;
  for (int trial = 0; trial < 250; ++trial) {
    Scenario s = testing::random_scenario(rng, opts);
    std::string text = serialize_scenario(s);
    ParseResult result = parse_scenario(text);
    REQUIRE(result.ok());
    CHECK(*result.scenario == s);
    CHECK(serialize_scenario(*result.scenario) == text);
  }
}

TEST_CASE("parsed scenarios always pass validation") {
  Rng rng(1357);
  for (int trial = 0; trial < 100; ++trial) {
    Scenario s = testing::random_scenario(rng);
    ParseResult result = parse_scenario(serialize_scenario(s));
    REQUIRE(result.ok());
    CHECK(validate_scenario(*result.scenario).ok());
  }
}

TEST_CASE("fuzzed single-token corruptions are never silently mishandled") {
  Rng rng(97531);
  testing::FuzzStats stats;
  std::vector<std::string> corpus;
  corpus.push_back(kHalFile);
  corpus.push_back(serialize_scenario(testing::hal_scenario(true)));
  testing::GenOptions opts;
  opts.max_values = 5;
  for (int i = 0; i < 8; ++i) {
    corpus.push_back(serialize_scenario(testing::random_scenario(rng, opts)));
  }
  for (int trial = 0; trial < 2500; ++trial) {
    testing::run_fuzz_trial(rng, corpus[rng.below(corpus.size())], stats);
  }
  for (const std::string& failure : stats.failures) {
    FAIL_CHECK(failure);
  }
  CHECK(stats.failures.empty());
  CHECK(stats.trials > 2000);
  CHECK(stats.rejected > stats.trials / 2);
}
