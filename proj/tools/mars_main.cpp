#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mars/dsl.hpp"
#include "mars/evaluation.hpp"
#include "mars/explanation.hpp"
#include "mars/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitEvaluation = 3;
constexpr int kExitSearch = 4;

bool color_enabled() {
  const char* env = std::getenv("MARS_COLOR");
  return env != nullptr && std::string_view(env) == "1";
}

std::string paint(const std::string& text, const char* code) {
  if (!color_enabled()) return text;
  return std::string("\x1b[") + code + "m" + text + "\x1b[0m";
}

void print_parse_errors(const std::string& path, const std::vector<mars::ParseError>& errors) {
  for (const mars::ParseError& e : errors) {
    std::cerr << path << ":" << e.span.line << ":" << e.span.column << ": "
              << paint("error", "31;1") << " ["
              << mars::parse_error_kind_name(e.kind) << "] " << e.message << "\n";
  }
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) {
    std::cerr << paint("warning", "33;1") << ": " << w << "\n";
  }
}

struct LoadedScenario {
  mars::Scenario scenario;
};

// Reads and parses a scenario file; on failure prints diagnostics and
// returns nullopt with *exit_code set.
std::optional<mars::Scenario> load_scenario(const std::string& path, int* exit_code) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << paint("error", "31;1") << ": cannot read scenario file '" << path << "'\n";
    *exit_code = kExitParse;
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  mars::ParseResult result = mars::parse_scenario(buffer.str());
  print_warnings(result.warnings);
  if (!result.ok()) {
    print_parse_errors(path, result.errors);
    *exit_code = kExitParse;
    return std::nullopt;
  }
  return std::move(*result.scenario);
}

mars::ModelKind resolve_model(const mars::Scenario& scenario,
                              const std::string& model_flag) {
  if (model_flag.empty()) return scenario.default_model;
  auto kind = mars::parse_model_kind(model_flag);
  if (!kind) {
    throw CLI::ValidationError("--model",
                               "unknown model '" + model_flag + "' (see `mars models`)");
  }
  return *kind;
}

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, ',')) {
    // trim surrounding spaces
    std::size_t begin = piece.find_first_not_of(" \t");
    std::size_t end = piece.find_last_not_of(" \t");
    if (begin == std::string::npos) continue;
    out.push_back(piece.substr(begin, end - begin + 1));
  }
  return out;
}

int exit_code_for(const mars::MarsError& e) {
  switch (e.kind()) {
    case mars::ErrorKind::GmmRequiresTotalOrder:
    case mars::ErrorKind::UnsupportedModel:
      return kExitEvaluation;
    case mars::ErrorKind::UnsatisfiableTarget:
    case mars::ErrorKind::TooManyValuesForSearch:
      return kExitSearch;
    default:
      // lookup failures: the invocation referenced something the file
      // does not declare
      return kExitParse;
  }
}

int run_eval(const std::string& path, const std::string& model_flag, bool explain,
             const std::string& output) {
  int code = kExitOk;
  auto scenario = load_scenario(path, &code);
  if (!scenario) return code;
  mars::ModelKind model = resolve_model(*scenario, model_flag);
  mars::DecisionResult result = mars::preferred_set(*scenario, model);
  if (output == "structured") {
    std::cout << mars::render_trace(result.trace, mars::TraceFormat::Structured);
  } else if (explain) {
    std::cout << mars::render_trace(result.trace, mars::TraceFormat::Plain);
  } else {
    std::cout << "preferred: " << join_ids(result.preferred) << "\n";
  }
  return kExitOk;
}

int run_compare(const std::string& path, const std::string& first,
                const std::string& second, const std::string& model_flag) {
  int code = kExitOk;
  auto scenario = load_scenario(path, &code);
  if (!scenario) return code;
  mars::ModelKind model = resolve_model(*scenario, model_flag);
  mars::ExplanationTrace trace = mars::build_trace(*scenario, model);
  mars::Preference outcome = mars::compare(*scenario, model, first, second);
  std::cout << first << " vs " << second << ": ";
  switch (outcome) {
    case mars::Preference::FirstPreferred: std::cout << first << " preferred"; break;
    case mars::Preference::SecondPreferred: std::cout << second << " preferred"; break;
    case mars::Preference::Tie: std::cout << "tie"; break;
  }
  // Reuse the trace record for the deciding stratum/value detail.
  for (const mars::ComparisonRecord& record : trace.records) {
    bool same = (record.first == first && record.second == second) ||
                (record.first == second && record.second == first);
    if (!same || !record.deciding_stratum) continue;
    std::cout << " (stratum " << *record.deciding_stratum;
    if (record.deciding_value) std::cout << ", value " << *record.deciding_value;
    std::cout << " decides)";
    break;
  }
  std::cout << "\n";
  return kExitOk;
}

std::string format_stratification(const mars::Stratification& st) {
  std::string out;
  for (const auto& cell : st.strata) {
    if (!out.empty()) out += " / ";
    out += join_ids(cell);
  }
  return out;
}

int run_search(const std::string& path, const std::string& model_flag,
               const std::string& contains, const std::string& exact,
               std::optional<int> max_strata) {
  int code = kExitOk;
  auto scenario = load_scenario(path, &code);
  if (!scenario) return code;

  mars::SearchQuery query;
  query.base = *scenario;
  query.model = resolve_model(*scenario, model_flag);
  query.max_strata = max_strata;
  if (!contains.empty()) {
    query.target = mars::SearchTarget::Contains;
    query.target_actions = {contains};
  } else {
    query.target = mars::SearchTarget::ExactSet;
    query.target_actions = split_commas(exact);
    if (query.target_actions.empty()) {
      std::cerr << paint("error", "31;1")
                << ": the preferred set is never empty; an empty --exact target is "
                   "unsatisfiable\n";
      return kExitSearch;
    }
  }

  mars::SearchOutcome outcome = mars::search_paradigms(query);
  std::cout << "matches: " << outcome.matches.size() << " of "
            << outcome.candidates_evaluated << " stratifications";
  if (query.model == mars::ModelKind::GlobalMaximum) {
    std::cout << " (skipped " << outcome.skipped_non_singleton << " non-singleton)";
  }
  std::cout << "\n";
  for (const mars::SearchMatch& match : outcome.matches) {
    std::cout << "match: " << format_stratification(match.stratification)
              << " => preferred: " << join_ids(match.result.preferred) << "\n";
  }
  return kExitOk;
}

int run_validate(const std::string& path) {
  int code = kExitOk;
  auto scenario = load_scenario(path, &code);
  if (!scenario) return code;
  mars::ValidationReport report = mars::validate_scenario(*scenario);
  // Parsing already enforces every invariant; this is the belt to the
  // parser's braces.
  if (!report.ok()) {
    for (const mars::Violation& violation : report.violations) {
      std::cerr << paint("error", "31;1") << ": " << violation.message << "\n";
    }
    return kExitParse;
  }
  std::cout << "ok: \"" << scenario->name << "\" (" << scenario->actions.size()
            << " actions, " << scenario->values.size() << " values, "
            << scenario->stratification.stratum_count() << " strata)\n";
  return kExitOk;
}

int run_models() {
  for (mars::ModelKind kind : mars::kAllModels) {
    std::string name(mars::model_kind_name(kind));
    name.resize(22, ' ');
    std::cout << name << mars::model_kind_summary(kind) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MARS: multi-valued action reasoning over stratified value paradigms"};
  app.require_subcommand(1);

  std::string file;
  std::string model_flag;
  bool explain = false;
  std::string output = "plain";
  std::string first_action, second_action;
  std::string contains_target, exact_target;
  int max_strata = 0;
  bool exact_given = false;

  CLI::App* eval = app.add_subcommand("eval", "evaluate a scenario and print the preferred actions");
  eval->add_option("file", file, "scenario file")->required();
  eval->add_option("--model", model_flag, "evaluation model (overrides the file's model line)");
  eval->add_flag("--explain", explain, "print the full reasoning trace");
  eval->add_option("--output", output, "output format")
      ->check(CLI::IsMember({"plain", "structured"}));

  CLI::App* compare = app.add_subcommand("compare", "compare two actions pairwise");
  compare->add_option("file", file, "scenario file")->required();
  compare->add_option("first", first_action, "first action")->required();
  compare->add_option("second", second_action, "second action")->required();
  compare->add_option("--model", model_flag, "evaluation model");

  CLI::App* search = app.add_subcommand(
      "search", "enumerate stratifications whose preferred set matches a target");
  search->add_option("file", file, "scenario file (its strata are ignored)")->required();
  search->add_option("--model", model_flag, "evaluation model");
  search->add_option("--contains", contains_target, "target: this action is preferred");
  search->add_option("--exact", exact_target,
                     "target: the preferred set equals this comma-separated set");
  search->add_option("--max-strata", max_strata, "cap on the number of strata");

  CLI::App* validate = app.add_subcommand("validate", "parse and validate a scenario file");
  validate->add_option("file", file, "scenario file")->required();

  CLI::App* models = app.add_subcommand("models", "list the six evaluation models");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  exact_given = search->count("--exact") > 0;

  try {
    if (app.got_subcommand(eval)) return run_eval(file, model_flag, explain, output);
    if (app.got_subcommand(compare)) {
      return run_compare(file, first_action, second_action, model_flag);
    }
    if (app.got_subcommand(search)) {
      if (contains_target.empty() == !exact_given) {
        std::cerr << "usage error: search needs exactly one of --contains or --exact\n";
        return kExitUsage;
      }
      if (search->count("--max-strata") > 0 && max_strata < 1) {
        std::cerr << "usage error: --max-strata must be >= 1\n";
        return kExitUsage;
      }
      std::optional<int> cap;
      if (search->count("--max-strata") > 0) cap = max_strata;
      return run_search(file, model_flag, contains_target, exact_target, cap);
    }
    if (app.got_subcommand(validate)) return run_validate(file);
    if (app.got_subcommand(models)) return run_models();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mars::MarsError& e) {
    std::cerr << paint("error", "31;1") << ": " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kExitUsage;
}
