#include "mars/explanation.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "mars/evaluation.hpp"
#include "num_format.hpp"

namespace mars {

namespace {

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

std::string join_scores(const std::vector<double>& scores) {
  std::string out;
  for (double score : scores) {
    if (!out.empty()) out += ", ";
    out += detail::format_double(score);
  }
  return out;
}

}  // namespace

ExplanationTrace build_trace(const Scenario& s, ModelKind model) {
  auto core = ScenarioEvaluator::Core::from_scenario(s);
  auto strata = resolve_strata(s.stratification, s.values);
  ScenarioEvaluator evaluator(core, strata, model);

  ExplanationTrace trace;
  trace.scenario_name = s.name;
  trace.model = model;

  const std::size_t n = s.actions.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto outcome = evaluator.pair(i, j);
      ComparisonRecord record;
      record.first = s.actions[i];
      record.second = s.actions[j];
      record.outcome = outcome.outcome;
      record.deciding_stratum = outcome.deciding_stratum;
      if (outcome.deciding_value) record.deciding_value = s.values[*outcome.deciding_value];
      if (evaluator.has_score_vectors()) {
        record.left_scores = evaluator.scores_of(i);
        record.right_scores = evaluator.scores_of(j);
      }
      trace.records.push_back(std::move(record));
    }
  }

  if (model == ModelKind::StratumSatisfaction) {
    const auto& steps = evaluator.filter_survivors();
    for (std::size_t i = 0; i < steps.size(); ++i) {
      FilterStep step;
      step.stratum_index = static_cast<int>(i + 1);
      for (std::size_t a : steps[i]) step.survivors.push_back(s.actions[a]);
      trace.filter_steps.push_back(std::move(step));
    }
  }

  for (std::size_t a : evaluator.preferred_indices()) {
    trace.preferred.push_back(s.actions[a]);
  }
  return trace;
}

namespace {

std::string render_plain(const ExplanationTrace& trace) {
  std::ostringstream out;
  out << "scenario: " << trace.scenario_name << "\n";
  out << "model: " << model_kind_name(trace.model) << "\n";
  for (const FilterStep& step : trace.filter_steps) {
    out << "stratum " << step.stratum_index << " keeps: " << join_ids(step.survivors) << "\n";
  }
  for (const ComparisonRecord& record : trace.records) {
    out << record.first << " vs " << record.second << ": ";
    switch (record.outcome) {
      case Preference::FirstPreferred: out << "first preferred"; break;
      case Preference::SecondPreferred: out << "second preferred"; break;
      case Preference::Tie: out << "tie"; break;
    }
    if (record.left_scores && record.right_scores) {
      out << "; scores (" << join_scores(*record.left_scores) << ") vs ("
          << join_scores(*record.right_scores) << ")";
    }
    if (record.deciding_stratum) {
      if (trace.model == ModelKind::StratumSatisfaction) {
        const std::string& loser =
            record.outcome == Preference::FirstPreferred ? record.second : record.first;
        out << "; " << loser << " eliminated at stratum " << *record.deciding_stratum;
      } else {
        out << "; decided at stratum " << *record.deciding_stratum;
        if (record.deciding_value) out << " by value " << *record.deciding_value;
      }
    }
    out << "\n";
  }
  out << "preferred: " << join_ids(trace.preferred) << "\n";
  return out.str();
}

std::string render_structured(const ExplanationTrace& trace) {
  std::ostringstream out;
  out << "mars-trace/1\n";
  out << "scenario: " << trace.scenario_name << "\n";
  out << "model: " << model_kind_name(trace.model) << "\n";
  out << "pairs: " << trace.records.size() << "\n";
  for (const ComparisonRecord& record : trace.records) {
    out << "pair: " << record.first << ", " << record.second << "\n";
    out << "outcome: " << preference_name(record.outcome) << "\n";
    if (record.deciding_stratum) out << "deciding-stratum: " << *record.deciding_stratum << "\n";
    if (record.deciding_value) out << "deciding-value: " << *record.deciding_value << "\n";
    if (record.left_scores) out << "left-scores: " << join_scores(*record.left_scores) << "\n";
    if (record.right_scores) out << "right-scores: " << join_scores(*record.right_scores) << "\n";
  }
  if (trace.model == ModelKind::StratumSatisfaction) {
    out << "filters: " << trace.filter_steps.size() << "\n";
    for (const FilterStep& step : trace.filter_steps) {
      out << "filter: " << step.stratum_index << " | " << join_ids(step.survivors) << "\n";
    }
  }
  out << "preferred: " << join_ids(trace.preferred) << "\n";
  return out.str();
}

[[noreturn]] void malformed(const std::string& detail) {
  throw MarsError(ErrorKind::MalformedTrace, "malformed trace: " + detail);
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(", ", start);
    if (comma == std::string_view::npos) {
      out.emplace_back(text.substr(start));
      break;
    }
    out.emplace_back(text.substr(start, comma - start));
    start = comma + 2;
  }
  return out;
}

std::vector<double> parse_scores(std::string_view text) {
  std::vector<double> out;
  if (text.empty()) return out;
  for (const std::string& piece : split_list(text)) {
    auto value = detail::parse_double(piece);
    if (!value) malformed("bad score '" + piece + "'");
    out.push_back(*value);
  }
  return out;
}

// Splits "key: value" (value may be empty, in which case the line is just
// "key:").
bool split_line(std::string_view line, std::string_view& key, std::string_view& value) {
  std::size_t colon = line.find(':');
  if (colon == std::string_view::npos) return false;
  key = line.substr(0, colon);
  value = line.substr(colon + 1);
  if (!value.empty() && value.front() == ' ') value.remove_prefix(1);
  return true;
}

}  // namespace

std::string render_trace(const ExplanationTrace& trace, TraceFormat format) {
  return format == TraceFormat::Plain ? render_plain(trace) : render_structured(trace);
}

ExplanationTrace parse_trace(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }
  if (lines.empty() || lines[0] != "mars-trace/1") malformed("missing mars-trace/1 header");

  ExplanationTrace trace;
  std::size_t pos = 1;
  auto expect = [&](std::string_view key) -> std::string {
    if (pos >= lines.size()) malformed("unexpected end of trace; wanted '" + std::string(key) + "'");
    std::string_view k, v;
    if (!split_line(lines[pos], k, v) || k != key) {
      malformed("expected '" + std::string(key) + "' at line " + std::to_string(pos + 1));
    }
    ++pos;
    return std::string(v);
  };
  auto peek_key = [&]() -> std::string_view {
    if (pos >= lines.size()) return {};
    std::string_view k, v;
    if (!split_line(lines[pos], k, v)) malformed("bad line " + std::to_string(pos + 1));
    return k;
  };
  auto take_value = [&]() -> std::string {
    std::string_view k, v;
    split_line(lines[pos], k, v);
    ++pos;
    return std::string(v);
  };

  trace.scenario_name = expect("scenario");
  auto model = parse_model_kind(expect("model"));
  if (!model) malformed("unknown model kind");
  trace.model = *model;

  std::string pair_count_text = expect("pairs");
  auto pair_count = detail::parse_double(pair_count_text);
  if (!pair_count || *pair_count < 0 || *pair_count != static_cast<std::size_t>(*pair_count)) {
    malformed("bad pair count '" + pair_count_text + "'");
  }

  for (std::size_t i = 0; i < static_cast<std::size_t>(*pair_count); ++i) {
    ComparisonRecord record;
    auto ids = split_list(expect("pair"));
    if (ids.size() != 2) malformed("pair line must name two actions");
    record.first = ids[0];
    record.second = ids[1];
    auto outcome = parse_preference(expect("outcome"));
    if (!outcome) malformed("unknown outcome");
    record.outcome = *outcome;
    while (true) {
      std::string_view key = peek_key();
      if (key == "deciding-stratum") {
        auto v = detail::parse_double(take_value());
        if (!v) malformed("bad deciding-stratum");
        record.deciding_stratum = static_cast<int>(*v);
      } else if (key == "deciding-value") {
        record.deciding_value = take_value();
      } else if (key == "left-scores") {
        record.left_scores = parse_scores(take_value());
      } else if (key == "right-scores") {
        record.right_scores = parse_scores(take_value());
      } else {
        break;
      }
    }
    trace.records.push_back(std::move(record));
  }

  if (peek_key() == "filters") {
    auto filter_count = detail::parse_double(take_value());
    if (!filter_count || *filter_count < 0) malformed("bad filter count");
    for (std::size_t i = 0; i < static_cast<std::size_t>(*filter_count); ++i) {
      std::string value = expect("filter");
      std::size_t bar = value.find(" | ");
      FilterStep step;
      std::string index_text;
      if (bar == std::string::npos) {
        // A stratum can leave no survivors listed only when the action set
        // is empty, which valid scenarios exclude; accept "N |" anyway.
        std::size_t tail = value.rfind(" |");
        if (tail == std::string::npos || tail + 2 != value.size()) {
          malformed("filter line must be '<stratum> | <survivors>'");
        }
        index_text = value.substr(0, tail);
      } else {
        index_text = value.substr(0, bar);
        step.survivors = split_list(std::string_view(value).substr(bar + 3));
      }
      auto index = detail::parse_double(index_text);
      if (!index) malformed("bad filter stratum index");
      step.stratum_index = static_cast<int>(*index);
      trace.filter_steps.push_back(std::move(step));
    }
  }

  std::string preferred = expect("preferred");
  if (!preferred.empty()) trace.preferred = split_list(preferred);
  if (pos != lines.size()) malformed("trailing content after preferred set");
  return trace;
}

}  // namespace mars
