#include "mars/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "num_format.hpp"

namespace mars {

std::string_view parse_error_kind_name(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Syntax: return "syntax";
    case ParseErrorKind::DuplicateId: return "duplicate-id";
    case ParseErrorKind::UnknownReference: return "unknown-reference";
    case ParseErrorKind::BadCoefficient: return "bad-coefficient";
    case ParseErrorKind::BadWeight: return "bad-weight";
    case ParseErrorKind::PartitionViolation: return "partition-violation";
  }
  return "syntax";
}

namespace {

enum class TokenKind { Ident, Number, String, Colon, Comma, Equals, Minus };

struct Token {
  TokenKind kind;
  std::string text;   // String: decoded value; others: raw lexeme
  SourceSpan span;
};

struct Line {
  int number = 0;
  std::string text;  // without the newline
  std::vector<Token> tokens;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParseResult run();

 private:
  // lexing
  void split_lines();
  void lex_line(Line& line);

  // statement collection
  void collect(const Line& line);
  void parse_scenario_line(const Line& line);
  void parse_actions_line(const Line& line);
  void parse_values_line(const Line& line);
  void parse_stratum_line(const Line& line);
  void parse_impact_line(const Line& line);
  void parse_weight_line(const Line& line);
  void parse_model_line(const Line& line);

  // shared token helpers
  bool expect(const Line& line, std::size_t& pos, TokenKind kind, const char* what);
  std::vector<std::pair<std::string, SourceSpan>> parse_id_list(const Line& line,
                                                                std::size_t& pos,
                                                                bool allow_empty);
  void expect_line_end(const Line& line, std::size_t pos);
  SourceSpan end_span(const Line& line) const;

  void error(SourceSpan span, ParseErrorKind kind, std::string message) {
    errors_.push_back({span, kind, std::move(message)});
  }

  // semantic assembly
  void resolve();

  std::string_view text_;
  std::vector<Line> lines_;
  std::vector<ParseError> errors_;
  std::vector<std::string> warnings_;

  struct IdToken {
    std::string id;
    SourceSpan span;
  };
  struct StratumDecl {
    long index = 0;
    SourceSpan index_span;
    std::vector<IdToken> members;
  };
  struct ImpactAssign {
    IdToken value;
    int coefficient = 0;
  };
  struct ImpactDecl {
    IdToken action;
    std::vector<ImpactAssign> assigns;
  };
  struct WeightDecl {
    IdToken value;
    double weight = 1.0;
  };

  std::optional<std::pair<std::string, SourceSpan>> scenario_name_;
  std::optional<std::vector<IdToken>> actions_;
  SourceSpan actions_span_;
  std::optional<std::vector<IdToken>> values_;
  std::vector<StratumDecl> strata_;
  std::vector<ImpactDecl> impacts_;
  std::vector<WeightDecl> weights_;
  std::optional<std::pair<ModelKind, SourceSpan>> model_;

  Scenario scenario_;
};

void Parser::split_lines() {
  int number = 1;
  std::size_t start = 0;
  while (start <= text_.size()) {
    std::size_t end = text_.find('\n', start);
    std::string_view raw = end == std::string_view::npos
                               ? text_.substr(start)
                               : text_.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    lines_.push_back({number, std::string(raw), {}});
    ++number;
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
}

void Parser::lex_line(Line& line) {
  const std::string& s = line.text;
  std::size_t i = 0;
  auto span_from = [&](std::size_t begin, std::size_t length) {
    return SourceSpan{line.number, static_cast<int>(begin + 1),
                      static_cast<int>(std::max<std::size_t>(length, 1))};
  };
  auto is_ident_head = [](char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  };
  auto is_ident_tail = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)); };

  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    if (c == '#') break;  // comment to end of line
    std::size_t begin = i;
    if (is_ident_head(c)) {
      while (i < s.size() && is_ident_tail(s[i])) ++i;
      line.tokens.push_back(
          {TokenKind::Ident, s.substr(begin, i - begin), span_from(begin, i - begin)});
      continue;
    }
    if (is_digit(c) || ((c == '+' || c == '-') && i + 1 < s.size() && is_digit(s[i + 1]))) {
      ++i;
      while (i < s.size() && is_digit(s[i])) ++i;
      if (i + 1 < s.size() && s[i] == '.' && is_digit(s[i + 1])) {
        ++i;
        while (i < s.size() && is_digit(s[i])) ++i;
      }
      if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::size_t mark = i + 1;
        if (mark < s.size() && (s[mark] == '+' || s[mark] == '-')) ++mark;
        if (mark < s.size() && is_digit(s[mark])) {
          i = mark;
          while (i < s.size() && is_digit(s[i])) ++i;
        }
      }
      line.tokens.push_back(
          {TokenKind::Number, s.substr(begin, i - begin), span_from(begin, i - begin)});
      continue;
    }
    if (c == '"') {
      ++i;
      std::string decoded;
      bool closed = false;
      while (i < s.size()) {
        if (s[i] == '\\' && i + 1 < s.size() && (s[i + 1] == '"' || s[i + 1] == '\\')) {
          decoded += s[i + 1];
          i += 2;
          continue;
        }
        if (s[i] == '"') {
          closed = true;
          ++i;
          break;
        }
        decoded += s[i];
        ++i;
      }
      if (!closed) {
        error(span_from(begin, s.size() - begin), ParseErrorKind::Syntax,
              "unterminated string literal");
        return;
      }
      line.tokens.push_back({TokenKind::String, decoded, span_from(begin, i - begin)});
      continue;
    }
    TokenKind kind;
    switch (c) {
      case ':': kind = TokenKind::Colon; break;
      case ',': kind = TokenKind::Comma; break;
      case '=': kind = TokenKind::Equals; break;
      case '-': kind = TokenKind::Minus; break;
      default:
        error(span_from(begin, 1), ParseErrorKind::Syntax,
              std::string("unexpected character '") + c + "'");
        ++i;
        continue;
    }
    line.tokens.push_back({kind, s.substr(begin, 1), span_from(begin, 1)});
    ++i;
  }
}

SourceSpan Parser::end_span(const Line& line) const {
  return {line.number, static_cast<int>(line.text.size() + 1), 1};
}

bool Parser::expect(const Line& line, std::size_t& pos, TokenKind kind, const char* what) {
  if (pos >= line.tokens.size()) {
    error(end_span(line), ParseErrorKind::Syntax, std::string("expected ") + what);
    return false;
  }
  if (line.tokens[pos].kind != kind) {
    error(line.tokens[pos].span, ParseErrorKind::Syntax,
          std::string("expected ") + what + ", found '" + line.tokens[pos].text + "'");
    return false;
  }
  ++pos;
  return true;
}

std::vector<std::pair<std::string, SourceSpan>> Parser::parse_id_list(const Line& line,
                                                                      std::size_t& pos,
                                                                      bool allow_empty) {
  std::vector<std::pair<std::string, SourceSpan>> ids;
  if (pos >= line.tokens.size()) {
    if (!allow_empty) {
      error(end_span(line), ParseErrorKind::Syntax, "expected at least one identifier");
    }
    return ids;
  }
  while (true) {
    if (pos >= line.tokens.size() || line.tokens[pos].kind != TokenKind::Ident) {
      SourceSpan span = pos < line.tokens.size() ? line.tokens[pos].span : end_span(line);
      error(span, ParseErrorKind::Syntax, "expected identifier");
      return ids;
    }
    ids.emplace_back(line.tokens[pos].text, line.tokens[pos].span);
    ++pos;
    if (pos >= line.tokens.size()) return ids;
    if (line.tokens[pos].kind != TokenKind::Comma) {
      error(line.tokens[pos].span, ParseErrorKind::Syntax,
            "expected ',' between identifiers, found '" + line.tokens[pos].text + "'");
      return ids;
    }
    ++pos;
  }
}

void Parser::expect_line_end(const Line& line, std::size_t pos) {
  if (pos < line.tokens.size()) {
    error(line.tokens[pos].span, ParseErrorKind::Syntax,
          "unexpected trailing '" + line.tokens[pos].text + "'");
  }
}

void Parser::parse_scenario_line(const Line& line) {
  std::size_t pos = 1;
  if (scenario_name_) {
    error(line.tokens[0].span, ParseErrorKind::Syntax, "duplicate 'scenario' line");
    return;
  }
  if (pos >= line.tokens.size() || line.tokens[pos].kind != TokenKind::String) {
    SourceSpan span = pos < line.tokens.size() ? line.tokens[pos].span : end_span(line);
    error(span, ParseErrorKind::Syntax, "expected quoted scenario name");
    return;
  }
  scenario_name_ = {line.tokens[pos].text, line.tokens[pos].span};
  expect_line_end(line, pos + 1);
}

void Parser::parse_actions_line(const Line& line) {
  std::size_t pos = 1;
  if (actions_) {
    error(line.tokens[0].span, ParseErrorKind::Syntax, "duplicate 'actions' section");
    return;
  }
  actions_span_ = line.tokens[0].span;
  if (!expect(line, pos, TokenKind::Colon, "':' after 'actions'")) return;
  auto ids = parse_id_list(line, pos, false);
  actions_ = std::vector<IdToken>{};
  for (auto& [id, span] : ids) actions_->push_back({std::move(id), span});
}

void Parser::parse_values_line(const Line& line) {
  std::size_t pos = 1;
  if (values_) {
    error(line.tokens[0].span, ParseErrorKind::Syntax, "duplicate 'values' section");
    return;
  }
  if (!expect(line, pos, TokenKind::Colon, "':' after 'values'")) return;
  auto ids = parse_id_list(line, pos, true);
  values_ = std::vector<IdToken>{};
  for (auto& [id, span] : ids) values_->push_back({std::move(id), span});
}

void Parser::parse_stratum_line(const Line& line) {
  std::size_t pos = 1;
  StratumDecl decl;
  if (pos >= line.tokens.size() || line.tokens[pos].kind != TokenKind::Number) {
    SourceSpan span = pos < line.tokens.size() ? line.tokens[pos].span : end_span(line);
    error(span, ParseErrorKind::Syntax, "expected stratum index after 'stratum'");
    return;
  }
  const Token& index_token = line.tokens[pos];
  bool plain_digits = std::all_of(index_token.text.begin(), index_token.text.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
  long index = plain_digits ? std::strtol(index_token.text.c_str(), nullptr, 10) : 0;
  if (!plain_digits || index < 1) {
    error(index_token.span, ParseErrorKind::Syntax,
          "stratum index must be a positive integer, found '" + index_token.text + "'");
    return;
  }
  decl.index = index;
  decl.index_span = index_token.span;
  ++pos;
  if (!expect(line, pos, TokenKind::Colon, "':' after the stratum index")) return;
  auto ids = parse_id_list(line, pos, false);
  for (auto& [id, span] : ids) decl.members.push_back({std::move(id), span});
  if (!decl.members.empty()) strata_.push_back(std::move(decl));
}

void Parser::parse_impact_line(const Line& line) {
  std::size_t pos = 1;
  ImpactDecl decl;
  if (pos >= line.tokens.size() || line.tokens[pos].kind != TokenKind::Ident) {
    SourceSpan span = pos < line.tokens.size() ? line.tokens[pos].span : end_span(line);
    error(span, ParseErrorKind::Syntax, "expected action identifier after 'impact'");
    return;
  }
  decl.action = {line.tokens[pos].text, line.tokens[pos].span};
  ++pos;
  if (!expect(line, pos, TokenKind::Colon, "':' after the action")) return;
  bool first = true;
  while (true) {
    if (!first) {
      if (pos >= line.tokens.size()) break;
      if (line.tokens[pos].kind != TokenKind::Comma) {
        error(line.tokens[pos].span, ParseErrorKind::Syntax,
              "expected ',' between impact entries, found '" + line.tokens[pos].text + "'");
        return;
      }
      ++pos;
    }
    first = false;
    if (pos >= line.tokens.size() || line.tokens[pos].kind != TokenKind::Ident) {
      SourceSpan span = pos < line.tokens.size() ? line.tokens[pos].span : end_span(line);
      error(span, ParseErrorKind::Syntax, "expected value identifier");
      return;
    }
    ImpactAssign assign;
    assign.value = {line.tokens[pos].text, line.tokens[pos].span};
    ++pos;
    if (!expect(line, pos, TokenKind::Equals, "'=' after the value")) return;
    if (pos >= line.tokens.size() || line.tokens[pos].kind != TokenKind::Number) {
      SourceSpan span = pos < line.tokens.size() ? line.tokens[pos].span : end_span(line);
      error(span, ParseErrorKind::Syntax, "expected impact coefficient");
      return;
    }
    const Token& coeff = line.tokens[pos];
    bool integer_form =
        coeff.text.find('.') == std::string::npos &&
        coeff.text.find('e') == std::string::npos && coeff.text.find('E') == std::string::npos;
    long value = integer_form ? std::strtol(coeff.text.c_str(), nullptr, 10) : 99;
    if (!integer_form || value < -1 || value > 1) {
      error(coeff.span, ParseErrorKind::BadCoefficient,
            "impact coefficient must be -1, 0 or +1, found '" + coeff.text + "'");
      ++pos;
      continue;
    }
    assign.coefficient = static_cast<int>(value);
    decl.assigns.push_back(std::move(assign));
    ++pos;
  }
  impacts_.push_back(std::move(decl));
}

void Parser::parse_weight_line(const Line& line) {
  std::size_t pos = 1;
  WeightDecl decl;
  if (pos >= line.tokens.size() || line.tokens[pos].kind != TokenKind::Ident) {
    SourceSpan span = pos < line.tokens.size() ? line.tokens[pos].span : end_span(line);
    error(span, ParseErrorKind::Syntax, "expected value identifier after 'weight'");
    return;
  }
  decl.value = {line.tokens[pos].text, line.tokens[pos].span};
  ++pos;
  if (!expect(line, pos, TokenKind::Equals, "'=' after the value")) return;
  if (pos >= line.tokens.size() || line.tokens[pos].kind != TokenKind::Number) {
    SourceSpan span = pos < line.tokens.size() ? line.tokens[pos].span : end_span(line);
    error(span, ParseErrorKind::Syntax, "expected weight");
    return;
  }
  const Token& number = line.tokens[pos];
  auto parsed = detail::parse_double(number.text);
  if (!parsed || !std::isfinite(*parsed) || !(*parsed > 0.0)) {
    error(number.span, ParseErrorKind::BadWeight,
          "weight must be a positive real, found '" + number.text + "'");
    return;
  }
  decl.weight = *parsed;
  ++pos;
  expect_line_end(line, pos);
  weights_.push_back(std::move(decl));
}

void Parser::parse_model_line(const Line& line) {
  std::size_t pos = 1;
  if (model_) {
    error(line.tokens[0].span, ParseErrorKind::Syntax, "duplicate 'model' line");
    return;
  }
  if (!expect(line, pos, TokenKind::Colon, "':' after 'model'")) return;
  // Model names are kebab-case: idents joined by '-'.
  if (pos >= line.tokens.size() || line.tokens[pos].kind != TokenKind::Ident) {
    SourceSpan span = pos < line.tokens.size() ? line.tokens[pos].span : end_span(line);
    error(span, ParseErrorKind::Syntax, "expected model name");
    return;
  }
  std::string name = line.tokens[pos].text;
  SourceSpan span = line.tokens[pos].span;
  ++pos;
  while (pos + 1 < line.tokens.size() && line.tokens[pos].kind == TokenKind::Minus &&
         line.tokens[pos + 1].kind == TokenKind::Ident) {
    name += "-" + line.tokens[pos + 1].text;
    span.length = line.tokens[pos + 1].span.column + line.tokens[pos + 1].span.length -
                  span.column;
    pos += 2;
  }
  expect_line_end(line, pos);
  auto kind = parse_model_kind(name);
  if (!kind) {
    error(span, ParseErrorKind::Syntax, "unknown model '" + name + "'");
    return;
  }
  model_ = {*kind, span};
}

void Parser::collect(const Line& line) {
  if (line.tokens.empty()) return;
  const Token& head = line.tokens[0];
  if (head.kind != TokenKind::Ident) {
    error(head.span, ParseErrorKind::Syntax,
          "expected a statement keyword, found '" + head.text + "'");
    return;
  }
  if (head.text == "scenario") return parse_scenario_line(line);
  if (head.text == "actions") return parse_actions_line(line);
  if (head.text == "values") return parse_values_line(line);
  if (head.text == "stratum") return parse_stratum_line(line);
  if (head.text == "impact") return parse_impact_line(line);
  if (head.text == "weight") return parse_weight_line(line);
  if (head.text == "model") return parse_model_line(line);
  error(head.span, ParseErrorKind::Syntax, "unknown statement '" + head.text + "'");
}

void Parser::resolve() {
  SourceSpan file_start{1, 1, 1};
  if (!scenario_name_) {
    error(file_start, ParseErrorKind::Syntax, "missing 'scenario \"...\"' line");
  } else {
    scenario_.name = scenario_name_->first;
  }
  if (!actions_) {
    error(file_start, ParseErrorKind::Syntax, "missing 'actions:' section");
  } else if (actions_->empty()) {
    error(actions_span_, ParseErrorKind::Syntax, "a scenario needs at least one action");
  }
  if (!values_) {
    error(file_start, ParseErrorKind::Syntax, "missing 'values:' section");
  }

  std::unordered_set<std::string> action_set;
  if (actions_) {
    for (const IdToken& action : *actions_) {
      if (!action_set.insert(action.id).second) {
        error(action.span, ParseErrorKind::DuplicateId,
              "action '" + action.id + "' declared more than once");
        continue;
      }
      scenario_.actions.push_back(action.id);
    }
  }
  std::unordered_set<std::string> value_set;
  if (values_) {
    for (const IdToken& value : *values_) {
      if (!value_set.insert(value.id).second) {
        error(value.span, ParseErrorKind::DuplicateId,
              "value '" + value.id + "' declared more than once");
        continue;
      }
      scenario_.values.push_back(value.id);
    }
  }

  // Stratum indices must be exactly 1..k. Anything in range and
  // duplicate-free with the right count is necessarily consecutive.
  std::stable_sort(strata_.begin(), strata_.end(),
                   [](const StratumDecl& a, const StratumDecl& b) { return a.index < b.index; });
  const long stratum_lines = static_cast<long>(strata_.size());
  std::unordered_set<long> seen_indices;
  for (const StratumDecl& decl : strata_) {
    if (decl.index > stratum_lines) {
      error(decl.index_span, ParseErrorKind::Syntax,
            "stratum indices must be consecutive from 1; index " +
                std::to_string(decl.index) + " leaves a gap");
    } else if (!seen_indices.insert(decl.index).second) {
      error(decl.index_span, ParseErrorKind::DuplicateId,
            "stratum " + std::to_string(decl.index) + " declared more than once");
    }
  }

  // Partition checks over the declared cells.
  std::unordered_map<std::string, std::vector<SourceSpan>> placements;
  for (const StratumDecl& decl : strata_) {
    std::vector<ValueId> cell;
    for (const IdToken& member : decl.members) {
      if (!value_set.count(member.id)) {
        error(member.span, ParseErrorKind::UnknownReference,
              "stratum " + std::to_string(decl.index) + " names undeclared value '" +
                  member.id + "'");
        continue;
      }
      placements[member.id].push_back(member.span);
      cell.push_back(member.id);
    }
    if (!cell.empty()) scenario_.stratification.strata.push_back(std::move(cell));
  }
  for (const auto& [value, spans] : placements) {
    if (spans.size() > 1) {
      for (const SourceSpan& span : spans) {
        error(span, ParseErrorKind::PartitionViolation,
              "value '" + value + "' is assigned to more than one stratum");
      }
    }
  }
  if (values_) {
    for (const IdToken& value : *values_) {
      if (value_set.count(value.id) && !placements.count(value.id)) {
        error(value.span, ParseErrorKind::PartitionViolation,
              "value '" + value.id + "' is not assigned to any stratum");
      }
    }
  }

  std::unordered_set<std::string> impact_pairs;
  for (const ImpactDecl& decl : impacts_) {
    bool known_action = action_set.count(decl.action.id) != 0;
    if (!known_action) {
      error(decl.action.span, ParseErrorKind::UnknownReference,
            "impact line names undeclared action '" + decl.action.id + "'");
    }
    for (const ImpactAssign& assign : decl.assigns) {
      if (!value_set.count(assign.value.id)) {
        error(assign.value.span, ParseErrorKind::UnknownReference,
              "impact entry names undeclared value '" + assign.value.id + "'");
        continue;
      }
      if (!known_action) continue;
      if (!impact_pairs.insert(decl.action.id + "\x1f" + assign.value.id).second) {
        error(assign.value.span, ParseErrorKind::DuplicateId,
              "impact of '" + decl.action.id + "' on '" + assign.value.id +
                  "' given more than once");
        continue;
      }
      if (assign.coefficient != 0) {
        scenario_.impacts.set(decl.action.id, assign.value.id, assign.coefficient);
      }
    }
  }

  std::unordered_set<std::string> weighted;
  for (const WeightDecl& decl : weights_) {
    if (!value_set.count(decl.value.id)) {
      error(decl.value.span, ParseErrorKind::UnknownReference,
            "weight line names undeclared value '" + decl.value.id + "'");
      continue;
    }
    if (!weighted.insert(decl.value.id).second) {
      error(decl.value.span, ParseErrorKind::DuplicateId,
            "weight of '" + decl.value.id + "' given more than once");
      continue;
    }
    scenario_.weights.entries[decl.value.id] = decl.weight;
  }

  scenario_.default_model = model_ ? model_->first : ModelKind::Additive;

  if (errors_.empty() && scenario_.values.empty()) {
    warnings_.push_back(
        "scenario declares no values; every action ties and all are preferred");
  }
}

ParseResult Parser::run() {
  split_lines();
  for (Line& line : lines_) {
    lex_line(line);
    collect(line);
  }
  resolve();

  ParseResult result;
  result.warnings = std::move(warnings_);
  if (errors_.empty()) {
    result.scenario = std::move(scenario_);
  } else {
    std::sort(errors_.begin(), errors_.end(), [](const ParseError& a, const ParseError& b) {
      return std::tie(a.span.line, a.span.column) < std::tie(b.span.line, b.span.column);
    });
    result.errors = std::move(errors_);
  }
  return result;
}

}  // namespace

ParseResult parse_scenario(std::string_view text) { return Parser(text).run(); }

namespace {

std::string escape_name(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream out;
  out << "scenario \"" << escape_name(s.name) << "\"\n";
  out << "actions:";
  for (std::size_t i = 0; i < s.actions.size(); ++i) {
    out << (i == 0 ? " " : ", ") << s.actions[i];
  }
  out << "\n";
  out << "values:";
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    out << (i == 0 ? " " : ", ") << s.values[i];
  }
  out << "\n";
  for (std::size_t i = 0; i < s.stratification.strata.size(); ++i) {
    out << "stratum " << i + 1 << ":";
    const auto& cell = s.stratification.strata[i];
    for (std::size_t j = 0; j < cell.size(); ++j) {
      out << (j == 0 ? " " : ", ") << cell[j];
    }
    out << "\n";
  }
  for (const ActionId& action : s.actions) {
    std::string entries;
    for (const ValueId& value : s.values) {
      int coefficient = s.impacts.coefficient(action, value);
      if (coefficient == 0) continue;
      if (!entries.empty()) entries += ", ";
      entries += value + "=" + (coefficient > 0 ? "+1" : "-1");
    }
    if (!entries.empty()) out << "impact " << action << ": " << entries << "\n";
  }
  for (const ValueId& value : s.values) {
    double weight = s.weights.of(value);
    if (weight != 1.0) {
      out << "weight " << value << "=" << detail::format_double(weight) << "\n";
    }
  }
  out << "model: " << model_kind_name(s.default_model) << "\n";
  return out.str();
}

}  // namespace mars
