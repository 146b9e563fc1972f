#include "sexakit/corpus.hpp"

#include "sexakit/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace sexakit {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

struct ParamSpec {
  std::vector<std::string> required_params;
  std::vector<std::string> optional_params;
  std::vector<std::pair<std::string, Dimension>> givens;
};

const ParamSpec& param_spec(Procedure p) {
  static const ParamSpec quadratic{
      {"A", "B", "C"},
      {"excess", "excess_share", "depth_factor"},
      {{"V", Dimension::VolumeSar}}};
  static const ParamSpec rect{{"diff", "rhs"}, {"depth_factor", "thirteenth"}, {}};
  static const ParamSpec labor{{"reach"},
                               {"constant"},
                               {{"total_water", Dimension::VolumeSar},
                                {"workers", Dimension::WorkerCount},
                                {"y", Dimension::LengthNindan}}};
  switch (p) {
    case Procedure::Quadratic: return quadratic;
    case Procedure::RectCanalSystem: return rect;
    case Procedure::LaborDepth: return labor;
  }
  return quadratic;
}

bool contains(const std::vector<std::string>& v, std::string_view s) {
  for (const auto& e : v) {
    if (e == s) return true;
  }
  return false;
}

class CorpusParser {
 public:
  explicit CorpusParser(std::string_view text) : text_(text) {}

  std::vector<TabletProblem> run() {
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no_;
      parse_line(text_.substr(pos, end - pos));
      pos = end + 1;
    }
    finish_problem();
    return std::move(problems_);
  }

 private:
  [[noreturn]] void fail(std::size_t column, const std::string& msg,
                         ErrorKind kind = ErrorKind::CorpusParseError) const {
    throw CorpusError(kind, line_no_, column, msg);
  }

  Sexa literal(const Token& tok) const {
    try {
      return Sexa::parse(tok.text);
    } catch (const Error& e) {
      fail(tok.column, e.what(), ErrorKind::BadLiteral);
    }
  }

  void expect_equals(const std::vector<Token>& toks, std::size_t i) const {
    if (toks[i].text != "=") fail(toks[i].column, "expected '='");
  }

  TabletProblem& current(const Token& tok) {
    if (!current_) fail(tok.column, "field outside a [problem] record");
    return *current_;
  }

  void parse_line(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (static_cast<unsigned char>(line[i]) > 0x7f) fail(i + 1, "non-ASCII byte");
    }
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<Token> toks = tokenize(line);
    if (toks.empty()) return;

    const Token& head = toks[0];
    if (head.text.front() == '[') {
      header(toks);
    } else if (head.text == "procedure") {
      if (toks.size() != 3) fail(head.column, "expected 'procedure = <name>'");
      expect_equals(toks, 1);
      TabletProblem& p = current(head);
      auto proc = procedure_from_name(toks[2].text);
      if (!proc) {
        fail(toks[2].column, "unknown procedure '" + std::string(toks[2].text) + "'",
             ErrorKind::UnknownProcedure);
      }
      p.procedure = *proc;
      has_procedure_ = true;
    } else if (head.text == "given") {
      if (toks.size() != 5) fail(head.column, "expected 'given <name> = <literal> <unit>'");
      expect_equals(toks, 2);
      TabletProblem& p = current(head);
      Quantity q = quantity(toks[3], toks[4]);
      given_lines_[std::string(toks[1].text)] = {line_no_, toks[1].column};
      if (!p.givens.emplace(std::string(toks[1].text), q).second) {
        fail(toks[1].column, "duplicate given '" + std::string(toks[1].text) + "'");
      }
    } else if (head.text == "param") {
      if (toks.size() != 4) fail(head.column, "expected 'param <name> = <literal>'");
      expect_equals(toks, 2);
      TabletProblem& p = current(head);
      param_lines_[std::string(toks[1].text)] = {line_no_, toks[1].column};
      if (!p.params.emplace(std::string(toks[1].text), literal(toks[3])).second) {
        fail(toks[1].column, "duplicate param '" + std::string(toks[1].text) + "'");
      }
    } else if (head.text == "expect") {
      expect(toks);
    } else {
      fail(head.column, "unknown field '" + std::string(head.text) + "'");
    }
  }

  Quantity quantity(const Token& lit, const Token& unit) const {
    Sexa value = literal(lit);
    try {
      return Quantity::with_unit(value, unit.text);
    } catch (const Error& e) {
      fail(unit.column, e.what());
    }
  }

  void header(const std::vector<Token>& toks) {
    const Token& head = toks[0];
    if (toks.size() != 2 || head.text != "[problem" || toks[1].text.size() < 2 ||
        toks[1].text.back() != ']') {
      fail(head.column, "expected '[problem <id>]'");
    }
    finish_problem();
    std::string id(toks[1].text.substr(0, toks[1].text.size() - 1));
    if (!seen_ids_.insert(id).second) fail(toks[1].column, "duplicate problem '" + id + "'");
    current_ = TabletProblem{};
    current_->id = std::move(id);
    current_->source_line = line_no_;
    has_procedure_ = false;
    given_lines_.clear();
    param_lines_.clear();
  }

  void expect(const std::vector<Token>& toks) {
    const Token& head = toks[0];
    TabletProblem& p = current(head);
    if (toks.size() >= 2 && toks[1].text == "step") {
      if (toks.size() != 7 || toks[5].text != "@") {
        fail(head.column, "expected 'expect step <label> = <literal> @ <line-tag>'");
      }
      expect_equals(toks, 3);
      ExpectedStep s;
      s.label = toks[2].text;
      s.value = literal(toks[4]);
      s.literal = toks[4].text;
      s.line_tag = toks[6].text;
      s.source_line = line_no_;
      if (s.line_tag.back() == '?') {
        s.uncertain = true;
        s.line_tag.pop_back();
      }
      for (const auto& e : p.expected_steps) {
        if (e.label == s.label) fail(toks[2].column, "duplicate step '" + s.label + "'");
      }
      step_columns_.push_back(toks[2].column);
      p.expected_steps.push_back(std::move(s));
    } else if (toks.size() >= 2 && toks[1].text == "answer") {
      if (toks.size() != 6) fail(head.column, "expected 'expect answer <name> = <literal> <unit>'");
      expect_equals(toks, 3);
      ExpectedAnswer a{std::string(toks[2].text), quantity(toks[4], toks[5])};
      for (const auto& e : p.expected_answers) {
        if (e.name == a.name) fail(toks[2].column, "duplicate answer '" + a.name + "'");
      }
      answer_lines_.push_back({line_no_, toks[2].column});
      p.expected_answers.push_back(std::move(a));
    } else {
      fail(head.column, "expected 'expect step' or 'expect answer'");
    }
  }

  // Schema checks run once the whole record is read.
  void finish_problem() {
    if (!current_) return;
    TabletProblem& p = *current_;
    auto fail_at = [&](std::pair<std::size_t, std::size_t> where, const std::string& msg) {
      throw CorpusError(ErrorKind::CorpusParseError, where.first, where.second,
                        "problem " + p.id + ": " + msg);
    };
    if (!has_procedure_) fail_at({p.source_line, 1}, "missing 'procedure'");

    const ParamSpec& spec = param_spec(p.procedure);
    for (const auto& name : spec.required_params) {
      if (!p.params.count(name)) fail_at({p.source_line, 1}, "missing param '" + name + "'");
    }
    for (const auto& [name, value] : p.params) {
      if (!contains(spec.required_params, name) && !contains(spec.optional_params, name)) {
        fail_at(param_lines_[name], "unknown param '" + name + "'");
      }
    }
    for (const auto& [name, dim] : spec.givens) {
      auto it = p.givens.find(name);
      if (it == p.givens.end()) fail_at({p.source_line, 1}, "missing given '" + name + "'");
      if (it->second.dim != dim) {
        fail_at(given_lines_[name], "given '" + name + "' must be in " +
                                        std::string(unit_name(dim)));
      }
    }
    for (const auto& [name, q] : p.givens) {
      bool known = false;
      for (const auto& g : spec.givens) known = known || g.first == name;
      if (!known) fail_at(given_lines_[name], "unknown given '" + name + "'");
    }
    const auto& labels = trace_schema(p.procedure);
    for (std::size_t i = 0; i < p.expected_steps.size(); ++i) {
      const ExpectedStep& s = p.expected_steps[i];
      if (!contains(labels, s.label)) {
        fail_at({s.source_line, step_columns_[i]},
                "label '" + s.label + "' is not produced by " +
                    std::string(procedure_name(p.procedure)));
      }
    }
    const auto& answers = answer_schema(p.procedure);
    for (std::size_t i = 0; i < p.expected_answers.size(); ++i) {
      if (!contains(answers, p.expected_answers[i].name)) {
        fail_at(answer_lines_[i], "unknown answer '" + p.expected_answers[i].name + "'");
      }
    }
    problems_.push_back(std::move(p));
    current_.reset();
    step_columns_.clear();
    answer_lines_.clear();
    given_lines_.clear();
    param_lines_.clear();
  }

  std::string_view text_;
  std::size_t line_no_ = 0;
  std::vector<TabletProblem> problems_;
  std::optional<TabletProblem> current_;
  bool has_procedure_ = false;
  std::set<std::string> seen_ids_;
  std::map<std::string, std::pair<std::size_t, std::size_t>> given_lines_;
  std::map<std::string, std::pair<std::size_t, std::size_t>> param_lines_;
  std::vector<std::size_t> step_columns_;
  std::vector<std::pair<std::size_t, std::size_t>> answer_lines_;
};

}  // namespace

std::string_view procedure_name(Procedure p) noexcept {
  switch (p) {
    case Procedure::Quadratic: return "quadratic";
    case Procedure::RectCanalSystem: return "rect-canal-system";
    case Procedure::LaborDepth: return "labor-depth";
  }
  return "?";
}

std::optional<Procedure> procedure_from_name(std::string_view name) noexcept {
  for (Procedure p : {Procedure::Quadratic, Procedure::RectCanalSystem, Procedure::LaborDepth}) {
    if (procedure_name(p) == name) return p;
  }
  return std::nullopt;
}

const std::vector<std::string>& trace_schema(Procedure p) {
  static const std::vector<std::string> quadratic{
      "half_B", "half_B_sq", "AC", "radicand", "root", "root_plus", "recip_A",
      "u", "half_u", "v", "breadth_excess", "excess_share", "depth_base", "z",
      "breadth_sum", "half_breadth_sum", "S", "recip_S", "x"};
  static const std::vector<std::string> rect{
      "rhs_scaled", "diff_sq", "reduced_rhs", "recip_diff", "recip_depth_factor",
      "recip_z", "scaled_rhs", "diff_sq_term", "net_rhs", "thirteenth_recip_z",
      "two_recip_z", "linear_extra", "three_thirteenth", "xy_coeff", "xy",
      "half_diff", "half_diff_sq", "radicand", "root", "x", "y"};
  static const std::vector<std::string> labor{
      "recip_reach", "water_per_length", "recip_workers", "water_per_worker",
      "recip_constant", "cross_section", "recip_breadth", "z", "z_water"};
  switch (p) {
    case Procedure::Quadratic: return quadratic;
    case Procedure::RectCanalSystem: return rect;
    case Procedure::LaborDepth: return labor;
  }
  return quadratic;
}

const std::vector<std::string>& answer_schema(Procedure p) {
  static const std::vector<std::string> quadratic{"u", "v", "z", "S", "x"};
  static const std::vector<std::string> rect{"x", "y", "z"};
  static const std::vector<std::string> labor{"z_water", "z"};
  switch (p) {
    case Procedure::Quadratic: return quadratic;
    case Procedure::RectCanalSystem: return rect;
    case Procedure::LaborDepth: return labor;
  }
  return quadratic;
}

const Sexa& TabletProblem::param(std::string_view name) const {
  auto it = params.find(std::string(name));
  if (it == params.end()) throw std::out_of_range("no param '" + std::string(name) + "'");
  return it->second;
}

const Quantity& TabletProblem::given(std::string_view name) const {
  auto it = givens.find(std::string(name));
  if (it == givens.end()) throw std::out_of_range("no given '" + std::string(name) + "'");
  return it->second;
}

std::vector<TabletProblem> parse_corpus(std::string_view text) {
  return CorpusParser(text).run();
}

std::vector<TabletProblem> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CorpusError(ErrorKind::CorpusParseError, 0, 0,
                      "cannot open corpus '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

}  // namespace sexakit
