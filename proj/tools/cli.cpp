#include "cli.hpp"

#include "sexakit/corpus.hpp"
#include "sexakit/errors.hpp"
#include "sexakit/expr.hpp"
#include "sexakit/geometry.hpp"
#include "sexakit/procedures.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace sexakit::cli {

namespace {

struct Options {
  bool json = false;
  bool trace = false;
  bool recognize = false;
  bool oracle = false;
  bool all = false;
  std::string corpus;
  std::string constant = "0;48";
  std::vector<std::string> positional;
  std::string problem_id;
};

class Output {
 public:
  Output(std::ostream& out, const Options& opt) : out_(out), opt_(opt) {}

  void field(const std::string& name, const std::string& value) {
    if (opt_.json) {
      doc_[name] = value;
    } else {
      out_ << name << " = " << value << "\n";
    }
  }
  void bare(const std::string& name, const std::string& value) {
    if (opt_.json) {
      doc_[name] = value;
    } else {
      out_ << value << "\n";
    }
  }
  void trace(const StepTrace& t) {
    if (!opt_.trace) return;
    if (opt_.json) {
      doc_["trace"] = t.to_json();
      return;
    }
    for (const TraceStep& s : t.steps()) {
      out_ << "  " << s.label << " = " << s.value.render_or_fraction();
      if (s.dim) out_ << " " << unit_name(*s.dim);
      if (auto alias = step_alias(s.label); !alias.empty()) out_ << "  (" << alias << ")";
      out_ << "\n";
    }
  }
  nlohmann::json& doc() { return doc_; }
  void flush() {
    if (opt_.json) out_ << doc_.dump(2) << "\n";
  }

 private:
  std::ostream& out_;
  const Options& opt_;
  nlohmann::json doc_ = nlohmann::json::object();
};

Sexa literal_arg(const std::string& s) { return Sexa::parse(s); }

std::vector<TabletProblem> open_corpus(const Options& opt) {
  if (!opt.corpus.empty()) return load_corpus(opt.corpus);
  if (const char* env = std::getenv("SEXAKIT_CORPUS"); env != nullptr && *env != '\0') {
    return load_corpus(env);
  }
  return parse_corpus(bundled_corpus_text());
}

int cmd_eval(const Options& opt, Output& o) {
  if (opt.recognize && opt.oracle) {
    throw Error(ErrorKind::ExpressionSyntax, "--recognize and --oracle are exclusive");
  }
  DivisionMode mode = opt.oracle      ? DivisionMode::Oracle
                      : opt.recognize ? DivisionMode::Recognize
                                      : DivisionMode::Scribal;
  Sexa v = evaluate(opt.positional.at(0), mode);
  // Unrestricted division may leave a non-terminating value; show it as a
  // fraction there and nowhere else.
  o.bare("value", opt.oracle ? v.render_or_fraction() : v.render());
  return kExitOk;
}

int cmd_replay(const Options& opt, std::ostream& out, Output& o) {
  std::vector<TabletProblem> problems = open_corpus(opt);
  std::sort(problems.begin(), problems.end(),
            [](const TabletProblem& a, const TabletProblem& b) { return a.id < b.id; });
  if (!opt.all) {
    if (opt.problem_id.empty()) {
      throw Error(ErrorKind::UnknownProblem, "give a problem id or --all");
    }
    auto it = std::find_if(problems.begin(), problems.end(),
                           [&](const TabletProblem& p) { return p.id == opt.problem_id; });
    if (it == problems.end()) {
      throw Error(ErrorKind::UnknownProblem, "'" + opt.problem_id + "'");
    }
    problems = {*it};
  }
  std::size_t passed = 0;
  nlohmann::json reports = nlohmann::json::array();
  for (const TabletProblem& p : problems) {
    ReplayReport r = replay(p);
    passed += r.passed;
    if (opt.json) {
      reports.push_back(r.to_json());
    } else {
      if (opt.trace) out << r.trace.to_text();
      out << r.to_text();
    }
  }
  bool ok = passed == problems.size();
  if (opt.json) {
    o.doc()["problems"] = std::move(reports);
    o.doc()["passed"] = ok;
  } else if (opt.all) {
    out << problems.size() << " problems, " << passed << " passed\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

Quantity volume_arg(const std::string& s) {
  if (s.find(' ') == std::string::npos) return volume_sar(literal_arg(s));
  Quantity q = Quantity::parse(s);
  require_dim(q, Dimension::VolumeSar, "total water");
  return q;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact sexagesimal arithmetic and scribal procedures", "sexakit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "structured JSON output");
  app.add_flag("--trace", opt.trace, "print intermediate steps");

  auto* eval = app.add_subcommand("eval", "evaluate an expression");
  eval->add_option("expr", opt.positional, "infix expression")->required()->expected(1);
  auto* recognize = eval->add_flag("--recognize", opt.recognize,
                                   "divide by recognizing the quotient");
  eval->add_flag("--oracle", opt.oracle, "unrestricted exact division")->excludes(recognize);

  auto* recip = app.add_subcommand("recip", "reciprocal of a regular number");
  recip->add_option("n", opt.positional)->required()->expected(1);

  auto* sqrt = app.add_subcommand("sqrt", "exact square root");
  sqrt->add_option("x", opt.positional)->required()->expected(1);

  auto* quad = app.add_subcommand("solve-quadratic", "solve A u^2 - B u = C");
  quad->add_option("coefficients", opt.positional, "A B C")->required()->expected(3);

  auto* sumdiff = app.add_subcommand("sum-diff", "x, y from x - y and x y");
  sumdiff->add_option("values", opt.positional, "DIFF PROD")->required()->expected(2);

  auto* geom = app.add_subcommand("geom", "canal geometry");
  geom->require_subcommand(1);
  auto* trap = geom->add_subcommand("trapezoid", "cross-section from U V (nindan), Z (kus)");
  trap->add_option("values", opt.positional, "U V Z")->required()->expected(3);
  auto* vol = geom->add_subcommand("volume", "volume from S (nindan-kus), X (nindan)");
  vol->add_option("values", opt.positional, "S X")->required()->expected(2);
  auto* labor = geom->add_subcommand("labor-depth", "depth from reserved water and labor");
  labor->add_option("values", opt.positional, "TOTAL REACH WORKERS Y")
      ->required()
      ->expected(4);
  labor->add_option("--constant", opt.constant, "canal constant")->capture_default_str();

  auto* rep = app.add_subcommand("replay", "replay corpus problems");
  rep->add_option("id", opt.problem_id, "problem id");
  rep->add_flag("--all", opt.all, "replay every problem");
  rep->add_option("--corpus", opt.corpus, "corpus file (default: $SEXAKIT_CORPUS, else bundled)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  Output o(out, opt);
  try {
    int status = kExitOk;
    const auto& p = opt.positional;
    if (eval->parsed()) {
      status = cmd_eval(opt, o);
    } else if (recip->parsed()) {
      o.bare("value", reciprocal(literal_arg(p[0])).render());
    } else if (sqrt->parsed()) {
      o.bare("value", sqrt_exact(literal_arg(p[0])).render());
    } else if (quad->parsed()) {
      QuadraticSolution s = solve_quadratic_scribal(
          {literal_arg(p[0]), literal_arg(p[1]), literal_arg(p[2])});
      o.trace(s.trace);
      o.field("u", s.root.render_or_fraction());
    } else if (sumdiff->parsed()) {
      SumDifferenceSolution s = solve_sum_difference({literal_arg(p[0]), literal_arg(p[1])});
      o.trace(s.trace);
      o.field("x", s.x.render_or_fraction());
      o.field("y", s.y.render_or_fraction());
    } else if (trap->parsed()) {
      Quantity s = trapezoid_cross_section(nindan(literal_arg(p[0])), nindan(literal_arg(p[1])),
                                           kus(literal_arg(p[2])));
      o.field("S", s.to_string());
    } else if (vol->parsed()) {
      Quantity v = prism_volume(nindan_kus(literal_arg(p[0])), nindan(literal_arg(p[1])));
      o.field("V", v.to_string());
    } else if (labor->parsed()) {
      LaborDepthResult r =
          depth_from_labor(volume_arg(p[0]), literal_arg(p[1]), workers(literal_arg(p[2])),
                           nindan(literal_arg(p[3])), CanalConstant(literal_arg(opt.constant)));
      o.trace(r.trace);
      o.field("z", r.depth.to_string());
      o.field("z_water", r.water_depth.to_string());
    } else if (rep->parsed()) {
      status = cmd_replay(opt, out, o);
    }
    o.flush();
    return status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.kind()) ? kExitInput : kExitMath;
  } catch (const std::logic_error& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitMismatch;
  }
}

}  // namespace sexakit::cli
