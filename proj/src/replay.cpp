#include "sexakit/corpus.hpp"

#include "sexakit/errors.hpp"
#include "sexakit/geometry.hpp"
#include "sexakit/procedures.hpp"

#include <stdexcept>
#include <utility>

namespace sexakit {

namespace {

struct ProcedureRun {
  StepTrace trace;
  std::vector<std::pair<std::string, Quantity>> answers;
};

template <typename F>
auto stage(const TabletProblem& p, std::string_view name, F&& f) {
  try {
    return f();
  } catch (const ProcedureError&) {
    throw;
  } catch (const Error& e) {
    throw ProcedureError(e, p.id, std::string(name));
  }
}

Sexa param_or(const TabletProblem& p, std::string_view name, Sexa fallback) {
  auto it = p.params.find(std::string(name));
  return it == p.params.end() ? std::move(fallback) : it->second;
}

ProcedureRun run_quadratic(const TabletProblem& p) {
  ProcedureRun run;
  QuadraticSolution q = stage(p, "solve_quadratic_scribal", [&] {
    return solve_quadratic_scribal({p.param("A"), p.param("B"), p.param("C")});
  });
  run.trace.append(q.trace);
  const Sexa& u = q.root;

  BreadthConstraints k;
  k.excess = param_or(p, "excess", k.excess);
  k.excess_share = param_or(p, "excess_share", k.excess_share);
  k.depth_factor = param_or(p, "depth_factor", k.depth_factor);
  BreadthResult b = stage(p, "breadths_from_constraints",
                          [&] { return breadths_from_constraints(u, k); });
  run.trace.append(b.trace);

  // Verification: the section from the breadths and depth, then the length
  // back from the stated volume.
  const Quantity& volume = p.given("V");
  StepTrace& t = run.trace;
  Sexa sum = t.record("breadth_sum", nindan(u + b.v));
  Sexa half_sum = t.record("half_breadth_sum", nindan(halve(sum)));
  Quantity section = nindan_kus(t.record("S", nindan_kus(half_sum * b.z)));
  Sexa recip_s = stage(p, "verification", [&] { return reciprocal(section.magnitude); });
  t.record("recip_S", recip_s);
  Quantity length = nindan(t.record("x", nindan(recip_s * volume.magnitude)));

  Quantity section_check = stage(p, "verification", [&] {
    return trapezoid_cross_section(nindan(u), nindan(b.v), kus(b.z));
  });
  Quantity length_check =
      stage(p, "verification", [&] { return length_from_volume(volume, section_check); });
  if (section_check != section || length_check != length) {
    throw std::logic_error(p.id + ": verification chain disagrees with geometry");
  }

  run.answers = {{"u", nindan(u)},
                 {"v", nindan(b.v)},
                 {"z", kus(b.z)},
                 {"S", section},
                 {"x", length}};
  return run;
}

ProcedureRun run_rect_system(const TabletProblem& p) {
  RectCanalSystem sys;
  sys.diff = p.param("diff");
  sys.rhs = p.param("rhs");
  sys.depth_factor = param_or(p, "depth_factor", sys.depth_factor);
  sys.thirteenth = param_or(p, "thirteenth", sys.thirteenth);
  RectCanalSolution s =
      stage(p, "solve_rect_canal_system", [&] { return solve_rect_canal_system(sys); });
  ProcedureRun run;
  run.trace = std::move(s.trace);
  run.answers = {{"x", nindan(s.x)}, {"y", nindan(s.y)}, {"z", kus(s.z)}};
  return run;
}

ProcedureRun run_labor_depth(const TabletProblem& p) {
  LaborDepthResult r = stage(p, "depth_from_labor", [&] {
    CanalConstant c = p.params.count("constant") ? CanalConstant(p.param("constant"))
                                                 : CanalConstant();
    return depth_from_labor(p.given("total_water"), p.param("reach"), p.given("workers"),
                            p.given("y"), c);
  });
  ProcedureRun run;
  run.trace = std::move(r.trace);
  run.answers = {{"z_water", r.water_depth}, {"z", r.depth}};
  return run;
}

}  // namespace

ProcedureError::ProcedureError(const Error& cause, std::string problem_id, std::string stage)
    : Error(cause.kind(), problem_id + " at " + stage + ": " + cause.what()),
      problem_id_(std::move(problem_id)),
      stage_(std::move(stage)) {}

std::string_view to_string(StepStatus s) noexcept {
  switch (s) {
    case StepStatus::Match: return "MATCH";
    case StepStatus::Mismatch: return "MISMATCH";
    case StepStatus::Missing: return "MISSING";
  }
  return "?";
}

ReplayReport replay(const TabletProblem& problem) {
  ProcedureRun run;
  switch (problem.procedure) {
    case Procedure::Quadratic: run = run_quadratic(problem); break;
    case Procedure::RectCanalSystem: run = run_rect_system(problem); break;
    case Procedure::LaborDepth: run = run_labor_depth(problem); break;
  }

  ReplayReport report;
  report.problem_id = problem.id;
  for (const ExpectedStep& e : problem.expected_steps) {
    StepOutcome o;
    o.label = e.label;
    o.expected = e.literal;
    o.line_tag = e.line_tag;
    o.uncertain = e.uncertain;
    if (const TraceStep* got = run.trace.find(e.label)) {
      o.got = got->value.render_or_fraction();
      o.status = got->value == e.value ? StepStatus::Match : StepStatus::Mismatch;
      run.trace.set_source(e.label, e.line_tag + (e.uncertain ? "?" : ""));
    }
    report.steps.push_back(std::move(o));
  }
  for (const ExpectedAnswer& e : problem.expected_answers) {
    AnswerOutcome o;
    o.name = e.name;
    o.expected = e.value;
    for (const auto& [name, value] : run.answers) {
      if (name == e.name) {
        o.got = value;
        o.status = value == e.value ? StepStatus::Match : StepStatus::Mismatch;
      }
    }
    report.answers.push_back(std::move(o));
  }
  report.trace = std::move(run.trace);
  report.passed = report.mismatches() == 0 && report.missing() == 0;
  return report;
}

std::size_t ReplayReport::mismatches() const {
  std::size_t n = 0;
  for (const auto& s : steps) n += s.status == StepStatus::Mismatch;
  for (const auto& a : answers) n += a.status == StepStatus::Mismatch;
  return n;
}

std::size_t ReplayReport::missing() const {
  std::size_t n = 0;
  for (const auto& s : steps) n += s.status == StepStatus::Missing;
  for (const auto& a : answers) n += a.status == StepStatus::Missing;
  return n;
}

std::string ReplayReport::to_text() const {
  std::string out;
  for (const StepOutcome& s : steps) {
    out += problem_id + " " + s.label + " " + std::string(to_string(s.status)) + " " +
           s.expected + " " + s.got.value_or("-") + "\n";
  }
  for (const AnswerOutcome& a : answers) {
    out += problem_id + " answer " + a.name + " = " + a.expected.to_string() + " " +
           std::string(to_string(a.status));
    if (a.status == StepStatus::Mismatch) out += " (got " + a.got->to_string() + ")";
    out += "\n";
  }
  return out;
}

nlohmann::json ReplayReport::to_json() const {
  nlohmann::json j;
  j["problem"] = problem_id;
  j["passed"] = passed;
  j["steps"] = nlohmann::json::array();
  for (const StepOutcome& s : steps) {
    j["steps"].push_back({{"label", s.label},
                          {"status", to_string(s.status)},
                          {"expected", s.expected},
                          {"got", s.got ? nlohmann::json(*s.got) : nlohmann::json(nullptr)},
                          {"line", s.line_tag},
                          {"uncertain", s.uncertain}});
  }
  j["answers"] = nlohmann::json::array();
  for (const AnswerOutcome& a : answers) {
    j["answers"].push_back(
        {{"name", a.name},
         {"status", to_string(a.status)},
         {"expected", a.expected.to_string()},
         {"got", a.got ? nlohmann::json(a.got->to_string()) : nlohmann::json(nullptr)}});
  }
  j["trace"] = trace.to_json();
  return j;
}

RectCanalSolution solve_rect_canal_system(const RectCanalSystem& sys) {
  if (sys.diff.sign() < 0) {
    throw Error(ErrorKind::MalformedProblem,
                "difference " + sys.diff.render_or_fraction() + " is negative");
  }
  if (sys.thirteenth.sign() <= 0 || sys.depth_factor.sign() <= 0) {
    throw Error(ErrorKind::MalformedProblem, "coefficients must be positive");
  }
  const Sexa& t_coef = sys.thirteenth;
  RectCanalSolution out;
  StepTrace& t = out.trace;

  // Scaled by the thirteenth and with x^2 + y^2 = d^2 + 2xy:
  //   t z d^2 + 3t xyz + (t + 2) xy = t rhs - d^2
  Sexa rhs_scaled = t.record("rhs_scaled", t_coef * sys.rhs);
  Sexa diff_sq = t.record("diff_sq", square(sys.diff));
  Sexa reduced = t.record("reduced_rhs", rhs_scaled - diff_sq);

  Sexa xy;
  if (sys.diff.is_zero()) {
    // z = 0 leaves (t + 2) xy = t rhs.
    Sexa coeff = t.record("xy_coeff", t_coef + Sexa(2));
    xy = t.record("xy", divide_by_recognition(reduced, coeff));
  } else {
    // Times 1/z: t d^2 + 3t xy + (t + 2)(1/z) xy = (1/z)(t rhs - d^2)
    Sexa recip_diff = t.record("recip_diff", reciprocal(sys.diff));
    Sexa recip_factor = t.record("recip_depth_factor", reciprocal(sys.depth_factor));
    Sexa recip_z = t.record("recip_z", recip_factor * recip_diff);
    Sexa scaled = t.record("scaled_rhs", recip_z * reduced);
    Sexa sq_term = t.record("diff_sq_term", t_coef * diff_sq);
    Sexa net = t.record("net_rhs", scaled - sq_term);
    Sexa t_recip_z = t.record("thirteenth_recip_z", t_coef * recip_z);
    Sexa two_recip_z = t.record("two_recip_z", Sexa(2) * recip_z);
    Sexa extra = t.record("linear_extra", t_recip_z + two_recip_z);
    Sexa three_t = t.record("three_thirteenth", Sexa(3) * t_coef);
    Sexa coeff = t.record("xy_coeff", three_t + extra);
    xy = t.record("xy", divide_by_recognition(net, coeff));
  }

  SumDifferenceSolution sd = solve_sum_difference({sys.diff, xy});
  t.append(sd.trace);
  out.x = sd.x;
  out.y = sd.y;
  out.z = sys.depth_factor * sys.diff;

  Sexa sum_sq = square(out.x) + square(out.y);
  Sexa lhs = out.z * sum_sq + out.x * out.y * (out.z + Sexa(1)) +
             sum_sq * exact_inverse(t_coef);
  if (out.x - out.y != sys.diff || out.z != sys.depth_factor * (out.x - out.y) ||
      lhs != sys.rhs) {
    throw std::logic_error("canal system solution fails back-substitution");
  }
  return out;
}

}  // namespace sexakit
