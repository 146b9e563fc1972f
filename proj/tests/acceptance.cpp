// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "cli.hpp"
#include "sexakit/corpus.hpp"
#include "sexakit/geometry.hpp"
#include "sexakit/procedures.hpp"
#include "sexakit/units.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace sexakit;
using namespace sexakit::literals;

namespace {

// Collects failed checks for one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ = failed_ || !ok;
  }
  bool ok() const { return !failed_; }
  std::string detail() const {
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + f;
    return out;
  }

 private:
  bool failed_ = false;
  std::vector<std::string> failures_;
};

template <typename F>
std::optional<ErrorKind> kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

const TabletProblem& bundled(const std::string& id) {
  static const std::vector<TabletProblem> problems = parse_corpus(bundled_corpus_text());
  auto it = std::find_if(problems.begin(), problems.end(),
                         [&](const TabletProblem& p) { return p.id == id; });
  if (it == problems.end()) throw std::runtime_error("no bundled problem " + id);
  return *it;
}

// The trace must contain exactly `expected`, as a subsequence in this order.
void expect_chain(Checker& c, const StepTrace& trace,
                  const std::vector<std::pair<std::string, std::string>>& expected) {
  std::size_t pos = 0;
  const auto& steps = trace.steps();
  for (const auto& [label, literal] : expected) {
    while (pos < steps.size() && steps[pos].label != label) ++pos;
    if (pos == steps.size()) {
      c.expect(false, label + " missing or out of order");
      return;
    }
    c.expect(steps[pos].value == Sexa::parse(literal),
             label + " = " + steps[pos].value.render_or_fraction() + ", want " + literal);
    ++pos;
  }
}

void expect_report_passes(Checker& c, const ReplayReport& r, std::size_t steps) {
  c.expect(r.passed, r.problem_id + " replay did not pass");
  c.expect(r.mismatches() == 0 && r.missing() == 0, r.problem_id + " has mismatches");
  c.expect(r.steps.size() == steps, r.problem_id + " checked too few steps");
}

Checker criterion_smt24_p1() {
  Checker c;
  ReplayReport r = replay(bundled("smt24.p1"));
  expect_report_passes(c, r, 18);
  expect_chain(c, r.trace,
               {{"half_B", "34;41,15"},
                {"half_B_sq", "20,3;13,21,33,45"},
                {"AC", "1,5;55,4,41,15"},
                {"radicand", "21,9;8,26,15"},
                {"root", "35;37,30"},
                {"root_plus", "1,10;18,45"},
                {"u", "5"},
                {"v", "3"},
                {"z", "8"},
                {"S", "32"},
                {"x", "45"}});
  QuadraticSolution direct =
      solve_quadratic_scribal({"14;3,45"_sx, "1,9;22,30"_sx, "4;41,15"_sx});
  c.expect(direct.root == Sexa(5), "direct solve gives u != 5");
  return c;
}

Checker criterion_smt24_p2() {
  Checker c;
  ReplayReport r = replay(bundled("smt24.p2"));
  expect_report_passes(c, r, 21);
  expect_chain(c, r.trace,
               {{"rhs_scaled", "16;15"},
                {"diff_sq", "0;1,40"},
                {"reduced_rhs", "16;13,20"},
                {"recip_z", "0;30"},
                {"scaled_rhs", "8;6,40"},
                {"diff_sq_term", "0;21,40"},
                {"net_rhs", "7;45"},
                {"thirteenth_recip_z", "6;30"},
                {"two_recip_z", "1"},
                {"linear_extra", "7;30"},
                {"three_thirteenth", "39"},
                {"xy_coeff", "46;30"},
                {"xy", "0;10"},
                {"half_diff", "0;5"},
                {"half_diff_sq", "0;0,25"},
                {"radicand", "0;10,25"},
                {"root", "0;25"},
                {"x", "0;30"},
                {"y", "0;20"}});
  RectCanalSolution s = solve_rect_canal_system({"0;10"_sx, 12, 13, "1;15"_sx});
  Sexa sum_sq = s.x * s.x + s.y * s.y;
  c.expect(s.x - s.y == "0;10"_sx, "x - y != 0;10");
  c.expect(s.z == Sexa(12) * (s.x - s.y), "z != 12 (x - y)");
  c.expect(s.z * sum_sq + s.x * s.y * (s.z + Sexa(1)) + oracle::quotient(sum_sq, 13) ==
               "1;15"_sx,
           "sum equation fails");
  return c;
}

Checker criterion_smt25() {
  Checker c;
  ReplayReport r = replay(bundled("smt25.p1"));
  expect_report_passes(c, r, 9);
  expect_chain(c, r.trace,
               {{"recip_reach", "0;12"},
                {"water_per_length", "1,12,0"},
                {"recip_workers", "0;0,1,30"},
                {"water_per_worker", "1;48"},
                {"recip_constant", "1;15"},
                {"cross_section", "2;15"},
                {"recip_breadth", "2"},
                {"z", "4;30"},
                {"z_water", "3;36"}});
  LaborDepthResult d = depth_from_labor(sar_to_volume_sar(6, VolumeUnit::Sar60), 5,
                                        workers("40,0"_sx), nindan("0;30"_sx));
  c.expect(d.depth == kus("4;30"_sx), "z != 4;30 kus");
  c.expect(d.water_depth == kus("3;36"_sx), "z' != 3;36 kus");
  return c;
}

Checker criterion_reciprocals() {
  Checker c;
  const std::vector<std::pair<std::string, std::string>> table = {
      {"5", "0;12"},         {"45", "0;1,20"}, {"32", "0;1,52,30"}, {"40,0", "0;0,1,30"},
      {"0;48", "1;15"},      {"0;10", "6"},    {"12", "0;5"}};
  for (const auto& [n, r] : table) {
    std::string got = reciprocal(Sexa::parse(n)).render();
    c.expect(got == r, "recip(" + n + ") = " + got);
  }
  return c;
}

Checker criterion_properties() {
  Checker c;
  constexpr int kCases = 1000;
  oracle::Gen gen(0xacce97);

  for (int i = 0; i < kCases; ++i) {
    Sexa x = gen.regular();
    c.expect(x * reciprocal(x) == Sexa(1), "reciprocal * self != 1 for " + x.render());
  }
  for (int i = 0; i < kCases; ++i) {
    Sexa x = gen.rational();
    c.expect(sqrt_exact(square(x)) == abs(x), "sqrt(square(x)) != |x|");
  }
  for (int i = 0; i < kCases; ++i) {
    Sexa x = gen.terminating();
    c.expect(Sexa::parse(x.render()) == x, "parse(render(x)) != x");
    std::string s = x.render();
    c.expect(Sexa::parse(s).render() == s, "render(parse(s)) != s for " + s);
  }
  for (int i = 0; i < kCases; ++i) {
    Sexa a = gen.regular(4, false);
    Sexa b = gen.terminating();
    Sexa u = gen.terminating();
    Sexa cc = a * u * u - b * u;
    auto oracle_root = oracle::quadratic_formula(a, b, cc);
    c.expect(oracle_root && solve_quadratic_scribal({a, b, cc}).root == *oracle_root,
             "scribal quadratic disagrees with the formula");
  }
  for (int i = 0; i < kCases; ++i) {
    Sexa y = abs(gen.terminating());
    Sexa x = y + abs(gen.terminating());
    SumDifferenceSolution s = solve_sum_difference({x - y, x * y});
    c.expect(s.x == x && s.y == y, "sum-difference did not recover x, y");
    c.expect(s.x - s.y == x - y && s.x * s.y == x * y, "sum-difference identities fail");
  }
  for (int i = 0; i < kCases; ++i) {
    Quantity s = nindan_kus(gen.regular(5, false));
    Quantity len = nindan(abs(gen.terminating()) + Sexa(1, 60));
    c.expect(length_from_volume(prism_volume(s, len), s) == len, "prism inversion fails");
  }
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    c.expect(is_regular(Sexa(static_cast<std::int64_t>(n))) == oracle::smooth_by_factoring(n),
             "is_regular wrong for " + std::to_string(n));
  }
  return c;
}

Checker criterion_error_paths() {
  Checker c;
  c.expect(kind_of([] { reciprocal(13); }) == ErrorKind::IrregularDivisor,
           "recip(13) not IrregularDivisor");
  c.expect(kind_of([] { sqrt_exact(2); }) == ErrorKind::NotAPerfectSquare,
           "sqrt(2) not NotAPerfectSquare");
  c.expect(kind_of([] { Sexa(1, 7).render(); }) == ErrorKind::NonTerminating,
           "render(1/7) not NonTerminating");
  c.expect(kind_of([] {
             parse_corpus("[problem t]\nprocedure = quadratic\nparam A = 61\n");
           }) == ErrorKind::BadLiteral,
           "corpus literal 61 not BadLiteral");

  auto exit_code = [](std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    return cli::run(args, out, err);
  };
  auto dir = std::filesystem::temp_directory_path() / "sexakit_acceptance";
  std::filesystem::create_directories(dir);
  std::string text(bundled_corpus_text());
  text.replace(text.find("expect step z = 4;30"), 20, "expect step z = 4;31");
  auto tampered = dir / "tampered.corpus";
  std::ofstream(tampered) << text;

  c.expect(exit_code({"replay", "--all"}) == cli::kExitOk, "replay --all did not exit 0");
  c.expect(exit_code({"replay", "--all", "--corpus", tampered.string()}) ==
               cli::kExitMismatch,
           "tampered replay did not exit 1");
  c.expect(exit_code({"replay", "nosuch"}) == cli::kExitInput, "replay nosuch did not exit 2");
  c.expect(exit_code({"eval", "1;60"}) == cli::kExitInput, "bad literal did not exit 2");
  c.expect(exit_code({"sqrt", "2"}) == cli::kExitMath, "sqrt 2 did not exit 3");
  c.expect(exit_code({"recip", "13"}) == cli::kExitMath, "recip 13 did not exit 3");
  std::filesystem::remove_all(dir);
  return c;
}

Checker criterion_dimensions() {
  Checker c;
  c.expect(qmul(nindan("0;30"_sx), kus("4;30"_sx)) == nindan_kus("2;15"_sx),
           "0;30 nindan x 4;30 kus != 2;15 nindan-kus");
  c.expect(qmul(nindan(45), nindan_kus(32)) == volume_sar("24,0"_sx),
           "45 nindan x 32 nindan-kus != 24,0 volume-sar");
  c.expect(kind_of([] { qadd(nindan(1), kus(1)); }) == ErrorKind::DimensionMismatch,
           "nindan + kus not DimensionMismatch");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Checker()>>> criteria = {
      {"1 smt24.p1 replay and solver chain", criterion_smt24_p1},
      {"2 smt24.p2 replay and back-substitution", criterion_smt24_p2},
      {"3 smt25.p1 replay", criterion_smt25},
      {"4 reciprocal table spot-checks", criterion_reciprocals},
      {"5 property suite", criterion_properties},
      {"6 error paths and CLI exit codes", criterion_error_paths},
      {"7 dimensional checks", criterion_dimensions},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Checker c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.expect(false, std::string("unexpected exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS " : "FAIL ") << name;
    if (!c.ok()) std::cout << ": " << c.detail();
    std::cout << "\n";
    failed += !c.ok();
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
