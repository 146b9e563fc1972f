// Tablet problems as data, and the replay engine that re-runs each worked
// solution and checks every intermediate value against the transcription.
//
// Corpus file format (line oriented, 7-bit ASCII, '#' starts a comment):
//
//   [problem smt24.p1]
//   procedure = quadratic
//   given V = 24,0 volume-sar
//   param A = 14;3,45
//   expect step half_B = 34;41,15 @ obv.26
//   expect answer u = 5 nindan
//
// A line tag ending in '?' marks a value the transcription flags as
// uncertain; it is still checked.

#pragma once

#include "sexakit/errors.hpp"
#include "sexakit/sexa.hpp"
#include "sexakit/trace.hpp"
#include "sexakit/units.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sexakit {

enum class Procedure { Quadratic, RectCanalSystem, LaborDepth };

std::string_view procedure_name(Procedure p) noexcept;
std::optional<Procedure> procedure_from_name(std::string_view name) noexcept;

/// Labels a procedure's trace may contain, in trace order.
const std::vector<std::string>& trace_schema(Procedure p);
/// Names of the answers a procedure reports.
const std::vector<std::string>& answer_schema(Procedure p);

struct ExpectedStep {
  std::string label;
  Sexa value;
  std::string literal;  // as written in the corpus
  std::string line_tag;
  bool uncertain = false;
  std::size_t source_line = 0;
};

struct ExpectedAnswer {
  std::string name;
  Quantity value;
};

struct TabletProblem {
  std::string id;
  Procedure procedure = Procedure::Quadratic;
  std::map<std::string, Quantity> givens;
  std::map<std::string, Sexa> params;
  std::vector<ExpectedStep> expected_steps;
  std::vector<ExpectedAnswer> expected_answers;
  std::size_t source_line = 0;

  /// Throws std::out_of_range when absent (validated problems have them).
  const Sexa& param(std::string_view name) const;
  const Quantity& given(std::string_view name) const;
};

/// Parses corpus text. Throws CorpusError (CorpusParseError,
/// UnknownProcedure or BadLiteral) with the 1-based line and column.
std::vector<TabletProblem> parse_corpus(std::string_view text);
std::vector<TabletProblem> load_corpus(const std::filesystem::path& path);

/// The corpus compiled into the library: smt24.p1, smt24.p2, smt25.p1.
std::string_view bundled_corpus_text() noexcept;

enum class StepStatus { Match, Mismatch, Missing };
std::string_view to_string(StepStatus s) noexcept;

struct StepOutcome {
  std::string label;
  StepStatus status = StepStatus::Missing;
  std::string expected;
  std::optional<std::string> got;
  std::string line_tag;
  bool uncertain = false;
};

struct AnswerOutcome {
  std::string name;
  StepStatus status = StepStatus::Missing;
  Quantity expected;
  std::optional<Quantity> got;
};

struct ReplayReport {
  std::string problem_id;
  std::vector<StepOutcome> steps;
  std::vector<AnswerOutcome> answers;
  StepTrace trace;
  bool passed = false;

  std::size_t mismatches() const;
  std::size_t missing() const;

  /// "<id> <label> <status> <expected> <got>" per step, then
  /// "<id> answer <name> = <expected> <unit> <status>" per answer.
  std::string to_text() const;
  nlohmann::json to_json() const;
};

/// Raised when a procedure fails during replay; keeps the kind of the
/// underlying error.
class ProcedureError : public Error {
 public:
  ProcedureError(const Error& cause, std::string problem_id, std::string stage);

  const std::string& problem_id() const noexcept { return problem_id_; }
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string problem_id_;
  std::string stage_;
};

/// Re-runs the problem's procedure and compares, by label and exactly,
/// every expected step and answer. Deterministic. Throws ProcedureError.
ReplayReport replay(const TabletProblem& problem);

/// Junction of two canals with square holes of sides x and y:
///   x - y = diff
///   z = depth_factor (x - y)
///   z (x^2 + y^2) + xy (z + 1) + (x^2 + y^2) / thirteenth = rhs
struct RectCanalSystem {
  Sexa diff;
  Sexa depth_factor = Sexa(12);
  Sexa thirteenth = Sexa(13);
  Sexa rhs;
};

struct RectCanalSolution {
  Sexa x;
  Sexa y;
  Sexa z;
  StepTrace trace;
};

/// Scribal reduction: scale the sum equation by `thirteenth`, replace
/// x^2 + y^2 by (x - y)^2 + 2xy, multiply through by 1/z leaving the
/// (x - y)^2 term unsimplified, read xy off by recognition, then recover x
/// and y by sum-difference. The answer is substituted back into all three
/// equations before returning. With diff = 0 the depth vanishes and xy
/// comes straight from the scaled sum.
///
/// Throws MalformedProblem, IrregularDivisorError, NoFiniteQuotient,
/// NotAPerfectSquare, NegativeRadicand.
RectCanalSolution solve_rect_canal_system(const RectCanalSystem& system);

}  // namespace sexakit
