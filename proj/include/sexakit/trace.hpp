// Ordered record of the intermediate values a procedure produces, one entry
// per "you see N" of the worked solution.

#pragma once

#include "sexakit/sexa.hpp"
#include "sexakit/units.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sexakit {

struct TraceStep {
  std::string label;
  Sexa value;
  std::optional<Dimension> dim;
  /// Tablet line tag such as "obv.26", or "derived".
  std::string source;
};

class StepTrace {
 public:
  /// Appends a step; throws DuplicateLabel if `label` is already present.
  Sexa record(std::string label, Sexa value, std::string source = "derived");
  Sexa record(std::string label, const Quantity& value,
              std::string source = "derived");

  /// Replaces the source tag of `label`; false when the label is absent.
  bool set_source(std::string_view label, std::string source);

  /// Appends every step of `other`, in order, under the same uniqueness rule.
  void append(const StepTrace& other);

  const std::vector<TraceStep>& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }

  const TraceStep* find(std::string_view label) const;
  /// Value of `label`; throws std::out_of_range when absent.
  const Sexa& at(std::string_view label) const;

  /// One line per step: "<label> = <literal>[ <unit>]  [<source>]".
  std::string to_text() const;
  /// Array of {label, value, source[, unit]} objects.
  nlohmann::json to_json() const;

 private:
  std::vector<TraceStep> steps_;
};

}  // namespace sexakit
