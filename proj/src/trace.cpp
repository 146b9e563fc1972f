#include "sexakit/trace.hpp"

#include "sexakit/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace sexakit {

Sexa StepTrace::record(std::string label, Sexa value, std::string source) {
  if (find(label) != nullptr) {
    throw Error(ErrorKind::DuplicateLabel, "trace label '" + label + "'");
  }
  steps_.push_back({std::move(label), std::move(value), std::nullopt, std::move(source)});
  return steps_.back().value;
}

Sexa StepTrace::record(std::string label, const Quantity& value,
                       std::string source) {
  record(std::move(label), value.magnitude, std::move(source));
  steps_.back().dim = value.dim;
  return steps_.back().value;
}

void StepTrace::append(const StepTrace& other) {
  for (const TraceStep& s : other.steps_) {
    record(s.label, s.value, s.source);
    steps_.back().dim = s.dim;
  }
}

bool StepTrace::set_source(std::string_view label, std::string source) {
  for (TraceStep& s : steps_) {
    if (s.label == label) {
      s.source = std::move(source);
      return true;
    }
  }
  return false;
}

const TraceStep* StepTrace::find(std::string_view label) const {
  auto it = std::find_if(steps_.begin(), steps_.end(),
                         [&](const TraceStep& s) { return s.label == label; });
  return it == steps_.end() ? nullptr : &*it;
}

const Sexa& StepTrace::at(std::string_view label) const {
  const TraceStep* s = find(label);
  if (s == nullptr) throw std::out_of_range("no trace step '" + std::string(label) + "'");
  return s->value;
}

std::string StepTrace::to_text() const {
  std::string out;
  for (const TraceStep& s : steps_) {
    out += s.label + " = " + s.value.render_or_fraction();
    if (s.dim) out += " " + std::string(unit_name(*s.dim));
    out += "  [" + s.source + "]\n";
  }
  return out;
}

nlohmann::json StepTrace::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const TraceStep& s : steps_) {
    nlohmann::json step = {{"label", s.label},
                           {"value", s.value.render_or_fraction()},
                           {"source", s.source}};
    if (s.dim) step["unit"] = std::string(unit_name(*s.dim));
    out.push_back(std::move(step));
  }
  return out;
}

}  // namespace sexakit
