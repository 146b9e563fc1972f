#include "sexakit/procedures.hpp"

#include "sexakit/errors.hpp"

#include <stdexcept>

namespace sexakit {

QuadraticSolution solve_quadratic_scribal(const QuadraticProblem& p) {
  if (p.a.sign() <= 0) {
    throw Error(ErrorKind::MalformedProblem,
                "leading coefficient " + p.a.render_or_fraction() + " must be positive");
  }
  QuadraticSolution out;
  StepTrace& t = out.trace;
  Sexa half_b = t.record("half_B", halve(p.b));
  Sexa half_b_sq = t.record("half_B_sq", square(half_b));
  Sexa ac = t.record("AC", p.a * p.c);
  Sexa radicand = t.record("radicand", half_b_sq + ac);
  Sexa root = t.record("root", sqrt_exact(radicand));
  Sexa root_plus = t.record("root_plus", root + half_b);
  Sexa recip_a = t.record("recip_A", reciprocal(p.a));
  out.root = t.record("u", recip_a * root_plus);

  if (p.a * square(out.root) - p.b * out.root != p.c) {
    throw std::logic_error("quadratic root fails back-substitution");
  }
  return out;
}

SumDifferenceSolution solve_sum_difference(const SumDifferenceProblem& p) {
  if (p.diff.sign() < 0) {
    throw Error(ErrorKind::MalformedProblem,
                "difference " + p.diff.render_or_fraction() + " is negative");
  }
  SumDifferenceSolution out;
  StepTrace& t = out.trace;
  Sexa half_diff = t.record("half_diff", halve(p.diff));
  Sexa half_diff_sq = t.record("half_diff_sq", square(half_diff));
  Sexa radicand = t.record("radicand", half_diff_sq + p.prod);
  Sexa root = t.record("root", sqrt_exact(radicand));
  out.x = t.record("x", root + half_diff);
  out.y = t.record("y", root - half_diff);

  if (out.x - out.y != p.diff || out.x * out.y != p.prod) {
    throw std::logic_error("sum-difference solution fails back-substitution");
  }
  return out;
}

Sexa divide_by_recognition(const Sexa& n, const Sexa& d) {
  if (d.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by 0");
  Sexa q = n * exact_inverse(d);
  if (!q.terminates()) {
    throw Error(ErrorKind::NoFiniteQuotient,
                n.render_or_fraction() + " / " + d.render_or_fraction() + " = " +
                    q.render_fraction() + " does not terminate");
  }
  return q;
}

Sexa apply_identity_sum_of_squares(const Sexa& diff, const Sexa& prod) {
  return square(diff) + Sexa(2) * prod;
}

std::string_view step_alias(std::string_view label) noexcept {
  if (label == "half_B") return "takiltum";
  if (label == "recip_A") return "igi of the false area";
  if (label == "root") return "ib-si";
  return {};
}

}  // namespace sexakit
