// Scribal algorithms: completing the square, sum-difference recovery and
// division by recognition. Each returns its answer together with the trace
// of intermediate values in the order the scribe computes them.

#pragma once

#include "sexakit/sexa.hpp"
#include "sexakit/trace.hpp"

#include <string_view>

namespace sexakit {

/// A*u^2 - B*u = C. A is the "false area" the equation is scaled by.
struct QuadraticProblem {
  Sexa a;
  Sexa b;
  Sexa c;
};

struct QuadraticSolution {
  Sexa root;
  StepTrace trace;
};

/// Completing the square after scaling by A:
///   (A u)^2 - B (A u) = A C
///   (A u - B/2)^2 = (B/2)^2 + A C
///   u = (B/2 + sqrt((B/2)^2 + A C)) / A
/// Only the additive root is taken. Trace labels, in order: half_B,
/// half_B_sq, AC, radicand, root, root_plus, recip_A, u.
///
/// Throws MalformedProblem (A <= 0), NegativeRadicand, NotAPerfectSquare,
/// IrregularDivisorError (A irregular).
QuadraticSolution solve_quadratic_scribal(const QuadraticProblem& p);

/// x - y = diff, x * y = prod.
struct SumDifferenceProblem {
  Sexa diff;
  Sexa prod;
};

struct SumDifferenceSolution {
  Sexa x;
  Sexa y;
  StepTrace trace;
};

/// (x + y)/2 = sqrt(((x - y)/2)^2 + xy); x and y are the half-sum plus and
/// minus the half-difference. Trace labels: half_diff, half_diff_sq,
/// radicand, root, x, y.
///
/// Throws MalformedProblem (diff < 0), NegativeRadicand, NotAPerfectSquare.
SumDifferenceSolution solve_sum_difference(const SumDifferenceProblem& p);

/// The q with q * d == n, found without a reciprocal of d: the scribe reads
/// the quotient off (46;30 is six times 7;45). d may be irregular; the
/// quotient must terminate. Throws ZeroDivisor or NoFiniteQuotient.
Sexa divide_by_recognition(const Sexa& n, const Sexa& d);

/// x^2 + y^2 = (x - y)^2 + 2xy, from the difference and the product.
Sexa apply_identity_sum_of_squares(const Sexa& diff, const Sexa& prod);

/// Akkadian term for a step label, or empty.
std::string_view step_alias(std::string_view label) noexcept;

}  // namespace sexakit
