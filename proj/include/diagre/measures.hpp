#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "diagre/rewrite.hpp"
#include "diagre/term.hpp"

namespace diagre {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// D(t) = 2 + max |defect(g)| over the generators occurring in t
/// (2 when there are none). Preserved by every rewrite step.
int big_d(const TermPtr& t);

// The four termination quantities. beta and gamma grow exponentially in
// the parallel depth, hence the arbitrary-precision integers; delta is
// kept as an exact rational (denominator a power of D) so decrease
// bounds like 1/D are decidable.
BigInt alpha_measure(const TermPtr& t);
BigInt beta_measure(const TermPtr& t);
BigInt gamma_measure(const TermPtr& t);
BigRat delta_measure(const TermPtr& t, int d_param);

struct MeasureTuple {
  BigInt alpha;
  BigInt beta;
  BigInt gamma;
  BigRat delta;
  int d_param = 2;
};

/// All four quantities of `t`; D is taken from big_d(t). In perm mode
/// named generators are rejected (SymmetryError).
MeasureTuple measure_tuple(const TermPtr& t, Mode mode);

/// Lexicographic strict order of the mode's termination measure:
/// (beta, delta) in pro mode, (alpha, beta, gamma, delta) in perm mode.
/// Throws MeasureError when the D parameters differ.
bool lex_less(const MeasureTuple& a, const MeasureTuple& b, Mode mode);

/// Outcome of checking one rewrite step against the per-rule
/// decrease/preserve pattern. `before`/`after` are the measures of the
/// redex (the subterm at the step's position), where the granularity
/// bounds hold exactly; the whole-term lexicographic decrease is checked
/// as well.
struct DecreaseReport {
  RuleId rule;
  MeasureTuple before;
  MeasureTuple after;
  bool ok = false;
  std::string detail;  // empty when ok
};

/// Checks the exact pattern for the step's rule:
///   R1-R9    decrease beta (alpha preserved in perm mode);
///   R10/R11  preserve beta, decrease delta by at least 1/D;
///   R12-R14, R17-R20 decrease alpha;
///   R15/R16  preserve alpha and beta, decrease gamma;
///   R21/R22  preserve alpha, beta, gamma, decrease delta by >= 1/2;
/// plus D-invariance and the whole-term lexicographic decrease.
DecreaseReport verify_decrease(const RewriteStep& step, Mode mode);

/// "R10 α:a→a' β:b→b' γ:c→c' δ:x→x' [OK|FAIL]"
std::string report_line(const DecreaseReport& r);

}  // namespace diagre
