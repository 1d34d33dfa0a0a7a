#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "diagre/rewrite.hpp"
#include "diagre/term.hpp"

namespace diagre {

/// A replayable certificate: the mode, the signature needed to re-type
/// the terms, and the run itself. Line format:
///
///   diagre-trace v1
///   mode: pro
///   gen: A 1 1
///   initial: <term>
///   step: R7 @0 <whole term after the step>
///   final: <term>
///
/// Positions are digit strings (0=SeqLeft 1=SeqRight 2=ParLeft
/// 3=ParRight) after `@`; bare `@` is the root. Positions are relative
/// to the pre-step term.
struct TraceDocument {
  Mode mode = Mode::Pro;
  Signature sig;
  RewriteTrace trace;
};

void write_trace(std::ostream& out, const RewriteTrace& trace, Mode mode,
                 const Signature& sig);

TraceDocument read_trace(std::istream& in);

struct TraceCheck {
  bool ok = false;
  std::vector<std::string> step_lines;  // one decrease report per step
  std::string failure;                  // empty when ok
};

/// Replays the document: every step must be a valid application of its
/// rule at its position with exactly the recorded result, every step
/// must pass verify_decrease, and the final term must match.
TraceCheck check_trace(const TraceDocument& doc);

}  // namespace diagre
