#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "diagre/rewrite.hpp"
#include "diagre/term.hpp"

namespace diagre {

/// Bounded exhaustive confluence / soundness checking. Every typed term
/// within the bounds is preprocessed and its full rewrite graph searched:
/// each term must reach exactly one irreducible form, equal to the
/// direct normal form (pro) or the canonical form of its interpretation
/// (perm); every edge must preserve typing (and the interpretation in
/// perm mode) and strictly decrease the termination measure.
struct OracleOptions {
  Mode mode = Mode::Perm;
  int max_atoms = 3;  // atoms = generator/identity/swap occurrences
  int max_wires = 4;  // bound on dom and cod of every enumerated subterm
  Signature sig;      // generators for pro mode
  /// Additionally check that the canonizing map is injective on all
  /// permutations of this size, with canonical images that interpret back.
  std::optional<int> perm_size;
  long long max_graph_nodes = 2000000;  // per-term safety guard
};

struct OracleReport {
  long long terms_enumerated = 0;
  long long start_terms = 0;  // distinct after preprocessing
  long long graph_nodes = 0;
  long long edges_checked = 0;
  long long perms_checked = 0;
  long long failures = 0;
  std::string first_failure;
};

/// All typed terms with at most `max_atoms` atoms whose subterms all
/// have dom and cod at most `max_wires`. Perm mode enumerates
/// identities and swaps; pro mode enumerates identities and the
/// signature's generators.
std::vector<TermPtr> enumerate_terms(const OracleOptions& opts);

OracleReport run_oracle(const OracleOptions& opts, std::ostream* log = nullptr);

std::string format_report(const OracleReport& report,
                          const OracleOptions& opts);

}  // namespace diagre
