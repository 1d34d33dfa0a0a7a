#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "diagre/term.hpp"

namespace diagre {

/// Which rewriting system applies. Pro enables R1-R11 over opaque
/// generators (named boxes, and swaps of positive width treated as
/// opaque). Perm enables R1-R9 and the swap rules R12-R22 on
/// symmetry-only terms.
enum class Mode : std::uint8_t { Pro, Perm };

const char* mode_name(Mode m);
std::optional<Mode> mode_from_name(const std::string& name);

enum class RuleId : int {
  R1 = 1,   // (t;u);v -> t;(u;v)
  R2,       // (t*u)*v -> t*(u*v)
  R3,       // id;t -> t
  R4,       // t;id -> t
  R5,       // id[n]*id[m] -> id[n+m]
  R6,       // id[n]*(id[m]*t) -> id[n+m]*t
  R7,       // u*v -> (u*id);(id*v)   if u,v not identities
  R8,       // id*(u;v) -> (id*u);(id*v)
  R9,       // (u;v)*id -> (u*id);(v*id)
  R10,      // layer commutation                  if k1 >= k2+dom(g2)
  R11,      // layer commutation under a chain    if k1 >= k2+dom(g2)
  R12,      // swap[0,n] -> id[n]
  R13,      // swap[n,0] -> id[n]
  R14,      // swap[n,m] (n>=1, m>=2) -> (swap[n,m-1]*id[1]);(id[m-1]*swap[n,1])
  R15,      // toboggan slide                     if k2 <= k1 < k2+d2-d1
  R16,      //   the same under a chain
  R17,      // toboggan contraction               if max(k2,k2+d2-d1) <= k1 < k2+d2-1
  R18,      //   the same under a chain
  R19,      // toboggan fusion                    if k1 = k2+d2-1
  R20,      //   the same under a chain
  R21,      // toboggan commutation               if k1 > k2+d2-1
  R22,      //   the same under a chain
};

int rule_number(RuleId r);
const char* rule_name(RuleId r);  // "R10"
std::optional<RuleId> rule_from_name(const std::string& name);

/// True when the rule belongs to the mode's system.
bool rule_in_mode(RuleId r, Mode mode);

/// The reduct of `t` under `r` applied at the root, or nothing when the
/// pattern or side condition fails.
std::optional<TermPtr> match_rule(RuleId r, const TermPtr& t, Mode mode);

/// All (position, rule) redexes of `t`, positions in preorder (root
/// first, left before right), rules ascending at each position.
std::vector<std::pair<Position, RuleId>> applicable(const TermPtr& t,
                                                    Mode mode);

/// One rewrite: `after` is the whole term with the reduct spliced in at
/// `position`; dom and cod are preserved.
struct RewriteStep {
  RuleId rule;
  Position position;
  TermPtr before;
  TermPtr after;
};

/// A certified run: steps chain (each after is the next before).
struct RewriteTrace {
  TermPtr initial;
  std::vector<RewriteStep> steps;
  TermPtr final_term;
};

/// Applies `r` at `p`; throws PositionError when not applicable there.
RewriteStep apply_step(const TermPtr& t, const Position& p, RuleId r,
                       Mode mode);

/// Redex selection policy. All strategies are deterministic given the
/// seed. Staged first exhausts the structural rules (R1-R9, plus
/// R12-R14 in perm mode), then applies layer rules, returning to the
/// structural stage whenever it re-opens.
struct Strategy {
  enum class Kind : std::uint8_t {
    LeftmostInnermost,
    LeftmostOutermost,
    RandomSeeded,
    Staged,
  };
  Kind kind = Kind::Staged;
  std::uint64_t seed = 0;

  static Strategy staged() { return {}; }
  static Strategy leftmost_innermost() { return {Kind::LeftmostInnermost, 0}; }
  static Strategy leftmost_outermost() { return {Kind::LeftmostOutermost, 0}; }
  static Strategy random_seeded(std::uint64_t seed) {
    return {Kind::RandomSeeded, seed};
  }
};

long long default_step_budget(const TermPtr& t);  // 10 * size(t)^3

struct NormalizeResult {
  TermPtr term;
  RewriteTrace trace;
};

/// Rewrites a preprocessed term to a form with no redexes: the normal
/// form in pro mode, the canonical form in perm mode. Throws
/// PreconditionError if `t` is not preprocessed, SymmetryError /
/// StateEffectError on mode violations, and BudgetError past
/// `max_steps` (default 10 * size^3), which indicates a bug since both
/// systems terminate.
NormalizeResult normalize(const TermPtr& t, Mode mode,
                          Strategy strategy = Strategy::staged(),
                          std::optional<long long> max_steps = std::nullopt);

struct EquivResult {
  bool equivalent = false;
  /// Certificates t1 ->* nf <-* t2, starting from the preprocessed
  /// inputs. Absent when dom/cod already differ.
  std::optional<RewriteTrace> left;
  std::optional<RewriteTrace> right;
};

/// Decides diagrammatic equivalence by comparing the normal forms of
/// the preprocessed inputs syntactically.
EquivResult equivalent(const TermPtr& t1, const TermPtr& t2, Mode mode,
                       Strategy strategy = Strategy::staged());

}  // namespace diagre
