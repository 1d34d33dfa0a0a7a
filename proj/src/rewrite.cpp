#include "diagre/rewrite.hpp"

#include <array>
#include <cassert>
#include <random>
#include <span>

namespace diagre {

const char* mode_name(Mode m) { return m == Mode::Pro ? "pro" : "perm"; }

std::optional<Mode> mode_from_name(const std::string& name) {
  if (name == "pro") return Mode::Pro;
  if (name == "perm") return Mode::Perm;
  return std::nullopt;
}

int rule_number(RuleId r) { return static_cast<int>(r); }

const char* rule_name(RuleId r) {
  static const char* names[] = {"R1",  "R2",  "R3",  "R4",  "R5",  "R6",
                                "R7",  "R8",  "R9",  "R10", "R11", "R12",
                                "R13", "R14", "R15", "R16", "R17", "R18",
                                "R19", "R20", "R21", "R22"};
  return names[rule_number(r) - 1];
}

std::optional<RuleId> rule_from_name(const std::string& name) {
  if (name.size() < 2 || name[0] != 'R') return std::nullopt;
  int n = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return std::nullopt;
    n = n * 10 + (name[i] - '0');
  }
  if (n < 1 || n > 22) return std::nullopt;
  return static_cast<RuleId>(n);
}

bool rule_in_mode(RuleId r, Mode mode) {
  int n = rule_number(r);
  if (n <= 9) return true;
  if (n <= 11) return mode == Mode::Pro;
  return mode == Mode::Perm;
}

// ---------------------------------------------------------------------------
// Root-level rule matching
// ---------------------------------------------------------------------------

namespace {

// Layer generators the pro system may commute: anything opaque with at
// least one wire on each side.
bool pro_opaque(const GenRef& g) { return g.dom() >= 1 && g.cod() >= 1; }

// Toboggan layer of size >= 2, as required by the swap layer rules.
std::optional<int> big_toboggan(const GenRef& g) {
  auto d = g.toboggan_size();
  if (d && *d >= 2) return d;
  return std::nullopt;
}

struct LayerPair {
  Layer l1, l2;
  TermPtr rest;  // null for the two-layer form
};

// Seq(L1, L2) or Seq(L1, Seq(L2, rest)).
std::optional<LayerPair> two_layers(const TermPtr& t, bool contextual) {
  if (t->kind() != TermKind::Seq) return std::nullopt;
  auto l1 = as_layer(t->left());
  if (!l1) return std::nullopt;
  if (!contextual) {
    auto l2 = as_layer(t->right());
    if (!l2) return std::nullopt;
    return LayerPair{*l1, *l2, nullptr};
  }
  const TermPtr& inner = t->right();
  if (inner->kind() != TermKind::Seq) return std::nullopt;
  auto l2 = as_layer(inner->left());
  if (!l2) return std::nullopt;
  return LayerPair{*l1, *l2, inner->right()};
}

TermPtr with_rest(const TermPtr& head, const TermPtr& tail,
                  const TermPtr& rest) {
  if (!rest) return seq(head, tail);
  return seq(head, seq(tail, rest));
}

// R10/R11: commute two layers when the first one starts at or below the
// second one's height, adjusting widths by the defects.
std::optional<TermPtr> match_layer_commute(const TermPtr& t, bool contextual) {
  auto p = two_layers(t, contextual);
  if (!p) return std::nullopt;
  const Layer& a = p->l1;
  const Layer& b = p->l2;
  if (!pro_opaque(a.g) || !pro_opaque(b.g)) return std::nullopt;
  if (a.k < b.k + b.g.dom()) return std::nullopt;
  int new_l2 = b.l + a.g.defect();
  int new_k1 = a.k - b.g.defect();
  assert(new_l2 >= 0 && new_k1 >= 0);
  return with_rest(layer_term(b.k, new_l2, b.g),
                   layer_term(new_k1, a.l, a.g), p->rest);
}

// R15-R22 share the shape: two toboggan layers with k1 >= k2; the side
// conditions split on where k1 sits relative to the second toboggan.
enum class SwapLayerRule { Slide, Contract, Fuse, Commute };

std::optional<TermPtr> match_swap_layers(const TermPtr& t, SwapLayerRule which,
                                         bool contextual) {
  auto p = two_layers(t, contextual);
  if (!p) return std::nullopt;
  auto d1 = big_toboggan(p->l1.g);
  auto d2 = big_toboggan(p->l2.g);
  if (!d1 || !d2) return std::nullopt;
  int k1 = p->l1.k, l1 = p->l1.l;
  int k2 = p->l2.k, l2 = p->l2.l;
  switch (which) {
    case SwapLayerRule::Slide: {
      if (!(k2 <= k1 && k1 < k2 + *d2 - *d1)) return std::nullopt;
      assert(l1 >= 1);
      return with_rest(layer_term(k2, l2, p->l2.g),
                       layer_term(k1 + 1, l1 - 1, p->l1.g), p->rest);
    }
    case SwapLayerRule::Contract: {
      if (!(k2 <= k1 && k2 + *d2 - *d1 <= k1 && k1 < k2 + *d2 - 1))
        return std::nullopt;
      return with_rest(layer_term(k2, l2 + 1, GenRef::swap(*d2 - 2, 1)),
                       layer_term(k1 + 1, l1, GenRef::swap(*d1 - 2, 1)),
                       p->rest);
    }
    case SwapLayerRule::Fuse: {
      if (k1 != k2 + *d2 - 1) return std::nullopt;
      TermPtr fused = layer_term(k2, l1, GenRef::swap(*d1 + *d2 - 2, 1));
      if (!p->rest) return fused;
      return seq(fused, p->rest);
    }
    case SwapLayerRule::Commute: {
      if (!(k1 > k2 + *d2 - 1)) return std::nullopt;
      return with_rest(layer_term(k2, l2, p->l2.g),
                       layer_term(k1, l1, p->l1.g), p->rest);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<TermPtr> match_rule(RuleId r, const TermPtr& t, Mode mode) {
  if (!rule_in_mode(r, mode)) return std::nullopt;
  switch (r) {
    case RuleId::R1:
      if (t->kind() == TermKind::Seq && t->left()->kind() == TermKind::Seq)
        return seq(t->left()->left(), seq(t->left()->right(), t->right()));
      return std::nullopt;
    case RuleId::R2:
      if (t->kind() == TermKind::Par && t->left()->kind() == TermKind::Par)
        return par(t->left()->left(), par(t->left()->right(), t->right()));
      return std::nullopt;
    case RuleId::R3:
      if (t->kind() == TermKind::Seq && is_id(t->left())) return t->right();
      return std::nullopt;
    case RuleId::R4:
      if (t->kind() == TermKind::Seq && is_id(t->right())) return t->left();
      return std::nullopt;
    case RuleId::R5:
      if (t->kind() == TermKind::Par && is_id(t->left()) && is_id(t->right()))
        return id_term(t->left()->id_width() + t->right()->id_width());
      return std::nullopt;
    case RuleId::R6:
      if (t->kind() == TermKind::Par && is_id(t->left()) &&
          t->right()->kind() == TermKind::Par && is_id(t->right()->left()))
        return par(id_term(t->left()->id_width() +
                           t->right()->left()->id_width()),
                   t->right()->right());
      return std::nullopt;
    case RuleId::R7: {
      if (t->kind() != TermKind::Par) return std::nullopt;
      const TermPtr& u = t->left();
      const TermPtr& v = t->right();
      if (is_id(u) || is_id(v)) return std::nullopt;
      return seq(par(u, id_term(v->dom())), par(id_term(u->cod()), v));
    }
    case RuleId::R8: {
      if (t->kind() != TermKind::Par || !is_id(t->left()) ||
          t->right()->kind() != TermKind::Seq)
        return std::nullopt;
      const TermPtr& n = t->left();
      return seq(par(n, t->right()->left()), par(n, t->right()->right()));
    }
    case RuleId::R9: {
      if (t->kind() != TermKind::Par || !is_id(t->right()) ||
          t->left()->kind() != TermKind::Seq)
        return std::nullopt;
      const TermPtr& n = t->right();
      return seq(par(t->left()->left(), n), par(t->left()->right(), n));
    }
    case RuleId::R10:
      return match_layer_commute(t, /*contextual=*/false);
    case RuleId::R11:
      return match_layer_commute(t, /*contextual=*/true);
    case RuleId::R12:
      if (t->kind() == TermKind::Swap && t->swap_n() == 0)
        return id_term(t->swap_m());
      return std::nullopt;
    case RuleId::R13:
      if (t->kind() == TermKind::Swap && t->swap_m() == 0)
        return id_term(t->swap_n());
      return std::nullopt;
    case RuleId::R14: {
      if (t->kind() != TermKind::Swap) return std::nullopt;
      int n = t->swap_n(), m = t->swap_m();
      if (n < 1 || m < 2) return std::nullopt;
      return seq(par(swap_term(n, m - 1), id_term(1)),
                 par(id_term(m - 1), swap_term(n, 1)));
    }
    case RuleId::R15:
      return match_swap_layers(t, SwapLayerRule::Slide, false);
    case RuleId::R16:
      return match_swap_layers(t, SwapLayerRule::Slide, true);
    case RuleId::R17:
      return match_swap_layers(t, SwapLayerRule::Contract, false);
    case RuleId::R18:
      return match_swap_layers(t, SwapLayerRule::Contract, true);
    case RuleId::R19:
      return match_swap_layers(t, SwapLayerRule::Fuse, false);
    case RuleId::R20:
      return match_swap_layers(t, SwapLayerRule::Fuse, true);
    case RuleId::R21:
      return match_swap_layers(t, SwapLayerRule::Commute, false);
    case RuleId::R22:
      return match_swap_layers(t, SwapLayerRule::Commute, true);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Redex enumeration and strategies
// ---------------------------------------------------------------------------

namespace {

constexpr std::array<RuleId, 22> kAllRules = {
    RuleId::R1,  RuleId::R2,  RuleId::R3,  RuleId::R4,  RuleId::R5,
    RuleId::R6,  RuleId::R7,  RuleId::R8,  RuleId::R9,  RuleId::R10,
    RuleId::R11, RuleId::R12, RuleId::R13, RuleId::R14, RuleId::R15,
    RuleId::R16, RuleId::R17, RuleId::R18, RuleId::R19, RuleId::R20,
    RuleId::R21, RuleId::R22};

void collect(const TermPtr& t, Mode mode, Position& pos,
             std::vector<std::pair<Position, RuleId>>& out) {
  for (RuleId r : kAllRules)
    if (rule_in_mode(r, mode) && match_rule(r, t, mode))
      out.emplace_back(pos, r);
  if (t->kind() == TermKind::Seq || t->kind() == TermKind::Par) {
    bool s = t->kind() == TermKind::Seq;
    pos.push_back(s ? Dir::SeqLeft : Dir::ParLeft);
    collect(t->left(), mode, pos, out);
    pos.back() = s ? Dir::SeqRight : Dir::ParRight;
    collect(t->right(), mode, pos, out);
    pos.pop_back();
  }
}

using Redex = std::pair<Position, RuleId>;

std::optional<RuleId> first_rule_here(const TermPtr& t, Mode mode,
                                      std::span<const RuleId> rules) {
  for (RuleId r : rules)
    if (rule_in_mode(r, mode) && match_rule(r, t, mode)) return r;
  return std::nullopt;
}

std::optional<Redex> pick_outermost(const TermPtr& t, Mode mode,
                                    std::span<const RuleId> rules,
                                    Position& pos) {
  if (auto r = first_rule_here(t, mode, rules)) return Redex{pos, *r};
  if (t->kind() == TermKind::Seq || t->kind() == TermKind::Par) {
    bool s = t->kind() == TermKind::Seq;
    pos.push_back(s ? Dir::SeqLeft : Dir::ParLeft);
    if (auto r = pick_outermost(t->left(), mode, rules, pos)) return r;
    pos.back() = s ? Dir::SeqRight : Dir::ParRight;
    if (auto r = pick_outermost(t->right(), mode, rules, pos)) return r;
    pos.pop_back();
  }
  return std::nullopt;
}

std::optional<Redex> pick_innermost(const TermPtr& t, Mode mode,
                                    std::span<const RuleId> rules,
                                    Position& pos) {
  if (t->kind() == TermKind::Seq || t->kind() == TermKind::Par) {
    bool s = t->kind() == TermKind::Seq;
    pos.push_back(s ? Dir::SeqLeft : Dir::ParLeft);
    if (auto r = pick_innermost(t->left(), mode, rules, pos)) return r;
    pos.back() = s ? Dir::SeqRight : Dir::ParRight;
    if (auto r = pick_innermost(t->right(), mode, rules, pos)) return r;
    pos.pop_back();
  }
  if (auto r = first_rule_here(t, mode, rules)) return Redex{pos, *r};
  return std::nullopt;
}

std::span<const RuleId> structural_rules(Mode mode) {
  static const std::array<RuleId, 9> pro = {
      RuleId::R1, RuleId::R2, RuleId::R3, RuleId::R4, RuleId::R5,
      RuleId::R6, RuleId::R7, RuleId::R8, RuleId::R9};
  static const std::array<RuleId, 12> perm = {
      RuleId::R1,  RuleId::R2,  RuleId::R3,  RuleId::R4,
      RuleId::R5,  RuleId::R6,  RuleId::R7,  RuleId::R8,
      RuleId::R9,  RuleId::R12, RuleId::R13, RuleId::R14};
  if (mode == Mode::Pro) return pro;
  return perm;
}

std::span<const RuleId> layer_rules(Mode mode) {
  static const std::array<RuleId, 2> pro = {RuleId::R10, RuleId::R11};
  static const std::array<RuleId, 8> perm = {
      RuleId::R15, RuleId::R16, RuleId::R17, RuleId::R18,
      RuleId::R19, RuleId::R20, RuleId::R21, RuleId::R22};
  if (mode == Mode::Pro) return pro;
  return perm;
}

std::optional<Redex> pick_redex(const TermPtr& t, Mode mode,
                                const Strategy& strategy,
                                std::mt19937_64& rng) {
  Position pos;
  switch (strategy.kind) {
    case Strategy::Kind::LeftmostOutermost:
      return pick_outermost(t, mode, kAllRules, pos);
    case Strategy::Kind::LeftmostInnermost:
      return pick_innermost(t, mode, kAllRules, pos);
    case Strategy::Kind::Staged: {
      if (auto r = pick_outermost(t, mode, structural_rules(mode), pos))
        return r;
      return pick_outermost(t, mode, layer_rules(mode), pos);
    }
    case Strategy::Kind::RandomSeeded: {
      auto all = applicable(t, mode);
      if (all.empty()) return std::nullopt;
      std::uniform_int_distribution<std::size_t> dist(0, all.size() - 1);
      return all[dist(rng)];
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::pair<Position, RuleId>> applicable(const TermPtr& t,
                                                    Mode mode) {
  std::vector<std::pair<Position, RuleId>> out;
  Position pos;
  collect(t, mode, pos, out);
  return out;
}

RewriteStep apply_step(const TermPtr& t, const Position& p, RuleId r,
                       Mode mode) {
  TermPtr sub = subterm_at(t, p);
  auto reduct = match_rule(r, sub, mode);
  if (!reduct)
    throw PositionError(std::string(rule_name(r)) +
                        " is not applicable at position '" +
                        position_digits(p) + "'");
  TermPtr after = replace_at(t, p, *reduct);
  assert(after->dom() == t->dom() && after->cod() == t->cod());
  return RewriteStep{r, p, t, after};
}

long long default_step_budget(const TermPtr& t) {
  long long s = t->size();
  return 10 * s * s * s;
}

NormalizeResult normalize(const TermPtr& t, Mode mode, Strategy strategy,
                          std::optional<long long> max_steps) {
  if (mode == Mode::Perm && !symmetry_only(t))
    throw SymmetryError("perm-mode normalization requires a symmetry-only term");
  if (mode == Mode::Pro) require_state_effect_free_atoms(t);
  if (!is_preprocessed(t))
    throw PreconditionError("normalize expects a preprocessed term");

  long long budget = max_steps.value_or(default_step_budget(t));
  std::mt19937_64 rng(strategy.seed);

  RewriteTrace trace;
  trace.initial = t;
  TermPtr cur = t;
  long long steps = 0;
  while (auto redex = pick_redex(cur, mode, strategy, rng)) {
    if (steps >= budget)
      throw BudgetError("step budget exceeded after " + std::to_string(steps) +
                            " steps; the system terminates, so this is a bug",
                        budget);
    RewriteStep step = apply_step(cur, redex->first, redex->second, mode);
    cur = step.after;
    trace.steps.push_back(std::move(step));
    ++steps;
  }
  trace.final_term = cur;
  return NormalizeResult{cur, std::move(trace)};
}

EquivResult equivalent(const TermPtr& t1, const TermPtr& t2, Mode mode,
                       Strategy strategy) {
  EquivResult result;
  if (t1->dom() != t2->dom() || t1->cod() != t2->cod()) return result;
  NormalizeResult r1 = normalize(preprocess(t1), mode, strategy);
  NormalizeResult r2 = normalize(preprocess(t2), mode, strategy);
  result.equivalent = equal(r1.term, r2.term);
  result.left = std::move(r1.trace);
  result.right = std::move(r2.trace);
  return result;
}

}  // namespace diagre
