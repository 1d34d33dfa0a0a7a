#include "doctest.h"

#include "diagre/measures.hpp"
#include "diagre/normal_form.hpp"
#include "diagre/permutation.hpp"
#include "diagre/rewrite.hpp"
#include "diagre/textio.hpp"
#include "support/generators.hpp"

using namespace diagre;
using diagre::testing::Rng;

namespace {

const GenRef kA = GenRef::named("A", 1, 1);
const GenRef kB = GenRef::named("B", 2, 2);

Signature ab_signature() {
  Signature sig;
  sig.add("A", 1, 1);
  sig.add("B", 2, 2);
  return sig;
}

}  // namespace

TEST_CASE("structural rules at the root") {
  Signature sig = ab_signature();
  TermPtr a = gen_term("A", sig);

  // R1 / R2 reassociate to the right
  TermPtr t1 = seq(seq(a, a), a);
  CHECK(equal(*match_rule(RuleId::R1, t1, Mode::Pro), seq(a, seq(a, a))));
  TermPtr t2 = par(par(a, a), a);
  CHECK(equal(*match_rule(RuleId::R2, t2, Mode::Pro), par(a, par(a, a))));

  // R3 / R4 drop identities
  CHECK(equal(*match_rule(RuleId::R3, seq(id_term(1), a), Mode::Pro), a));
  CHECK(equal(*match_rule(RuleId::R4, seq(a, id_term(1)), Mode::Pro), a));

  // R5 / R6 fuse identities
  CHECK(equal(*match_rule(RuleId::R5, par(id_term(2), id_term(3)), Mode::Pro),
              id_term(5)));
  CHECK(equal(*match_rule(RuleId::R6, par(id_term(2), par(id_term(3), a)),
                          Mode::Pro),
              par(id_term(5), a)));

  // R7 splits a parallel pair, but never with an identity operand
  TermPtr b = gen_term("B", sig);
  CHECK(equal(*match_rule(RuleId::R7, par(a, b), Mode::Pro),
              seq(par(a, id_term(2)), par(id_term(1), b))));
  CHECK_FALSE(match_rule(RuleId::R7, par(id_term(2), a), Mode::Pro));
  CHECK_FALSE(match_rule(RuleId::R7, par(a, id_term(2)), Mode::Pro));

  // R8 / R9 distribute an identity over a chain
  CHECK(equal(*match_rule(RuleId::R8, par(id_term(2), seq(a, a)), Mode::Pro),
              seq(par(id_term(2), a), par(id_term(2), a))));
  CHECK(equal(*match_rule(RuleId::R9, par(seq(a, a), id_term(2)), Mode::Pro),
              seq(par(a, id_term(2)), par(a, id_term(2)))));
}

TEST_CASE("R10 commutes layers and adjusts widths by defects") {
  Signature sig;
  sig.add("g1", 1, 1);
  sig.add("g2", 2, 3);
  GenRef g1 = GenRef::named("g1", 1, 1);
  GenRef g2 = GenRef::named("g2", 2, 3);

  // k1=2 >= k2+dom(g2)=2; the lower width of the second layer is forced
  // to 1 by typing
  TermPtr t = seq(layer_term(2, 0, g1), layer_term(0, 1, g2));
  auto out = match_rule(RuleId::R10, t, Mode::Pro);
  REQUIRE(out.has_value());
  CHECK(equal(*out, seq(layer_term(0, 1, g2), layer_term(3, 0, g1))));
  CHECK((*out)->dom() == t->dom());
  CHECK((*out)->cod() == t->cod());

  // below the height: no match
  TermPtr ordered = seq(layer_term(0, 2, g1), layer_term(0, 1, g2));
  CHECK_FALSE(match_rule(RuleId::R10, ordered, Mode::Pro));

  // disabled in perm mode
  CHECK_FALSE(match_rule(RuleId::R10, t, Mode::Perm));
}

TEST_CASE("R11 commutes under a continuing chain") {
  GenRef a = kA;
  TermPtr rest = layer_term(0, 1, a);
  TermPtr t = seq(layer_term(1, 0, a), seq(layer_term(0, 1, a), rest));
  auto out = match_rule(RuleId::R11, t, Mode::Pro);
  REQUIRE(out.has_value());
  CHECK(equal(*out,
              seq(layer_term(0, 1, a), seq(layer_term(1, 0, a), rest))));
}

TEST_CASE("swap rules R12-R14") {
  CHECK(equal(*match_rule(RuleId::R12, swap_term(0, 5), Mode::Perm),
              id_term(5)));
  CHECK(equal(*match_rule(RuleId::R13, swap_term(5, 0), Mode::Perm),
              id_term(5)));

  // R14 peels one wire off the second block
  auto out = match_rule(RuleId::R14, swap_term(1, 2), Mode::Perm);
  REQUIRE(out.has_value());
  TermPtr expected = seq(par(swap_term(1, 1), id_term(1)),
                         par(id_term(1), swap_term(1, 1)));
  CHECK(equal(*out, expected));
  // both sides compute the same permutation
  CHECK(interpret(*out) == interpret(swap_term(1, 2)));
  CHECK(interpret(*out) == Permutation::from_images({3, 1, 2}));

  CHECK_FALSE(match_rule(RuleId::R14, swap_term(0, 2), Mode::Perm));
  CHECK_FALSE(match_rule(RuleId::R14, swap_term(2, 1), Mode::Perm));
  CHECK_FALSE(match_rule(RuleId::R12, swap_term(0, 5), Mode::Pro));
}

TEST_CASE("toboggan layer rules split on the side conditions") {
  auto tob_layer = [](int k, int l, int d) {
    return layer_term(k, l, GenRef::swap(d - 1, 1));
  };

  SUBCASE("R15 slides when the first toboggan passes through the second") {
    // k1=0, d1=2; k2=0, d2=4: 0 <= 0 < 0+4-2
    TermPtr t = seq(tob_layer(0, 2, 2), tob_layer(0, 0, 4));
    auto out = match_rule(RuleId::R15, t, Mode::Perm);
    REQUIRE(out.has_value());
    CHECK(equal(*out, seq(tob_layer(0, 0, 4), tob_layer(1, 1, 2))));
    CHECK(interpret(*out) == interpret(t));
    CHECK_FALSE(match_rule(RuleId::R17, t, Mode::Perm));
    CHECK_FALSE(match_rule(RuleId::R19, t, Mode::Perm));
    CHECK_FALSE(match_rule(RuleId::R21, t, Mode::Perm));
  }

  SUBCASE("R17 contracts both toboggans by one") {
    // k1=1, d1=2; k2=0, d2=3: k2+d2-d1=1 <= k1=1 < k2+d2-1=2
    TermPtr t = seq(tob_layer(1, 0, 2), tob_layer(0, 0, 3));
    auto out = match_rule(RuleId::R17, t, Mode::Perm);
    REQUIRE(out.has_value());
    CHECK(equal(*out, seq(tob_layer(0, 1, 2), tob_layer(2, 0, 1))));
    CHECK(interpret(*out) == interpret(t));
    CHECK_FALSE(match_rule(RuleId::R15, t, Mode::Perm));
    CHECK_FALSE(match_rule(RuleId::R19, t, Mode::Perm));
  }

  SUBCASE("R19 fuses adjacent toboggans") {
    // k1 = k2+d2-1: 2 = 0+3-1
    TermPtr t = seq(tob_layer(2, 0, 2), tob_layer(0, 1, 3));
    auto out = match_rule(RuleId::R19, t, Mode::Perm);
    REQUIRE(out.has_value());
    CHECK(equal(*out, tob_layer(0, 0, 4)));
    CHECK(interpret(*out) == interpret(t));
    CHECK_FALSE(match_rule(RuleId::R21, t, Mode::Perm));
  }

  SUBCASE("R21 commutes independent toboggans without width changes") {
    // k1=3 > k2+d2-1 = 1
    TermPtr t = seq(tob_layer(3, 0, 2), tob_layer(0, 3, 2));
    auto out = match_rule(RuleId::R21, t, Mode::Perm);
    REQUIRE(out.has_value());
    CHECK(equal(*out, seq(tob_layer(0, 3, 2), tob_layer(3, 0, 2))));
    CHECK(interpret(*out) == interpret(t));
  }

  SUBCASE("R16/R18/R20/R22 do the same under a continuing chain") {
    TermPtr rest4 = tob_layer(0, 2, 2);
    TermPtr t16 = seq(tob_layer(0, 2, 2), seq(tob_layer(0, 0, 4), rest4));
    auto o16 = match_rule(RuleId::R16, t16, Mode::Perm);
    REQUIRE(o16.has_value());
    CHECK(equal(*o16,
                seq(tob_layer(0, 0, 4), seq(tob_layer(1, 1, 2), rest4))));

    TermPtr rest3 = tob_layer(0, 1, 2);
    TermPtr t18 = seq(tob_layer(1, 0, 2), seq(tob_layer(0, 0, 3), rest3));
    auto o18 = match_rule(RuleId::R18, t18, Mode::Perm);
    REQUIRE(o18.has_value());
    CHECK(equal(*o18,
                seq(tob_layer(0, 1, 2), seq(tob_layer(2, 0, 1), rest3))));

    TermPtr rest4b = tob_layer(0, 2, 2);
    TermPtr t20 = seq(tob_layer(2, 0, 2), seq(tob_layer(0, 1, 3), rest4b));
    auto o20 = match_rule(RuleId::R20, t20, Mode::Perm);
    REQUIRE(o20.has_value());
    CHECK(equal(*o20, seq(tob_layer(0, 0, 4), rest4b)));

    TermPtr rest5 = tob_layer(0, 3, 2);
    TermPtr t22 = seq(tob_layer(3, 0, 2), seq(tob_layer(0, 3, 2), rest5));
    auto o22 = match_rule(RuleId::R22, t22, Mode::Perm);
    REQUIRE(o22.has_value());
    CHECK(equal(*o22,
                seq(tob_layer(0, 3, 2), seq(tob_layer(3, 0, 2), rest5))));
    CHECK(interpret(*o22) == interpret(t22));
  }
}

TEST_CASE("applicable enumerates redexes in preorder") {
  Signature sig = ab_signature();
  CHECK(applicable(id_term(3), Mode::Pro).empty());
  CHECK(applicable(id_term(3), Mode::Perm).empty());

  TermPtr example =
      parse_term("((A ; id[1]) * ((A * A) ; B)) ; (B * A)", sig);
  auto redexes = applicable(example, Mode::Pro);
  CHECK_FALSE(redexes.empty());
  bool found_r7_left = false;
  for (const auto& [pos, rule] : redexes)
    if (rule == RuleId::R7 && pos == Position{Dir::SeqLeft})
      found_r7_left = true;
  CHECK(found_r7_left);

  // canonical forms have no redexes
  LayerSequence c;
  c.ks = {0, 1};
  c.ls = {1, 0};
  c.gs = {GenRef::swap(1, 1), GenRef::swap(1, 1)};
  CHECK(applicable(layer_sequence_term(c), Mode::Perm).empty());
}

TEST_CASE("apply_step records positions and rejects non-redexes") {
  Signature sig = ab_signature();
  TermPtr a = gen_term("A", sig);

  RewriteStep s1 = apply_step(swap_term(0, 2), {}, RuleId::R12, Mode::Perm);
  CHECK(equal(s1.after, id_term(2)));

  RewriteStep s2 = apply_step(seq(id_term(1), a), {}, RuleId::R3, Mode::Pro);
  CHECK(equal(s2.after, a));

  CHECK_THROWS_AS(apply_step(seq(id_term(1), a), {Dir::ParLeft}, RuleId::R3,
                             Mode::Pro),
                  PositionError);
  CHECK_THROWS_AS(apply_step(seq(id_term(1), a), {}, RuleId::R4, Mode::Pro),
                  PositionError);
}

TEST_CASE("normalize reaches the layered forms of the worked examples") {
  Signature sig = ab_signature();

  TermPtr t = parse_term("((A ; id[1]) * ((A * A) ; B)) ; (B * A)", sig);
  NormalizeResult res = normalize(preprocess(t), Mode::Pro);
  LayerSequence expected;
  expected.ks = {0, 1, 2, 1, 0, 2};
  expected.ls = {2, 1, 0, 0, 1, 0};
  expected.gs = {kA, kA, kA, kB, kB, kA};
  CHECK(equal(res.term, layer_sequence_term(expected)));
  CHECK(is_normal_form(res.term));
  CHECK_FALSE(diagre::testing::soundness_violation(res.trace, Mode::Pro));

  TermPtr swaps = parse_term(
      "(id[1] * tob[2] * tob[2]) ; (swap[2,2] * id[1]) ; (swap[1,2] * tob[2]) "
      "; (id[1] * swap[1,2] * id[1]) ; (id[3] * tob[2]) ; (tob[4] * id[1])",
      Signature{});
  NormalizeResult cres = normalize(preprocess(swaps), Mode::Perm);
  LayerSequence cexpected;
  cexpected.ks = {0, 1, 2, 3};
  cexpected.ls = {2, 0, 1, 0};
  cexpected.gs = {GenRef::swap(2, 1), GenRef::swap(3, 1), GenRef::swap(1, 1),
                  GenRef::swap(1, 1)};
  CHECK(equal(cres.term, layer_sequence_term(cexpected)));
  CHECK(is_canonical_form(cres.term));
  CHECK_FALSE(diagre::testing::soundness_violation(cres.trace, Mode::Perm));

  NormalizeResult idres = normalize(id_term(4), Mode::Perm);
  CHECK(equal(idres.term, id_term(4)));
  CHECK(idres.trace.steps.empty());
}

TEST_CASE("normalize enforces its preconditions") {
  Signature sig = ab_signature();
  TermPtr a = gen_term("A", sig);
  CHECK_THROWS_AS(normalize(a, Mode::Pro), PreconditionError);
  CHECK_THROWS_AS(normalize(preprocess(a), Mode::Perm), SymmetryError);
  CHECK_THROWS_AS(normalize(preprocess(swap_term(0, 0)), Mode::Pro),
                  StateEffectError);
  Signature st;
  st.add("S", 0, 2);
  CHECK_THROWS_AS(normalize(preprocess(gen_term("S", st)), Mode::Pro),
                  StateEffectError);
  // a tiny budget trips the guard
  TermPtr t = preprocess(parse_term("A * A * A", sig));
  CHECK_THROWS_AS(normalize(t, Mode::Pro, Strategy::staged(), 1),
                  BudgetError);
}

TEST_CASE("equivalent") {
  Signature sig = ab_signature();

  TermPtr lhs = parse_term("A * B", sig);
  TermPtr rhs = parse_term("(A * id[2]) ; (id[1] * B)", sig);
  EquivResult r = equivalent(lhs, rhs, Mode::Pro);
  CHECK(r.equivalent);
  REQUIRE(r.left.has_value());
  REQUIRE(r.right.has_value());
  CHECK(equal(r.left->final_term, r.right->final_term));

  EquivResult sym = equivalent(rhs, lhs, Mode::Pro);
  CHECK(sym.equivalent == r.equivalent);

  EquivResult distinct =
      equivalent(swap_term(1, 1), id_term(2), Mode::Perm);
  CHECK_FALSE(distinct.equivalent);

  EquivResult mismatched = equivalent(id_term(1), id_term(2), Mode::Perm);
  CHECK_FALSE(mismatched.equivalent);
  CHECK_FALSE(mismatched.left.has_value());
}

TEST_CASE("strategies agree on the final term") {
  Rng rng(808);
  diagre::testing::TermGenOptions perm_opts;
  perm_opts.max_wires = 4;
  perm_opts.max_depth = 3;
  diagre::testing::TermGenOptions pro_opts;
  pro_opts.perm = false;
  pro_opts.gens = {kA, kB, GenRef::named("F", 1, 2)};
  pro_opts.max_depth = 3;

  for (int i = 0; i < 60; ++i) {
    bool perm = i % 2 == 0;
    TermPtr t = preprocess(diagre::testing::random_term(
        rng, perm ? perm_opts : pro_opts));
    Mode mode = perm ? Mode::Perm : Mode::Pro;
    TermPtr reference = normalize(t, mode, Strategy::staged()).term;
    CHECK(equal(normalize(t, mode, Strategy::leftmost_innermost()).term,
                reference));
    CHECK(equal(normalize(t, mode, Strategy::leftmost_outermost()).term,
                reference));
    for (std::uint64_t seed = 0; seed < 4; ++seed)
      CHECK(equal(normalize(t, mode, Strategy::random_seeded(seed)).term,
                  reference));
  }
}

TEST_CASE("every step preserves typing and the pro normal form") {
  Rng rng(909);
  diagre::testing::TermGenOptions opts;
  opts.perm = false;
  opts.gens = {kA, kB, GenRef::named("F", 1, 2), GenRef::named("G", 2, 1)};
  opts.max_depth = 3;
  for (int i = 0; i < 50; ++i) {
    TermPtr t = preprocess(diagre::testing::random_term(rng, opts));
    NormalizeResult res = normalize(t, Mode::Pro);
    CHECK_FALSE(diagre::testing::soundness_violation(res.trace, Mode::Pro));
    TermPtr expected = nf(t);
    for (const RewriteStep& s : res.trace.steps)
      CHECK(equal(nf(s.after), expected));
  }
}
