#include "doctest.h"

#include "diagre/permutation.hpp"
#include "diagre/rewrite.hpp"
#include "diagre/textio.hpp"
#include "support/generators.hpp"

using namespace diagre;
using diagre::testing::Rng;

namespace {

Permutation perm(std::vector<int> images) {
  return Permutation::from_images(std::move(images));
}

}  // namespace

TEST_CASE("compose") {
  CHECK(compose(perm({2, 1}), perm({2, 1})) == perm({1, 2}));
  CHECK(compose(perm({2, 3, 1}), perm({1, 2, 3})) == perm({2, 3, 1}));
  CHECK(compose(perm({2, 3, 1}), perm({2, 3, 1})) == perm({3, 1, 2}));
  CHECK_THROWS_AS(compose(perm({1}), perm({1, 2})), TypeError);
}

TEST_CASE("dsum") {
  CHECK(dsum(perm({1}), perm({2, 1})) == perm({1, 3, 2}));
  CHECK(dsum(perm({}), perm({2, 1})) == perm({2, 1}));
  CHECK(dsum(perm({2, 1}), perm({2, 1})) == perm({2, 1, 4, 3}));
}

TEST_CASE("inverse and preimage_of_one") {
  CHECK(inverse(perm({2, 3, 1})) == perm({3, 1, 2}));
  CHECK(inverse(Permutation::identity(5)) == Permutation::identity(5));
  Rng rng(99);
  for (int i = 0; i < 50; ++i) {
    Permutation p = diagre::testing::random_permutation(rng, 7);
    CHECK(compose(inverse(p), p) == Permutation::identity(7));
  }
  CHECK(preimage_of_one(perm({3, 1, 2})) == 2);
  CHECK_THROWS_AS(preimage_of_one(perm({})), TypeError);
}

TEST_CASE("restrict_first") {
  CHECK(restrict_first(perm({3, 1, 2})) == perm({2, 1}));
  CHECK(restrict_first(perm({1, 2, 3})) == perm({1, 2}));
  CHECK(restrict_first(perm({2, 1})) == perm({1}));
  CHECK_THROWS_AS(restrict_first(perm({})), TypeError);
}

TEST_CASE("interpret basics") {
  CHECK(interpret(toboggan(4)) == perm({2, 3, 4, 1}));
  CHECK(interpret(id_term(3)) == Permutation::identity(3));
  CHECK(interpret(swap_term(2, 1)) == perm({2, 3, 1}));

  // a padded toboggan: identity above and below, shifted cycle in between
  TermPtr layered = layer_term(2, 3, GenRef::swap(2, 1));  // k=2, d=3, l=3
  CHECK(interpret(layered) == perm({1, 2, 4, 5, 3, 6, 7, 8}));

  Signature sig = parse_signature("A : 1 -> 1");
  CHECK_THROWS_AS(interpret(gen_term("A", sig)), SymmetryError);
}

TEST_CASE("interpret agrees with wire tracing") {
  Rng rng(2024);
  diagre::testing::TermGenOptions opts;
  opts.max_wires = 6;
  for (int i = 0; i < 400; ++i) {
    TermPtr t = diagre::testing::random_term(rng, opts);
    CHECK(interpret(t).images() == diagre::testing::traced_images(t));
  }
}

TEST_CASE("the two swap conventions differ by transposition") {
  TermPtr s = swap_term(2, 1);
  CHECK(interpret(s, SwapConvention::Block) == perm({2, 3, 1}));
  CHECK(interpret(s, SwapConvention::BlockTransposed) == perm({3, 1, 2}));
}

TEST_CASE("toboggan") {
  CHECK(equal(toboggan(2), swap_term(1, 1)));
  CHECK(equal(toboggan(1), swap_term(0, 1)));
  CHECK_THROWS_AS(toboggan(0), TypeError);
}

TEST_CASE("cf on small permutations") {
  CHECK(equal(cf(Permutation::identity(4)), id_term(4)));
  CHECK(equal(cf(perm({2, 1})), layer_term(0, 0, GenRef::swap(1, 1))));

  LayerSequence expected;
  expected.ks = {0, 1};
  expected.ls = {1, 0};
  expected.gs = {GenRef::swap(1, 1), GenRef::swap(1, 1)};
  CHECK(equal(cf(perm({3, 1, 2})), layer_sequence_term(expected)));
}

TEST_CASE("cf round trips") {
  Rng rng(5);
  for (int n = 0; n <= 7; ++n) {
    for (int i = 0; i < 40; ++i) {
      Permutation p = diagre::testing::random_permutation(rng, n);
      TermPtr image = cf(p);
      CHECK(is_canonical_form(image));
      CHECK(interpret(image) == p);
    }
  }
  // canonical terms are fixed points of cf after interpretation
  for (int i = 0; i < 200; ++i) {
    TermPtr t = diagre::testing::random_canonical_form(rng, 4, 7);
    CHECK(equal(cf(interpret(t)), t));
  }
}

TEST_CASE("permutation text format") {
  CHECK(print_permutation(perm({2, 3, 1})) == "(2,3,1)");
  CHECK(print_permutation(perm({})) == "()");
  CHECK(parse_permutation("(2,3,1)") == perm({2, 3, 1}));
  CHECK(parse_permutation("()") == perm({}));
  CHECK_THROWS_AS(parse_permutation("(1,1)"), TypeError);
  CHECK_THROWS_AS(parse_permutation("nope"), ParseError);
}

TEST_CASE("interpretation is a contravariant homomorphism") {
  Rng rng(77);
  diagre::testing::TermGenOptions opts;
  opts.max_wires = 5;
  for (int i = 0; i < 200; ++i) {
    TermPtr u = diagre::testing::random_term(rng, opts);
    TermPtr v = diagre::testing::random_term_with_dom(rng, opts, 3, u->cod());
    CHECK(interpret(seq(u, v)) == compose(interpret(v), interpret(u)));
    TermPtr w = diagre::testing::random_term(rng, opts);
    CHECK(interpret(par(u, w)) == dsum(interpret(u), interpret(w)));
  }
}
