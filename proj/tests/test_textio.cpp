#include "doctest.h"

#include "diagre/textio.hpp"
#include "support/generators.hpp"

using namespace diagre;
using diagre::testing::Rng;

TEST_CASE("parse_signature") {
  Signature sig = parse_signature("A : 1 -> 1\nB : 2 -> 2");
  CHECK(sig.entries().size() == 2);
  CHECK(sig.at("A").dom == 1);
  CHECK(sig.at("B").cod == 2);

  CHECK(parse_signature("").empty());
  CHECK(parse_signature("# only a comment\n\n").empty());
  CHECK(parse_signature("A : 1 -> 1 # trailing comment").contains("A"));

  CHECK_THROWS_AS(parse_signature("id : 1 -> 1"), SignatureError);
  CHECK_THROWS_AS(parse_signature("A : 1 -> 1\nA : 2 -> 2"), SignatureError);
  CHECK_THROWS_AS(parse_signature("A 1 -> 1"), ParseError);
  CHECK_THROWS_AS(parse_signature("A : 1 -> 1 2"), ParseError);

  // print and reparse
  Signature again = parse_signature(print_signature(sig));
  CHECK(again.entries().size() == 2);
}

TEST_CASE("parse_term basics") {
  Signature sig = parse_signature("A : 1 -> 1\nB : 2 -> 2");

  CHECK(equal(parse_term("id[0]", sig), id_term(0)));
  CHECK(equal(parse_term("tob[3]", sig), swap_term(2, 1)));
  CHECK(equal(parse_term("tob[1]", sig), swap_term(0, 1)));
  CHECK(equal(parse_term("swap[2,1]", sig), swap_term(2, 1)));

  // operators are right-associative
  TermPtr a = gen_term("A", sig);
  CHECK(equal(parse_term("A ; A ; A", sig), seq(a, seq(a, a))));
  CHECK(equal(parse_term("A * A * A", sig), par(a, par(a, a))));

  // * binds tighter than ;
  TermPtr b = gen_term("B", sig);
  CHECK(equal(parse_term("A * A ; B", sig), seq(par(a, a), b)));

  // unicode operators are accepted
  CHECK(equal(parse_term("A ⨾ A", sig), seq(a, a)));
  CHECK(equal(parse_term("A ⊗ A", sig), par(a, a)));

  // the two-generator example
  TermPtr example =
      parse_term("((A ; id[1]) * ((A * A) ; B)) ; (B * A)", sig);
  CHECK(equal(example,
              seq(par(seq(a, id_term(1)), seq(par(a, a), b)), par(b, a))));
}

TEST_CASE("parse_term errors") {
  Signature sig = parse_signature("A : 1 -> 1");
  CHECK_THROWS_AS(parse_term("", sig), ParseError);
  CHECK_THROWS_AS(parse_term("A ;", sig), ParseError);
  CHECK_THROWS_AS(parse_term("(A", sig), ParseError);
  CHECK_THROWS_AS(parse_term("id[", sig), ParseError);
  CHECK_THROWS_AS(parse_term("id[-1]", sig), ParseError);
  CHECK_THROWS_AS(parse_term("tob[0]", sig), ParseError);
  CHECK_THROWS_AS(parse_term("A A", sig), ParseError);
  CHECK_THROWS_AS(parse_term("?", sig), ParseError);
  CHECK_THROWS_AS(parse_term("nope", sig), TypeError);
  CHECK_THROWS_AS(parse_term("A ; B", sig), TypeError);  // unknown B
}

TEST_CASE("printer is deterministic and minimal") {
  Signature sig = parse_signature("A : 1 -> 1\nB : 2 -> 2");
  TermPtr a = gen_term("A", sig);
  TermPtr b = gen_term("B", sig);

  CHECK(print_term(seq(a, seq(a, a))) == "A ; A ; A");
  CHECK(print_term(seq(seq(a, a), a)) == "(A ; A) ; A");
  CHECK(print_term(par(a, par(a, a))) == "A * A * A");
  CHECK(print_term(par(par(a, a), a)) == "(A * A) * A");
  CHECK(print_term(seq(par(a, a), b)) == "A * A ; B");
  CHECK(print_term(par(a, seq(a, a))) == "A * (A ; A)");
  CHECK(print_term(swap_term(0, 4)) == "swap[0,4]");

  PrintOptions unicode;
  unicode.unicode = true;
  TermPtr t = seq(par(a, a), b);
  CHECK(print_term(t, unicode) == "A ⊗ A ⨾ B");
  CHECK(equal(parse_term(print_term(t, unicode), sig), t));
}

TEST_CASE("parse-print round trip on random terms") {
  Rng rng(123);
  Signature sig = parse_signature("A : 1 -> 1\nB : 2 -> 2\nF : 1 -> 2");
  diagre::testing::TermGenOptions pro;
  pro.perm = false;
  pro.gens = {GenRef::named("A", 1, 1), GenRef::named("B", 2, 2),
              GenRef::named("F", 1, 2)};
  diagre::testing::TermGenOptions perm;

  for (int i = 0; i < 500; ++i) {
    auto& opts = (i % 2 == 0) ? pro : perm;
    TermPtr t = diagre::testing::random_term(rng, opts);
    CHECK(equal(parse_term(print_term(t), sig), t));
  }
}
