#include "doctest.h"
#include "sga/errors.hpp"
#include "sga/io.hpp"
#include "sga/strings.hpp"

using namespace sga;

namespace {

int kind_rank(LK k) {
  switch (k) {
    case LK::Direct: return 0;
    case LK::Trivial:
    case LK::Special: return 1;
    default: return 2;
  }
}

}  // namespace

TEST_CASE("letter inversion is an involution") {
  Quiver q = load_quiver("EX1");
  Alphabet al{&q, false};
  for (Slot s : legal_slots(al))
    for (const Letter& l : letters_at(al, s)) {
      CHECK(inv(inv(l)) == l);
      if (l.kind != LK::Special) CHECK(lsrc(q, inv(l)) == ltgt(q, l));
    }
}

TEST_CASE("letter order at a slot: direct, then trivial or special, then inverse") {
  for (std::uint64_t seed : {0ULL, 1ULL, 2ULL, 3ULL}) {
    Quiver q = seed ? random_skewed_gentle(4, seed) : load_quiver("EX1");
    for (bool hat : {false, true}) {
      Alphabet al{&q, hat};
      for (Slot s : legal_slots(al)) {
        auto ls = letters_at(al, s);
        for (size_t i = 0; i + 1 < ls.size(); ++i) {
          CHECK(compare_letters(q, ls[i], ls[i + 1]) == Cmp::LT);
          CHECK(kind_rank(ls[i].kind) <= kind_rank(ls[i + 1].kind));
        }
      }
    }
  }
}

TEST_CASE("word syntax round trip") {
  Quiver q = load_quiver("EX1");
  for (const char* text : {"1(1,-)- a- e* b- c- 1(1,-)", "1(1,-)- c 1(3,-)", "1(1,-)- 1(1,+)"}) {
    Word w = parse_word(q, text, false);
    CHECK(word_str(q, w) == text);
    CHECK(inv(inv(w)) == w);
  }
  Word h = parse_word(q, "1(2,-)- a 1(1,-)", true);
  CHECK(word_str(q, h) == "1(2,-)- a 1(1,-)");
  // The punctured letter 1(2,-) only exists over the gentle re-flagging.
  CHECK_THROWS_AS(parse_word(q, "1(2,-)- a 1(1,-)", false), ParseError);
  CHECK_THROWS_AS(parse_word(q, "1(1,-)- a 1(1,-)", false), ParseError);
  CHECK_THROWS_AS(parse_word(q, "1(1,-)- zz 1(1,-)", false), ParseError);
}

TEST_CASE("a lone special letter is not a band") {
  Quiver q = load_quiver("EX1");
  Alphabet al{&q, false};
  const int e = q.arrow("e");
  CHECK_FALSE(is_band_word(al, Word{Letter::special(e)}));
  CHECK_FALSE(is_band_word(al, Word{Letter::special(e), Letter::special(e)}));
}

TEST_CASE("symmetric strings are exactly w = w^-1") {
  Quiver q = load_quiver("EX1");
  Alphabet al{&q, false};
  int symmetric = 0;
  for (const Word& w : enumerate_strings(al, 12).strings) {
    CHECK(is_symmetric_string(w) == (inv(w) == w));
    symmetric += is_symmetric_string(w);
  }
  CHECK(symmetric > 0);
}

TEST_CASE("band canonical form is invariant under rotation and inversion") {
  Quiver q = random_skewed_gentle(4, 1);
  Alphabet al{&q, false};
  auto bands = enumerate_bands(al, 8).bands;
  REQUIRE_FALSE(bands.empty());
  for (const Word& b : bands) {
    CHECK(is_band_word(al, b));
    CHECK(is_primitive(b));
    for (size_t k = 0; k < b.size(); ++k) {
      CHECK(band_canonical(rotate(b, k)) == band_canonical(b));
      CHECK(band_equivalent(inv(rotate(b, k)), b));
    }
  }
}

TEST_CASE("lexicographic order is antisymmetric on strings of a slot") {
  Quiver q = load_quiver("EX1");
  Alphabet al{&q, false};
  auto ws = enumerate_strings_at(al, {q.vertex("1"), -1}, 10).strings;
  for (size_t i = 0; i < ws.size(); ++i)
    for (size_t j = 0; j < ws.size(); ++j) {
      Cmp a = lex_compare(q, ws[i], ws[j]).cmp, b = lex_compare(q, ws[j], ws[i]).cmp;
      if (i == j) CHECK(a == Cmp::EQ);
      if (i < j) CHECK(a == Cmp::GT);  // listed in descending order
      if (a == Cmp::LT) CHECK(b == Cmp::GT);
    }
}
