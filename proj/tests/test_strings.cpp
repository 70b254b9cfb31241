#include <set>

#include "doctest.h"
#include "sga/errors.hpp"
#include "sga/io.hpp"
#include "sga/strings.hpp"

using namespace sga;

// St_{1,-} of EX1 in descending order with the expected labels
// (alpha, beta, gamma, epsilon are a, b, c, e).
TEST_CASE("string census at (1,-)") {
  Quiver q = load_quiver("EX1");
  Alphabet al{&q, false};
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"1(1,-)- a- e* b- c- 1(1,-)", "p~(1,-)"},
      {"1(1,-)- a- e* b- 1(3,+)", "q~(3,-)"},
      {"1(1,-)- a- e* 1(2,+)", ""},
      {"1(1,-)- a- e* a 1(1,-)", "q~(2)"},
      {"1(1,-)- 1(1,+)", "s~(1)"},
      {"1(1,-)- c 1(3,-)", "p~(3,+)"},
      {"1(1,-)- c b e* b- c- 1(1,-)", "p~(2)"},
      {"1(1,-)- c b e* b- 1(3,+)", ""},
      {"1(1,-)- c b e* 1(2,+)", ""},
      {"1(1,-)- c b e* a 1(1,-)", "p~(1,+)"},
  };
  StringList list = enumerate_strings_at(al, {q.vertex("1"), -1}, 20);
  CHECK_FALSE(list.truncated);
  REQUIRE(list.strings.size() == expected.size());
  for (size_t k = 0; k < expected.size(); ++k) {
    CHECK(word_str(q, list.strings[k]) == expected[k].first);
    auto labels = string_labels(al, list.strings[k]);
    CHECK((labels.empty() ? std::string() : labels.front()) == expected[k].second);
  }
  int symmetric = 0;
  for (const Word& w : list.strings) symmetric += is_symmetric_string(w);
  CHECK(symmetric == 2);
  CHECK(enumerate_bands(al, 12).bands.empty());
}

TEST_CASE("projective and injective strings of EX1") {
  Quiver q = load_quiver("EX1");
  Alphabet al{&q, false};
  auto ps = projective_strings(al), is = injective_strings(al);
  // Ordinary vertices carry one label per slot, naming mutually inverse strings.
  CHECK(ps.size() == 5);
  CHECK(is.size() == 5);
  auto find = [](const std::vector<LabeledString>& v, const std::string& l) {
    for (const auto& x : v)
      if (x.label == l) return x.word;
    return Word{};
  };
  CHECK(find(ps, "p~(1,-)") == inv(find(ps, "p~(1,+)")));
  CHECK(find(is, "q~(3,-)") == inv(find(is, "q~(3,+)")));
  for (const auto& p : ps) CHECK(is_projective_string(al, p.word));
  for (const auto& i : is) CHECK(is_injective_string(al, i.word));
}

TEST_CASE("tau is a bijection from non-projective to non-injective strings") {
  for (std::uint64_t seed : {0ULL, 1ULL, 2ULL}) {
    Quiver q = seed ? random_skewed_gentle(4, seed) : load_quiver("EX1");
    Alphabet al{&q, false};
    auto all = enumerate_strings(al, 9).strings;
    std::set<Word> hit;
    for (const Word& w : all) {
      if (is_projective_string(al, w)) {
        CHECK_THROWS_AS(tau_string(al, w), PreconditionError);
        continue;
      }
      Word t = tau_string(al, w);
      CHECK_FALSE(is_injective_string(al, t));
      CHECK(tau_inv_string(al, t) == w);
      CHECK(hit.insert(t).second);
    }
    if (!seed) {
      // EX1 has finitely many strings, so the image is all non-injectives.
      size_t non_injective = 0;
      for (const Word& w : all) non_injective += !is_injective_string(al, w);
      CHECK(hit.size() == non_injective);
    }
  }
}

TEST_CASE("successor stays in the slot and increases") {
  Quiver q = load_quiver("EX1");
  Alphabet al{&q, false};
  auto ws = enumerate_strings_at(al, {q.vertex("1"), -1}, 20).strings;
  // Descending list: the successor of each entry is the previous one.
  for (size_t k = 1; k < ws.size(); ++k) {
    auto s = successor(al, ws[k]);
    REQUIRE(s.has_value());
    CHECK(s->word == ws[k - 1]);
  }
  CHECK_FALSE(successor(al, ws.front()).has_value());
}
