#include <algorithm>
#include <set>

#include "doctest.h"
#include "sga/errors.hpp"
#include "sga/invariants.hpp"
#include "sga/io.hpp"

using namespace sga;

namespace {

const char* kAsym = "1(1,-)- c b e b- 1(3,+)";
const char* kPU = "1(2,-)- a 1(1,-)";

std::vector<TaggedAdm> tagged_words(const Quiver& q, int max_len) {
  std::vector<TaggedAdm> out;
  for (const auto& x : enumerate_adm(q, max_len).all())
    for (const Tag& s : tags_for(x.type)) out.push_back({x, s});
  return out;
}

}  // namespace

TEST_CASE("tag syntax and operations") {
  CHECK(parse_tag("+-") == Tag::pair(1, -1));
  CHECK(parse_tag("(1,-1)") == Tag::pair(1, -1));
  CHECK(parse_tag("(-1, 1)") == Tag::pair(-1, 1));
  CHECK(parse_tag("*") == Tag::star());
  CHECK(parse_tag("**") == Tag::star_star());
  CHECK(parse_tag("(*,*)") == Tag::star_star());
  CHECK_THROWS_AS(parse_tag("(1,2)"), ParseError);
  CHECK_THROWS_AS(parse_tag("+"), ParseError);
  CHECK(tag_str(Tag::pair(-1, 1)) == "(-1,1)");
  CHECK(wt(Tag::star_star()) == 2);
  CHECK(wt(Tag::star()) == 1);
  CHECK(wt(Tag::pair(1, -1)) == 1);
  CHECK(tag_iota(Tag::pair(1, -1)) == Tag::pair(-1, 1));
  CHECK(tag_chi(Tag::pair(1, -1)) == Tag::pair(-1, 1));
  CHECK(tag_chi(Tag::pair(1, 1)) == Tag::pair(-1, -1));
  for (WType t : {WType::UU, WType::UP, WType::PU, WType::PP, WType::B})
    for (const Tag& s : tags_for(t)) {
      CHECK(tag_iota(tag_iota(s)) == s);
      CHECK(tag_chi(tag_chi(s)) == s);
      CHECK((wt(s) == 2) == (s == Tag::star_star()));
    }
}

TEST_CASE("legal tags per word type") {
  CHECK(tags_for(WType::UU) == std::vector<Tag>{Tag::pair(1, 1)});
  CHECK(tags_for(WType::UP).size() == 2);
  CHECK(tag_legal(WType::UP, Tag::pair(1, -1)));
  CHECK_FALSE(tag_legal(WType::UP, Tag::pair(-1, 1)));
  CHECK(tag_legal(WType::PU, Tag::pair(-1, 1)));
  CHECK_FALSE(tag_legal(WType::PU, Tag::pair(1, -1)));
  CHECK(tags_for(WType::PP).size() == 5);
  CHECK(tags_for(WType::B) == std::vector<Tag>{Tag::star()});
  Quiver q = load_quiver("EX1");
  Fringing f = auto_fringe(q);
  CHECK_THROWS_AS(g_comb(f, {parse_adm(q, kAsym), Tag::star()}), PreconditionError);
}

TEST_CASE("d2 and d3 tables") {
  CHECK(d2(0, 0) == 2);
  CHECK(d2(0, 1) == 1);
  CHECK(d2(-1, 0) == 1);
  CHECK(d2(1, 1) == 1);
  CHECK(d2(-1, -1) == 1);
  CHECK(d2(1, -1) == 0);
  CHECK(d2(-1, 1) == 0);
  CHECK(d3(Tag::pair(1, -1), Tag::pair(1, -1)) == 1);
  CHECK(d3(Tag::pair(1, -1), Tag::pair(-1, 1)) == 0);
  CHECK(d3(Tag::star_star(), Tag::star_star()) == 0);
}

TEST_CASE("simple families and dimension vectors") {
  Quiver q = load_quiver("EX1");
  AdmWord y = parse_adm(q, kPU);
  CHECK(simple_family(y, Tag::pair(1, 1), 5).front().T == Mat::scalar(1, 1, 5));
  CHECK(simple_family(y, Tag::pair(-1, 1), 5).front().T == Mat::scalar(1, -1, 5));
  CHECK(dim_vector(q, {y, Tag::pair(1, 1)}, 5) == std::vector<int>{1, 0, 1, 0});
  CHECK(dim_vector(q, {y, Tag::pair(-1, 1)}, 5) == std::vector<int>{1, 1, 0, 0});
  Quiver r = random_skewed_gentle(4, 1);
  for (const auto& x : enumerate_adm(r, 6).all()) {
    if (x.type == WType::PP) CHECK(simple_family(x, Tag::star_star(), 7).size() == 4);
    if (x.is_band()) CHECK(simple_family(x, Tag::star(), 7).size() == 6);
  }
}

TEST_CASE("kiss census identities and e_comb symmetry") {
  for (std::uint64_t seed : {0ULL, 1ULL, 4ULL}) {
    Quiver q = seed ? random_skewed_gentle(4, seed) : load_quiver("EX1");
    Fringing f = auto_fringe(q);
    auto tw = tagged_words(q, 5);
    for (const auto& a : tw)
      for (const auto& b : tw) {
        INFO(tagged_str(q, a) << " / " << tagged_str(q, b));
        const int e = e_comb(f, a, b);
        CHECK(e >= 0);
        CHECK(e == e_comb(f, b, a));
        TaggedAdm ai{inverse(a.x), tag_iota(a.s)};
        CHECK(e == e_comb(f, ai, b));
      }
  }
}

TEST_CASE("e_comb against the generic oracle") {
  for (std::uint64_t seed : {0ULL, 2ULL}) {
    Quiver q = seed ? random_skewed_gentle(4, seed) : load_quiver("EX1");
    Fringing f = auto_fringe(q);
    auto tw = tagged_words(q, 5);
    for (const auto& a : tw)
      for (const auto& b : tw) {
        INFO(tagged_str(q, a) << " / " << tagged_str(q, b));
        CHECK(e_comb(f, a, b) == E_generic_oracle(q, a, b, 7));
      }
  }
}

TEST_CASE("E formula against the oracle on modules") {
  Quiver q = random_skewed_gentle(4, 1);
  Fringing f = auto_fringe(q);
  auto words = enumerate_adm(q, 5).all();
  for (const auto& x : words)
    for (const auto& X : indecomposables_Ax(x.type, 2, 5))
      for (const auto& y : words)
        for (const auto& Y : indecomposables_Ax(y.type, 1, 5))
          CHECK(E_formula(f, x, X, y, Y) == E_oracle(q, x, X, y, Y));
}

TEST_CASE("worked g-vectors: every route agrees, with the opposite sign of the reference values") {
  Quiver q = load_quiver("EX1");
  AdmWord x = parse_adm(q, kAsym), y = parse_adm(q, kPU);
  struct Case {
    TaggedAdm z;
    AxModule X;
    std::vector<int> reference;
  };
  std::vector<Case> cases = {{{x, Tag::pair(1, 1)}, module_vo(5), {-1, 1, 1, 0}},
                             {{y, Tag::pair(1, 1)}, module_v(1, 5), {1, -1, 0, 0}},
                             {{y, Tag::pair(-1, 1)}, module_v(-1, 5), {1, 0, -1, 0}}};
  Fringing fp = make_fringing(q, load_quiver("EX1F"));
  Fringing fa = auto_fringe(q);
  for (const auto& c : cases) {
    std::vector<int> negated = c.reference;
    for (int& v : negated) v = -v;
    const auto oracle = g_oracle(q, c.z.x, c.X);
    CHECK(oracle == negated);
    CHECK(g_presentation(build_module(q, c.z.x, c.X)) == oracle);
    for (const Fringing* f : {&fp, &fa}) {
      CHECK(g_comb(*f, c.z) == oracle);
      CHECK(g_formula(*f, c.z.x, c.X) == oracle);
    }
  }
}

TEST_CASE("g_comb against the oracle and fringing independence") {
  for (std::uint64_t seed : {0ULL, 1ULL, 3ULL}) {
    Quiver q = seed ? random_skewed_gentle(4, seed) : load_quiver("EX1");
    Fringing f = auto_fringe(q);
    for (const auto& z : tagged_words(q, 7)) {
      INFO(tagged_str(q, z));
      const auto g = g_comb(f, z);
      for (const auto& X : simple_family(z.x, z.s, 5)) CHECK(g == g_oracle(q, z.x, X));
    }
  }
  Quiver q = load_quiver("EX1");
  Fringing fp = make_fringing(q, load_quiver("EX1F")), fa = auto_fringe(q);
  auto tw = tagged_words(q, 6);
  for (const auto& a : tw) {
    CHECK(g_comb(fp, a) == g_comb(fa, a));
    CHECK(is_tau_generic(fp, a) == is_tau_generic(fa, a));
    for (const auto& b : tw) CHECK(e_comb(fp, a, b) == e_comb(fa, a, b));
  }
}

TEST_CASE("tau-generic: both tests agree, and the doubly punctured exclusion") {
  int doubly = 0;
  for (std::uint64_t seed : {0ULL, 1ULL, 2ULL, 5ULL}) {
    Quiver q = seed ? random_skewed_gentle(4, seed) : load_quiver("EX1");
    Fringing f = auto_fringe(q);
    for (const auto& z : tagged_words(q, 7)) {
      INFO(tagged_str(q, z));
      CHECK(is_tau_generic(f, z) == simplified_check(f, z));
      if (punctured_same_vertex(q, z.x) && z.s == Tag::pair(1, -1)) {
        ++doubly;
        CHECK(e_comb(f, z, z) > 0);
        CHECK_FALSE(simplified_check(f, z));
      }
    }
  }
  CHECK(doubly > 0);
}

TEST_CASE("punctured pairs exclude the diagonal") {
  Quiver q = load_quiver("EX1");
  AdmWord y = parse_adm(q, kPU);
  CHECK(punctured_pairs(q, y, y).empty());
  AdmWord yi = inverse(y);
  // The only cross pair is the excluded one for x = y^-1.
  auto cross = punctured_pairs(q, y, yi);
  CHECK(cross.empty());
  CHECK(diag_b(y, y) == 0);
}

TEST_CASE("band orientation") {
  Quiver q = random_skewed_gentle(4, 1);
  int bands = 0;
  for (const auto& x : enumerate_adm(q, 8).adm_b) {
    if (!x.is_band()) continue;
    ++bands;
    CHECK(diag_b(x, x) == 1);
    CHECK(diag_b(x, inverse(x)) == -1);
    CHECK(diag_b(x, AdmWord{rotate(x.word, 1), WType::B}) == 1);
  }
  CHECK(bands > 0);
}

TEST_CASE("component table") {
  Quiver q = load_quiver("EX1");
  Fringing f = auto_fringe(q);
  ComponentTable t = enumerate_components(f, 6, 5);
  REQUIRE_FALSE(t.classes.empty());
  std::set<TaggedAdm> ids;
  for (size_t a = 0; a < t.classes.size(); ++a) {
    const auto& c = t.classes[a];
    CHECK(ids.insert(c.z).second);
    CHECK(canonical_tagged(c.z) == c.z);
    CHECK(t.e[a][a] == 0);
    if (c.z.x.type == WType::UU) CHECK(c.z.s == Tag::pair(1, 1));
    for (size_t b = 0; b < t.classes.size(); ++b) CHECK(t.e[a][b] == t.e[b][a]);
  }
  const std::string tsv = components_tsv(q, t);
  CHECK(tsv.rfind("id\tword\ttag\ttype\tdim\tg\n", 0) == 0);
  CHECK(tsv == components_tsv(q, enumerate_components(f, 6, 5)));
}
