#include <set>

#include "doctest.h"
#include "sga/admissible.hpp"
#include "sga/errors.hpp"
#include "sga/io.hpp"
#include "sga/strings.hpp"

using namespace sga;

namespace {

std::vector<Quiver> test_quivers() { return {load_quiver("EX1"), random_skewed_gentle(4, 1), random_skewed_gentle(4, 2)}; }

}  // namespace

TEST_CASE("orientation of the worked g-vector words") {
  Quiver q = load_quiver("EX1");
  AdmWord x = a_of_w(q, parse_word(q, "1(1,-)- c b e* b- 1(3,+)", false), false);
  CHECK(adm_str(q, x) == "1(1,-)- c b e b- 1(3,+)");
  CHECK(x.type == WType::UU);
  AdmWord y = a_of_w(q, parse_word(q, "1(1,-)- a- e* a 1(1,-)", false), false);
  CHECK(adm_str(q, y) == "1(1,-)- a- 1(2,-)");
  CHECK(y.type == WType::UP);
  CHECK(inverse(y) == parse_adm(q, "1(2,-)- a 1(1,-)"));
  CHECK(inverse(y).type == WType::PU);
}

TEST_CASE("the H_Q example words are admissible of types (u,p) and (p,p)") {
  Quiver q = load_quiver("EX46");
  AdmWord x = parse_adm(q, "1(1,+)- e a e a- 1(1,-)");
  AdmWord y = parse_adm(q, "1(1,-)- a e a e a- 1(1,-)");
  CHECK(x.type == WType::UP);
  CHECK(y.type == WType::PP);
  CHECK(is_admissible(q, x.word, false));
  CHECK(is_admissible(q, y.word, false));
}

TEST_CASE("A(w) is admissible and completes back to w") {
  for (const Quiver& q : test_quivers()) {
    Alphabet al{&q, false};
    for (const Word& w : enumerate_strings(al, 8).strings) {
      AdmWord x = a_of_w(q, w, false);
      CHECK(is_admissible(q, x.word, x.is_band()));
      CHECK(is_admissible_via_image(q, x.word, x.is_band()));
      CHECK(completion(q, x).word == w);
      CHECK(completion(q, inverse(x)).word == inv(w));
    }
    for (const Word& b : enumerate_bands(al, 8).bands)
      for (const Word& w : standard_forms(q, b)) {
        AdmWord x = a_of_w(q, w, true);
        CHECK(is_admissible(q, x.word, x.is_band()));
        Completion c = completion(q, x);
        CHECK(c.band);
        CHECK(band_equivalent(c.word, w));
      }
  }
}

TEST_CASE("both enumeration routes give the same admissible words") {
  for (const Quiver& q : test_quivers())
    for (int len : {4, 7}) {
      AdmSet a = enumerate_adm(q, len), b = enumerate_adm_direct(q, len);
      CHECK(a.adm_s == b.adm_s);
      CHECK(a.adm_b == b.adm_b);
    }
}

TEST_CASE("the direct test and the image test agree on every gentle word") {
  for (const Quiver& q : test_quivers()) {
    Alphabet hat{&q, true};
    for (const Word& w : enumerate_strings(hat, 7).strings)
      CHECK(is_admissible(q, w, false) == is_admissible_via_image(q, w, false));
    for (const Word& b : enumerate_bands(hat, 7).bands)
      CHECK(is_admissible(q, b, true) == is_admissible_via_image(q, b, true));
  }
}

TEST_CASE("tau on admissible words follows tau on strings; bands are fixed") {
  for (const Quiver& q : test_quivers()) {
    Alphabet al{&q, false};
    for (const Word& w : enumerate_strings(al, 9).strings) {
      AdmWord x = a_of_w(q, w, false);
      CHECK(is_projective_adm(q, x) == is_projective_string(al, w));
      if (is_projective_string(al, w)) {
        CHECK_THROWS_AS(tau_adm(q, x), PreconditionError);
        continue;
      }
      CHECK(tau_adm(q, x) == a_of_w(q, tau_string(al, w), false));
    }
    for (const AdmWord& x : enumerate_adm(q, 8).adm_b)
      if (x.is_band()) CHECK(tau_adm(q, x) == x);
  }
}

TEST_CASE("tau over the EX1F fringing") {
  Fringing f = make_fringing(load_quiver("EX1"), load_quiver("EX1F"));
  AdmWord x = parse_adm(f.base, "1(1,-)- c b e b- 1(3,+)");
  CHECK(adm_str(f.extended, tau_adm(f.extended, x)) == "1(6,-)- p61 c b e b- c- p15 1(5,-)");
}

TEST_CASE("hat readings: the + reading never exceeds the - reading") {
  for (const Quiver& q : test_quivers())
    for (const AdmWord& x : enumerate_adm(q, 7).all()) {
      Unfolded up = unfold_hat(q, x, 1), um = unfold_hat(q, x, -1);
      auto [lo, hi] = index_range(x);
      for (int i = lo; i <= hi; ++i)
        for (int rho : {1, -1}) {
          Cmp c = lex_compare(q, reading(q, up, i, rho), reading(q, um, i, rho)).cmp;
          CHECK((c == Cmp::LT || c == Cmp::EQ));
        }
    }
}
