#include "doctest.h"
#include "sga/errors.hpp"
#include "sga/io.hpp"

using namespace sga;

TEST_CASE("EX1 validates as skewed-gentle but not gentle") {
  Quiver q = load_quiver("EX1");
  ValidationReport r = validate(q);
  CHECK(r.is_polarized);
  CHECK(r.is_admissible);
  CHECK(r.is_skewed_gentle);
  // One special loop, so the gentle flag is off.
  CHECK_FALSE(r.is_gentle);
  CHECK(q.special_count() == 1);
}

TEST_CASE("gentle implies no special arrows on random quivers") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Quiver q = random_skewed_gentle(4, seed);
    ValidationReport r = validate(q);
    CHECK(r.is_skewed_gentle);
    if (r.is_gentle) CHECK(q.special_count() == 0);
  }
}

TEST_CASE("the one-vertex quiver with two loops has unbounded paths") {
  Quiver q = load_quiver("EX46");
  ValidationReport r = validate(q);
  CHECK(r.is_polarized);
  CHECK_FALSE(r.is_admissible);
  CHECK_FALSE(longest_admissible_path(q).has_value());
  CHECK(longest_admissible_path(load_quiver("EX1")).has_value());
}

TEST_CASE("DSL round trip") {
  for (const char* name : {"EX1", "EX1F", "EX46"}) {
    Quiver q = load_quiver(name);
    CHECK(parse_quiver(print_quiver(q)) == q);
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Quiver q = random_skewed_gentle(4, seed);
    CHECK(parse_quiver(print_quiver(q)) == q);
  }
}

TEST_CASE("DSL errors carry line numbers") {
  CHECK_THROWS_AS(parse_quiver("vertex 1\narrow a 1:+ -> 2:+\n"), ParseError);
  try {
    parse_quiver("vertex 1\narrow a 1:+ -> 2:+\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_quiver("vertex 1\nspecial e 1\nspecial f 1\n"), ParseError);
  CHECK_THROWS_AS(parse_quiver("vertex 1\nvertex 1\n"), ParseError);
  CHECK_THROWS_AS(parse_quiver("vertex 1\nbogus\n"), ParseError);
}

TEST_CASE("split presentation of EX1") {
  Quiver q = load_quiver("EX1");
  GabrielPresentation g = gabriel_presentation(q);
  REQUIRE(g.vertices.size() == 4);
  const int v2 = q.vertex("2");
  CHECK(g.vertex_index(v2, -1) < g.vertex_index(v2, 1));
  CHECK(g.vertex_index(q.vertex("1"), 0) == 0);
}

TEST_CASE("fringings") {
  Quiver q = load_quiver("EX1");
  CHECK(check_fringing(q, load_quiver("EX1F")));
  // The base itself leaves slots empty.
  CHECK_FALSE(check_fringing(q, q));
  Fringing f = auto_fringe(q);
  CHECK(check_fringing(q, f.extended));
  CHECK(f.fringe_vertices.size() == 4);
  CHECK_THROWS_AS(make_fringing(q, q), PreconditionError);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Quiver r = random_skewed_gentle(4, seed);
    CHECK(check_fringing(r, auto_fringe(r).extended));
  }
}
