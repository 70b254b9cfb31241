#include "doctest.h"
#include "hq_example.hpp"
#include "sga/errors.hpp"
#include "sga/io.hpp"

using namespace sga;

namespace {

int line_of(const HomGraph& g, const ComponentReport& r, int j, int i) {
  int v = g.find(j, i);
  for (size_t k = 0; k < r.lines.size(); ++k)
    for (int u : r.lines[k].line.vertices)
      if (u == v) return static_cast<int>(k);
  return -1;
}

}  // namespace

TEST_CASE("H_Q example: colors at every vertex") {
  Quiver q = load_quiver("EX46");
  HomGraph g = build_HQ(q, parse_adm(q, hq_example::kX), parse_adm(q, hq_example::kY));
  CHECK(g.hx.first == 1);
  CHECK(g.hx.last == 5);
  CHECK(g.hy.size() == 6);
  for (int r = 0; r < 6; ++r)
    for (int c = 1; c <= 5; ++c) {
      int v = g.find(r + 1, c);
      REQUIRE(v >= 0);
      INFO("reference vertex (" << r << "," << c << ")");
      CHECK(g.vertices[static_cast<size_t>(v)].colors == hq_example::parse_colors(hq_example::kColors[r][c - 1]));
    }
}

TEST_CASE("H_Q example: real h-lines through column 4") {
  Quiver q = load_quiver("EX46");
  HomGraph g = build_HQ(q, parse_adm(q, hq_example::kX), parse_adm(q, hq_example::kY));
  ComponentReport r = classify_components(g);
  int a0 = line_of(g, r, 1, 4), a2 = line_of(g, r, 3, 4), a5 = line_of(g, r, 6, 4), d1 = line_of(g, r, 2, 4);
  for (int l : {a0, a2, a5}) {
    REQUIRE(l >= 0);
    CHECK(r.lines[static_cast<size_t>(l)].real);
    CHECK(r.lines[static_cast<size_t>(l)].line.shape == Shape::A);
  }
  CHECK(a0 != a2);
  CHECK(a0 != a5);
  CHECK(a2 != a5);
  REQUIRE(d1 >= 0);
  CHECK(r.lines[static_cast<size_t>(d1)].real);
  CHECK(r.lines[static_cast<size_t>(d1)].line.shape == Shape::Dp);
}

TEST_CASE("decorated quiver invariants and line characterizations") {
  for (std::uint64_t seed : {0ULL, 1ULL, 3ULL}) {
    Quiver q = seed ? random_skewed_gentle(4, seed) : load_quiver("EX1");
    auto words = enumerate_adm(q, 6).all();
    for (const auto& x : words)
      for (const auto& y : words) {
        HomGraph g = build_HQ(q, x, y);
        for (size_t v = 0; v < g.vertices.size(); ++v) {
          const auto& hv = g.vertices[v];
          const int val = g.valency(static_cast<int>(v));
          CHECK(val <= 2);
          if (hv.colors & Red) CHECK(val <= 1);
          CHECK_FALSE(((hv.colors & Orange) && (hv.colors & Purple)));
          int marks = !!(hv.colors & Orange) + !!(hv.colors & Purple) + !!(hv.colors & Cyan) + !!(hv.colors & Teal);
          CHECK(marks <= 1);
        }
        ComponentReport r = classify_components(g);
        for (const auto& l : r.lines) {
          CHECK(l.char_uniform);
          CHECK(l.char_real == l.real);
          CHECK(l.char_hline == l.hline);
          CHECK(l.char_long == l.long_line);
          if (l.kiss) CHECK(l.real);
        }
        auto pairs = real_long_bijection(g, r);
        CHECK(static_cast<int>(pairs.size()) == r.count_real());
        CHECK(r.count_real() == r.count_long());
        for (auto [line, full] : pairs) CHECK(r.lines[static_cast<size_t>(line)].line.shape == r.full[static_cast<size_t>(full)].shape);
        for (const auto& t : triples(g, r)) {
          CHECK(t.prop_q);
          CHECK(t.prop_s);
          CHECK(t.special_ok);
          CHECK(t.prop_k == r.lines[static_cast<size_t>(t.line)].kiss);
        }
      }
  }
}

TEST_CASE("windings: labels and boundary vertices") {
  Quiver q = load_quiver("EX1");
  Winding h = build_H(q, parse_adm(q, "1(1,-)- c b e b- 1(3,+)"));
  CHECK(h.size() == 5);
  CHECK(h.shape == Shape::A);
  CHECK(h.is_boundary(h.first));
  CHECK(h.is_boundary(h.last));
  Winding p = build_H(q, parse_adm(q, "1(2,-)- a 1(1,-)"));
  CHECK(p.shape == Shape::Dp);
  CHECK(p.has_loop(p.first));
}

TEST_CASE("kisses after fringing match real h-lines against the translate") {
  Quiver q = load_quiver("EX1");
  for (const Fringing& f : {auto_fringe(q), make_fringing(q, load_quiver("EX1F"))}) {
    auto words = enumerate_adm(q, 8).all();
    for (const auto& x : words)
      for (const auto& y : words) CHECK(kiss_transport(f, x, y).bijection_ok());
  }
  Quiver r = random_skewed_gentle(4, 1);
  Fringing fr = auto_fringe(r);
  auto words = enumerate_adm(r, 5).all();
  for (const auto& x : words)
    for (const auto& y : words) CHECK(kiss_transport(fr, x, y).bijection_ok());
}

TEST_CASE("DOT output names every vertex") {
  Quiver q = load_quiver("EX46");
  HomGraph g = build_HQ(q, parse_adm(q, hq_example::kX), parse_adm(q, hq_example::kY));
  std::string dot = to_dot(g);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("\"(1,1)\"") != std::string::npos);
  CHECK(dot.find("\"(6,5)\"") != std::string::npos);
}
