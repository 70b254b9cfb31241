#pragma once
// Windings H(x) -> Q, the decorated product quiver H_Q(x,y), h-lines, kisses,
// triples and kiss transport along a fringing.

#include <map>
#include <string>
#include <vector>

#include "sga/admissible.hpp"

namespace sga {

enum class Shape { A, Dp, At, Dtp };  // A_n, D'_n, A~_n, D~'_n
const char* shape_name(Shape s);

struct HEdge {
  int src = -1, tgt = -1;
  int image = -1;     // arrow of Q (special loops are images of eta and of special-image nu)
  bool loop = false;  // eta_0 / eta_1
  bool twin = false;  // reversed copy nu' in H°
  int index = 0;      // i for nu_i; 0 or 1 for eta_0 / eta_1
};

struct Winding {
  AdmWord word;
  int first = 1, last = 0;  // vertex range
  std::vector<int> label;   // G on vertices, indexed by v - first
  std::vector<HEdge> edges;
  Shape shape = Shape::A;

  int size() const { return last - first + 1; }
  int vertex_label(int v) const { return label.at(static_cast<size_t>(v - first)); }
  // Incident arrows; a loop counts once.
  int valency(int v) const;
  // Valency at most one. An isolated vertex is a boundary vertex.
  bool is_boundary(int v) const { return valency(v) <= 1; }
  bool has_loop(int v) const;
};

Winding build_H(const Quiver& q, const AdmWord& x);
// H°: every non-loop arrow with special image gets a reversed twin.
Winding build_Ho(const Quiver& q, const AdmWord& x);

enum Color : unsigned { Red = 1, Orange = 2, Purple = 4, Blue = 8, Cyan = 16, Teal = 32 };
std::string color_str(unsigned c);

enum class HQKind { Plus, Cross, OMinus, OPlus };

struct HQVertex {
  int j = -1, i = -1;  // vertex of H(y), vertex of H(x)
  unsigned colors = 0;
  int red = 0, blue = 0;  // multiplicities (2 only at isolated vertices)
  bool boundary = false;
};

struct HQArrow {
  int src = -1, tgt = -1;  // indices into HomGraph::vertices
  HQKind kind = HQKind::Plus;
  int y_edge = -1, x_edge = -1;  // indices into the edges of H(y), H(x)
};

struct HomGraph {
  const Quiver* q = nullptr;
  Winding hx, hy;
  std::vector<HQVertex> vertices;
  std::vector<HQArrow> arrows;
  std::map<std::pair<int, int>, int> index;  // (j,i) -> vertex

  int find(int j, int i) const;
  // Incident arrows of the whole graph, loops once.
  int valency(int v) const;
};

HomGraph build_HQ(const Quiver& q, const AdmWord& x, const AdmWord& y);

struct Component {
  std::vector<int> vertices;
  std::vector<int> arrows;
  Shape shape = Shape::A;
  int n = 0;  // number of vertices
};

// Components of the subgraph spanned by the arrow kinds in `kinds`.
std::vector<Component> components(const HomGraph& g, const std::vector<HQKind>& kinds);

struct LineReport {
  Component line;  // component of the + subgraph
  int outer = -1;  // its component in the + and o subgraph
  int full = -1;   // its component in the whole graph
  bool real = false, hline = false, long_line = false;
  bool dual_real = false, dual_hline = false, dual_long = false;
  bool kiss = false, dual_kiss = false;
  bool diagonal = false;  // generalized diagonal
  std::vector<int> endpoints;
  // Reading characterizations, evaluated at every vertex of the component;
  // `*_uniform` is false when they disagree between vertices.
  bool char_real = false, char_hline = false, char_long = false;
  bool char_uniform = true;
};

struct ComponentReport {
  std::vector<Component> plus, plus_o, full;
  std::vector<LineReport> lines;  // one per component of the + subgraph
  int count_real() const;
  int count_long() const;
  int count_kiss() const;
  int count_dual_kiss() const;
};

ComponentReport classify_components(const HomGraph& g);

// Real h-line -> long h-line containing it; throws TheoremViolation unless each
// long h-line contains exactly one real h-line.
std::vector<std::pair<int, int>> real_long_bijection(const HomGraph& g, const ComponentReport& r);

// Triple built from a real h-line with its two projections.
struct Triple {
  int line = -1;  // index into ComponentReport::lines
  Shape shape = Shape::A;
  int n = 0;
  bool prop_q = false, prop_s = false, prop_k = false;
  bool special_ok = false;  // loop vertices over two loop vertices carry a loop
  bool is_k() const { return prop_q && prop_s && prop_k; }
};
std::vector<Triple> triples(const HomGraph& g, const ComponentReport& r);

struct KissTransport {
  bool y_projective = false;
  AdmWord tx, ty;  // translates over the fringed quiver
  std::map<std::pair<Shape, int>, int> kisses;    // in H(tau_f x, tau_f y), by type and size
  std::map<std::pair<Shape, int>, int> h_triples;  // real h-lines of H(x, tau y)
  int corner_lines = 0;                            // real h-lines through a corner vertex
  int real_lines = 0;                              // real h-lines of H(tau_f x, tau_f y)
  bool bijection_ok() const { return y_projective ? kisses.empty() : kisses == h_triples; }
};
KissTransport kiss_transport(const Fringing& f, const AdmWord& x, const AdmWord& y);

std::string to_dot(const HomGraph& g);

}  // namespace sga
