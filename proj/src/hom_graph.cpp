#include "sga/hom_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "sga/errors.hpp"

namespace sga {

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::A: return "A";
    case Shape::Dp: return "D'";
    case Shape::At: return "A~";
    case Shape::Dtp: return "D~'";
  }
  return "?";
}

int Winding::valency(int v) const {
  int n = 0;
  for (const auto& e : edges) {
    if (e.twin) continue;
    if (e.src == v) ++n;
    if (e.tgt == v && !e.loop) ++n;
  }
  return n;
}

bool Winding::has_loop(int v) const {
  return std::any_of(edges.begin(), edges.end(), [&](const HEdge& e) { return e.loop && e.src == v; });
}

Winding build_H(const Quiver& q, const AdmWord& x) {
  Winding h;
  h.word = x;
  auto [lo, hi] = index_range(x);
  h.first = lo;
  h.last = hi;
  const Word& w = x.word;
  for (int v = lo; v <= hi; ++v) h.label.push_back(ltgt(q, w[static_cast<size_t>(v)])->v);
  const int m = static_cast<int>(w.size());
  auto add_nu = [&](int i, int a, int b) {
    const Letter& l = w[static_cast<size_t>(i)];
    HEdge e;
    e.image = l.id;
    e.index = i;
    if (l.kind == LK::Direct) {
      e.src = b;
      e.tgt = a;
    } else {
      e.src = a;
      e.tgt = b;
    }
    h.edges.push_back(e);
  };
  if (x.is_band()) {
    for (int i = 0; i < m; ++i) add_nu(i, i, (i + 1) % m);
    h.shape = Shape::At;
    return h;
  }
  for (int i = 1; i + 1 <= hi; ++i) add_nu(i, i, i + 1);
  int loops = 0;
  if (is_punctured(q, w.front())) {
    h.edges.push_back(HEdge{lo, lo, q.special_loop_at(w.front().id), true, false, 0});
    ++loops;
  }
  if (is_punctured(q, w.back())) {
    h.edges.push_back(HEdge{hi, hi, q.special_loop_at(w.back().id), true, false, 1});
    ++loops;
  }
  h.shape = loops == 0 ? Shape::A : loops == 1 ? Shape::Dp : Shape::Dtp;
  return h;
}

Winding build_Ho(const Quiver& q, const AdmWord& x) {
  Winding h = build_H(q, x);
  const size_t n = h.edges.size();
  for (size_t k = 0; k < n; ++k) {
    HEdge e = h.edges[k];
    if (e.loop || e.src == e.tgt || !q.arrows[static_cast<size_t>(e.image)].special) continue;
    std::swap(e.src, e.tgt);
    e.twin = true;
    h.edges.push_back(e);
  }
  return h;
}

std::string color_str(unsigned c) {
  static const std::pair<Color, const char*> names[] = {{Red, "red"},   {Orange, "orange"}, {Purple, "purple"},
                                                        {Blue, "blue"}, {Cyan, "cyan"},     {Teal, "teal"}};
  std::string out;
  for (auto [bit, name] : names) {
    if (!(c & bit)) continue;
    if (!out.empty()) out += ',';
    out += name;
  }
  return out;
}

int HomGraph::find(int j, int i) const {
  auto it = index.find({j, i});
  return it == index.end() ? -1 : it->second;
}

int HomGraph::valency(int v) const {
  int n = 0;
  for (const auto& a : arrows) {
    if (a.src == v) ++n;
    if (a.tgt == v && a.src != v) ++n;
  }
  return n;
}

namespace {

// Readings of one admissible word: double bar and the two hat variants.
struct Readings {
  Unfolded bar, hat_plus, hat_minus;
  Readings(const Quiver& q, const AdmWord& x)
      : bar(unfold_bar(q, x)), hat_plus(unfold_hat(q, x, 1)), hat_minus(unfold_hat(q, x, -1)) {}
  const Unfolded& hat(int delta) const { return delta > 0 ? hat_plus : hat_minus; }
};

bool leq(const Quiver& q, const EPWord& a, const EPWord& b) {
  Cmp c = lex_compare(q, a, b).cmp;
  return c == Cmp::LT || c == Cmp::EQ;
}

}  // namespace

HomGraph build_HQ(const Quiver& q, const AdmWord& x, const AdmWord& y) {
  HomGraph g;
  g.q = &q;
  g.hx = build_H(q, x);
  g.hy = build_H(q, y);
  Readings rx(q, x), ry(q, y);
  for (int j = g.hy.first; j <= g.hy.last; ++j)
    for (int i = g.hx.first; i <= g.hx.last; ++i) {
      if (g.hy.vertex_label(j) != g.hx.vertex_label(i)) continue;
      HQVertex v{j, i};
      for (int rho : {-1, 1}) {
        LexResult c = lex_compare(q, reading(q, ry.bar, j, rho), reading(q, rx.bar, i, rho));
        if (c.delta != 0) continue;
        if (c.cmp == Cmp::GT) ++v.red;
        if (c.cmp == Cmp::LT) ++v.blue;
      }
      if (v.red) v.colors |= Red;
      if (v.blue) v.colors |= Blue;
      v.boundary = g.hy.is_boundary(j) || g.hx.is_boundary(i);
      g.index[{j, i}] = static_cast<int>(g.vertices.size());
      g.vertices.push_back(v);
    }
  auto add = [&](int sj, int si, int tj, int ti, HQKind kind, int ye, int xe) {
    int s = g.find(sj, si), t = g.find(tj, ti);
    if (s < 0 || t < 0) throw TheoremViolation("build_HQ: arrow endpoint outside H_0");
    g.arrows.push_back(HQArrow{s, t, kind, ye, xe});
  };
  for (size_t a = 0; a < g.hy.edges.size(); ++a) {
    const HEdge& nu = g.hy.edges[a];
    for (size_t b = 0; b < g.hx.edges.size(); ++b) {
      const HEdge& mu = g.hx.edges[b];
      if (nu.image != mu.image) continue;
      const int ya = static_cast<int>(a), xb = static_cast<int>(b);
      if (nu.loop == mu.loop) add(nu.src, mu.src, nu.tgt, mu.tgt, HQKind::Plus, ya, xb);
      if (!nu.loop && !mu.loop && q.arrows[static_cast<size_t>(nu.image)].special)
        add(nu.tgt, mu.src, nu.src, mu.tgt, HQKind::Cross, ya, xb);
      if (!nu.loop && mu.loop) add(nu.tgt, mu.src, nu.src, mu.tgt, HQKind::OMinus, ya, xb);
      if (nu.loop && !mu.loop) add(nu.src, mu.src, nu.tgt, mu.tgt, HQKind::OPlus, ya, xb);
    }
  }
  for (const auto& a : g.arrows) {
    if (a.kind == HQKind::Cross) {
      g.vertices[static_cast<size_t>(a.tgt)].colors |= Orange;
      g.vertices[static_cast<size_t>(a.src)].colors |= Cyan;
    } else if (a.kind != HQKind::Plus) {
      g.vertices[static_cast<size_t>(a.tgt)].colors |= Purple;
      g.vertices[static_cast<size_t>(a.src)].colors |= Teal;
    }
  }
  return g;
}

std::vector<Component> components(const HomGraph& g, const std::vector<HQKind>& kinds) {
  const size_t n = g.vertices.size();
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto used = [&](HQKind k) { return std::find(kinds.begin(), kinds.end(), k) != kinds.end(); };
  for (const auto& a : g.arrows)
    if (used(a.kind)) parent[root(static_cast<size_t>(a.src))] = root(static_cast<size_t>(a.tgt));
  std::map<size_t, size_t> slot;
  std::vector<Component> out;
  for (size_t v = 0; v < n; ++v) {
    auto [it, fresh] = slot.emplace(root(v), out.size());
    if (fresh) out.emplace_back();
    out[it->second].vertices.push_back(static_cast<int>(v));
  }
  for (size_t k = 0; k < g.arrows.size(); ++k) {
    const auto& a = g.arrows[k];
    if (used(a.kind)) out[slot[root(static_cast<size_t>(a.src))]].arrows.push_back(static_cast<int>(k));
  }
  for (auto& c : out) {
    int loops = 0, edges = 0;
    for (int k : c.arrows) (g.arrows[static_cast<size_t>(k)].src == g.arrows[static_cast<size_t>(k)].tgt ? loops : edges)++;
    c.n = static_cast<int>(c.vertices.size());
    if (edges == c.n) c.shape = Shape::At;
    else c.shape = loops == 0 ? Shape::A : loops == 1 ? Shape::Dp : Shape::Dtp;
  }
  return out;
}

int ComponentReport::count_real() const {
  return static_cast<int>(std::count_if(lines.begin(), lines.end(), [](const LineReport& l) { return l.real; }));
}
int ComponentReport::count_long() const {
  std::set<int> f;
  for (const auto& l : lines)
    if (l.long_line) f.insert(l.full);
  return static_cast<int>(f.size());
}
int ComponentReport::count_kiss() const {
  return static_cast<int>(std::count_if(lines.begin(), lines.end(), [](const LineReport& l) { return l.kiss; }));
}
int ComponentReport::count_dual_kiss() const {
  return static_cast<int>(std::count_if(lines.begin(), lines.end(), [](const LineReport& l) { return l.dual_kiss; }));
}

namespace {

unsigned colors_of(const HomGraph& g, const Component& c) {
  unsigned u = 0;
  for (int v : c.vertices) u |= g.vertices[static_cast<size_t>(v)].colors;
  return u;
}

std::vector<int> component_of(size_t n, const std::vector<Component>& cs) {
  std::vector<int> out(n, -1);
  for (size_t k = 0; k < cs.size(); ++k)
    for (int v : cs[k].vertices) out[static_cast<size_t>(v)] = static_cast<int>(k);
  return out;
}

// Vertices of valency at most one inside the component (loops once).
std::vector<int> endpoints(const HomGraph& g, const Component& c) {
  std::vector<int> out;
  for (int v : c.vertices) {
    int val = 0;
    for (int k : c.arrows) {
      const auto& a = g.arrows[static_cast<size_t>(k)];
      if (a.src == v) ++val;
      if (a.tgt == v && a.src != v) ++val;
    }
    if (val <= 1) out.push_back(v);
  }
  return out;
}

}  // namespace

ComponentReport classify_components(const HomGraph& g) {
  const Quiver& q = *g.q;
  ComponentReport r;
  r.plus = components(g, {HQKind::Plus});
  r.plus_o = components(g, {HQKind::Plus, HQKind::OMinus, HQKind::OPlus});
  r.full = components(g, {HQKind::Plus, HQKind::Cross, HQKind::OMinus, HQKind::OPlus});
  auto in_o = component_of(g.vertices.size(), r.plus_o);
  auto in_f = component_of(g.vertices.size(), r.full);
  Readings rx(q, g.hx.word), ry(q, g.hy.word);

  auto at = [&](int v) { return g.vertices[static_cast<size_t>(v)]; };
  auto cond_real = [&](int v) {
    for (int d : {1, -1})
      for (int rho : {-1, 1})
        if (!leq(q, reading(q, ry.hat(d), at(v).j, rho), reading(q, rx.hat(d), at(v).i, rho))) return false;
    return true;
  };
  auto cond_hline = [&](int v) {
    for (int rho : {-1, 1})
      if (!leq(q, reading(q, ry.hat(1), at(v).j, rho), reading(q, rx.hat(-1), at(v).i, rho))) return false;
    return true;
  };
  auto cond_long = [&](int v) {
    for (int rho : {-1, 1})
      if (!leq(q, reading(q, ry.bar, at(v).j, rho), reading(q, rx.bar, at(v).i, rho))) return false;
    return true;
  };
  auto cond_diag = [&](int v) {
    for (int rho : {-1, 1})
      if (lex_compare(q, reading(q, ry.bar, at(v).j, rho), reading(q, rx.bar, at(v).i, rho)).cmp != Cmp::EQ)
        return false;
    return true;
  };
  // Evaluates `cond` on every vertex; returns the value at the first one.
  auto uniform = [&](const Component& c, auto cond, bool& same) {
    bool first = cond(c.vertices.front());
    for (int v : c.vertices)
      if (cond(v) != first) same = false;
    return first;
  };

  for (const auto& c : r.plus) {
    LineReport l;
    l.line = c;
    l.outer = in_o[static_cast<size_t>(c.vertices.front())];
    l.full = in_f[static_cast<size_t>(c.vertices.front())];
    unsigned own = colors_of(g, c);
    unsigned outer = colors_of(g, r.plus_o[static_cast<size_t>(l.outer)]);
    unsigned full = colors_of(g, r.full[static_cast<size_t>(l.full)]);
    l.real = !(own & (Red | Orange | Purple));
    l.hline = !(outer & (Red | Orange));
    l.long_line = !(full & Red);
    l.dual_real = !(own & (Blue | Cyan | Teal));
    l.dual_hline = !(outer & (Blue | Cyan));
    l.dual_long = !(full & Blue);
    l.endpoints = endpoints(g, c);
    bool open = std::none_of(l.endpoints.begin(), l.endpoints.end(), [&](int v) { return at(v).boundary; });
    l.kiss = l.real && open;
    l.dual_kiss = l.dual_real && open;
    l.diagonal = std::any_of(c.vertices.begin(), c.vertices.end(), cond_diag);
    l.char_real = uniform(c, cond_real, l.char_uniform);
    l.char_hline = uniform(r.plus_o[static_cast<size_t>(l.outer)], cond_hline, l.char_uniform);
    l.char_long = uniform(r.full[static_cast<size_t>(l.full)], cond_long, l.char_uniform);
    r.lines.push_back(std::move(l));
  }
  return r;
}

std::vector<std::pair<int, int>> real_long_bijection(const HomGraph& g, const ComponentReport& r) {
  std::map<int, std::vector<int>> by_full;
  for (size_t k = 0; k < r.lines.size(); ++k) {
    const auto& l = r.lines[k];
    if (!l.real) continue;
    if (!l.long_line)
      throw TheoremViolation("real h-line at (" + std::to_string(g.vertices[static_cast<size_t>(l.line.vertices[0])].j) +
                             "," + std::to_string(g.vertices[static_cast<size_t>(l.line.vertices[0])].i) +
                             ") is not inside a long h-line");
    by_full[l.full].push_back(static_cast<int>(k));
  }
  std::vector<std::pair<int, int>> out;
  for (size_t f = 0; f < r.full.size(); ++f) {
    bool is_long = !(colors_of(g, r.full[f]) & Red);
    if (!is_long) continue;
    auto it = by_full.find(static_cast<int>(f));
    size_t cnt = it == by_full.end() ? 0 : it->second.size();
    if (cnt != 1) {
      const auto& v = g.vertices[static_cast<size_t>(r.full[f].vertices[0])];
      throw TheoremViolation("long h-line through (" + std::to_string(v.j) + "," + std::to_string(v.i) + ") contains " +
                             std::to_string(cnt) + " real h-lines");
    }
    out.emplace_back(it->second[0], static_cast<int>(f));
  }
  return out;
}

std::vector<Triple> triples(const HomGraph& g, const ComponentReport& r) {
  std::vector<Triple> out;
  for (size_t k = 0; k < r.lines.size(); ++k) {
    const auto& l = r.lines[k];
    if (!l.real) continue;
    Triple t;
    t.line = static_cast<int>(k);
    t.shape = l.line.shape;
    t.n = l.line.n;
    std::set<int> x_lifted, y_lifted;
    for (int a : l.line.arrows) {
      x_lifted.insert(g.arrows[static_cast<size_t>(a)].x_edge);
      y_lifted.insert(g.arrows[static_cast<size_t>(a)].y_edge);
    }
    t.prop_q = t.prop_s = t.prop_k = t.special_ok = true;
    for (int v : l.endpoints) {
      const auto& hv = g.vertices[static_cast<size_t>(v)];
      // A quotient of M(x) is closed under arrows ending in it, a submodule of
      // M(y) under arrows leaving it.
      for (size_t e = 0; e < g.hx.edges.size(); ++e) {
        const auto& mu = g.hx.edges[e];
        if (!mu.loop && mu.tgt == hv.i && !x_lifted.count(static_cast<int>(e))) t.prop_q = false;
      }
      for (size_t e = 0; e < g.hy.edges.size(); ++e) {
        const auto& nu = g.hy.edges[e];
        if (!nu.loop && nu.src == hv.j && !y_lifted.count(static_cast<int>(e))) t.prop_s = false;
      }
      if (g.hx.is_boundary(hv.i) || g.hy.is_boundary(hv.j)) t.prop_k = false;
    }
    for (int v : l.line.vertices) {
      const auto& hv = g.vertices[static_cast<size_t>(v)];
      if (!g.hx.has_loop(hv.i) || !g.hy.has_loop(hv.j)) continue;
      bool has = std::any_of(l.line.arrows.begin(), l.line.arrows.end(), [&](int a) {
        return g.arrows[static_cast<size_t>(a)].src == v && g.arrows[static_cast<size_t>(a)].tgt == v;
      });
      if (!has) t.special_ok = false;
    }
    out.push_back(t);
  }
  return out;
}

KissTransport kiss_transport(const Fringing& f, const AdmWord& x, const AdmWord& y) {
  KissTransport kt;
  const Quiver& qf = f.extended;
  kt.tx = tau_adm(qf, x);
  kt.ty = tau_adm(qf, y);
  HomGraph g = build_HQ(qf, kt.tx, kt.ty);
  ComponentReport r = classify_components(g);
  const int base_n = f.base.nv();
  for (const auto& l : r.lines) {
    if (!l.real) continue;
    ++kt.real_lines;
    if (l.kiss) ++kt.kisses[{l.line.shape, l.line.n}];
    bool corner = std::any_of(l.line.vertices.begin(), l.line.vertices.end(), [&](int v) {
      const auto& hv = g.vertices[static_cast<size_t>(v)];
      return g.hx.vertex_label(hv.i) >= base_n;
    });
    if (corner) ++kt.corner_lines;
  }
  kt.y_projective = is_projective_adm(f.base, y);
  if (!kt.y_projective) {
    HomGraph h = build_HQ(f.base, x, tau_adm(f.base, y));
    for (const auto& l : classify_components(h).lines)
      if (l.real) ++kt.h_triples[{l.line.shape, l.line.n}];
  }
  return kt;
}

std::string to_dot(const HomGraph& g) {
  std::ostringstream os;
  os << "digraph HQ {\n";
  for (const auto& v : g.vertices) {
    os << "  \"(" << v.j << ',' << v.i << ")\"";
    std::string c = color_str(v.colors);
    if (!c.empty() || v.boundary) {
      os << " [";
      if (!c.empty()) os << "color=\"" << c << '"';
      if (v.boundary) os << (c.empty() ? "" : ", ") << "shape=box";
      os << ']';
    }
    os << ";\n";
  }
  for (const auto& a : g.arrows) {
    const auto& s = g.vertices[static_cast<size_t>(a.src)];
    const auto& t = g.vertices[static_cast<size_t>(a.tgt)];
    const char* style = a.kind == HQKind::Plus ? "solid" : a.kind == HQKind::Cross ? "dashed" : "dotted";
    os << "  \"(" << s.j << ',' << s.i << ")\" -> \"(" << t.j << ',' << t.i << ")\" [style=" << style << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace sga
