#include "sga/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "sga/errors.hpp"

namespace sga {

int Quiver::add_vertex(const std::string& name) {
  vertices.push_back(name);
  return nv() - 1;
}

int Quiver::add_arrow(const std::string& name, int src, int s1, int tgt, int t1) {
  arrows.push_back(Arrow{name, src, s1, tgt, t1, false, -1});
  return na() - 1;
}

int Quiver::add_special_loop(const std::string& name, int v) {
  int idx = na();
  arrows.push_back(Arrow{name, v, -1, v, -1, true, idx});
  return idx;
}

int Quiver::vertex(const std::string& name) const {
  for (int i = 0; i < nv(); ++i)
    if (vertices[i] == name) return i;
  return -1;
}

int Quiver::arrow(const std::string& name) const {
  for (int i = 0; i < na(); ++i)
    if (arrows[i].name == name) return i;
  return -1;
}

int Quiver::out_at(Slot s) const {
  for (int i = 0; i < na(); ++i)
    if (arrows[i].s() == s) return i;
  return -1;
}

int Quiver::in_at(Slot s) const {
  for (int i = 0; i < na(); ++i)
    if (arrows[i].t() == s) return i;
  return -1;
}

int Quiver::special_loop_at(int v) const {
  for (int i = 0; i < na(); ++i)
    if (arrows[i].special && arrows[i].is_loop() && arrows[i].src == v) return i;
  return -1;
}

int Quiver::special_count() const {
  return static_cast<int>(std::count_if(arrows.begin(), arrows.end(), [](const Arrow& a) { return a.special; }));
}

namespace {

std::string slot_str(const Quiver& q, Slot s) {
  return "(" + q.vertices[s.v] + "," + (s.sign > 0 ? "+" : "-") + ")";
}

// Composability graph: edge b -> a when a can follow b in an admissible path.
std::vector<std::vector<int>> composable(const Quiver& q) {
  std::vector<std::vector<int>> next(q.na());
  for (int b = 0; b < q.na(); ++b)
    for (int a = 0; a < q.na(); ++a)
      if (q.arrows[a].s() == q.arrows[b].t().neg()) next[b].push_back(a);
  return next;
}

}  // namespace

std::optional<int> longest_admissible_path(const Quiver& q) {
  auto next = composable(q);
  std::vector<int> state(q.na(), 0), best(q.na(), 1);
  bool cyclic = false;
  std::function<void(int)> dfs = [&](int u) {
    state[u] = 1;
    for (int w : next[u]) {
      if (state[w] == 1) cyclic = true;
      if (state[w] == 0) dfs(w);
      if (state[w] == 2) best[u] = std::max(best[u], best[w] + 1);
    }
    state[u] = 2;
  };
  for (int a = 0; a < q.na(); ++a)
    if (state[a] == 0) dfs(a);
  if (cyclic) return std::nullopt;
  int m = 0;
  for (int b : best) m = std::max(m, b);
  return m;
}

ValidationReport validate(const Quiver& q) {
  ValidationReport r;
  auto fail_polar = [&](const std::string& msg) {
    r.is_polarized = false;
    r.diagnostics.push_back(msg);
  };
  std::set<std::string> names;
  for (const auto& a : q.arrows)
    if (!names.insert(a.name).second) fail_polar("duplicate arrow name '" + a.name + "'");
  std::set<std::string> vnames;
  for (const auto& v : q.vertices)
    if (!vnames.insert(v).second) fail_polar("duplicate vertex name '" + v + "'");
  std::map<Slot, int> outs, ins;
  for (int i = 0; i < q.na(); ++i) {
    const Arrow& a = q.arrows[i];
    if (a.src < 0 || a.src >= q.nv() || a.tgt < 0 || a.tgt >= q.nv()) {
      fail_polar("arrow '" + a.name + "' references an unknown vertex");
      continue;
    }
    if (auto [it, ok] = outs.emplace(a.s(), i); !ok)
      fail_polar("injectivity breach: arrows '" + q.arrows[it->second].name + "' and '" + a.name +
                 "' share source slot " + slot_str(q, a.s()));
    if (auto [it, ok] = ins.emplace(a.t(), i); !ok)
      fail_polar("injectivity breach: arrows '" + q.arrows[it->second].name + "' and '" + a.name +
                 "' share target slot " + slot_str(q, a.t()));
    if (a.special) {
      if (a.s1 != -1 || a.t1 != -1) fail_polar("special arrow '" + a.name + "' must have polarization (-,-)");
      if (a.partner < 0 || a.partner >= q.na()) {
        fail_polar("special arrow '" + a.name + "' has no partner");
        continue;
      }
      const Arrow& b = q.arrows[a.partner];
      if (!b.special || b.partner != i || !(b.s() == a.t()) || !(b.t() == a.s()))
        fail_polar("broken special pairing at '" + a.name + "'");
    }
  }
  if (!r.is_polarized) {
    r.is_admissible = r.is_skewed_gentle = r.is_gentle = false;
    return r;
  }
  r.is_admissible = longest_admissible_path(q).has_value();
  if (!r.is_admissible) r.diagnostics.push_back("not admissible: infinitely many admissible paths");
  bool loops_only = true;
  for (const auto& a : q.arrows)
    if (a.special && !a.is_loop()) loops_only = false;
  r.is_skewed_gentle = r.is_admissible && loops_only;
  r.is_gentle = r.is_admissible && q.special_count() == 0;
  return r;
}

Quiver hat_quiver(const Quiver& q) {
  Quiver h = q;
  for (auto& a : h.arrows) {
    a.special = false;
    a.partner = -1;
  }
  return h;
}

int GabrielPresentation::vertex_index(int v, int rho) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].v == v && vertices[i].rho == rho) return static_cast<int>(i);
  return -1;
}

std::string GabrielPresentation::vertex_name(const Quiver& q, int idx) const {
  const auto& sv = vertices[idx];
  return "(" + q.vertices[sv.v] + "," + (sv.rho == 0 ? "o" : sv.rho > 0 ? "+" : "-") + ")";
}

GabrielPresentation gabriel_presentation(const Quiver& q) {
  GabrielPresentation g;
  auto signs = [&](int v) { return q.is_special_vertex(v) ? std::vector<int>{-1, 1} : std::vector<int>{0}; };
  for (int v = 0; v < q.nv(); ++v)
    for (int rho : signs(v)) g.vertices.push_back({v, rho});
  for (int a = 0; a < q.na(); ++a) {
    const Arrow& ar = q.arrows[a];
    if (ar.special) continue;
    for (int tr : signs(ar.tgt))
      for (int sr : signs(ar.src))
        g.arrows.push_back({a, tr, sr, g.vertex_index(ar.src, sr), g.vertex_index(ar.tgt, tr)});
  }
  auto split = [&](int a, int tr, int sr) {
    for (size_t i = 0; i < g.arrows.size(); ++i)
      if (g.arrows[i].arrow == a && g.arrows[i].tgt_rho == tr && g.arrows[i].src_rho == sr) return static_cast<int>(i);
    throw std::logic_error("split arrow missing");
  };
  for (int a = 0; a < q.na(); ++a) {
    for (int b = 0; b < q.na(); ++b) {
      const Arrow &A = q.arrows[a], &B = q.arrows[b];
      if (A.special || B.special || !(A.s() == B.t())) continue;
      for (int tr : signs(A.tgt))
        for (int rr : signs(B.src)) {
          std::vector<SplitPath> rel;
          for (int sr : signs(A.src)) rel.push_back({split(a, tr, sr), split(b, sr, rr)});
          g.relations.push_back(rel);
        }
    }
  }
  return g;
}

Fringing auto_fringe(const Quiver& q) {
  Fringing f{q, q, {}, {}};
  Quiver& e = f.extended;
  int counter = 0;
  auto fresh = [&]() {
    std::string name;
    do name = "f" + std::to_string(++counter);
    while (e.vertex(name) >= 0 || e.arrow(name) >= 0);
    return name;
  };
  for (int v = 0; v < q.nv(); ++v) {
    for (int dir = 0; dir < 2; ++dir) {  // 0: incoming slots, 1: outgoing slots
      for (int sign : {-1, 1}) {
        Slot s{v, sign};
        if (dir == 1 && q.out_at(s) < 0) {
          std::string name = fresh();
          int fv = e.add_vertex(name);
          f.fringe_vertices.push_back(fv);
          f.fringe_arrows.push_back(e.add_arrow(name + "a", v, sign, fv, 1));
        }
        if (dir == 0 && q.in_at(s) < 0) {
          std::string name = fresh();
          int fv = e.add_vertex(name);
          f.fringe_vertices.push_back(fv);
          f.fringe_arrows.push_back(e.add_arrow(name + "a", fv, 1, v, sign));
        }
      }
    }
  }
  return f;
}

namespace {

// Reorders `extended` so that base vertices and arrows come first, in base order.
std::optional<Quiver> align(const Quiver& base, const Quiver& extended, std::string* why) {
  auto fail = [&](const std::string& m) -> std::optional<Quiver> {
    if (why) *why = m;
    return std::nullopt;
  };
  std::vector<int> vmap(extended.nv(), -1);
  Quiver out;
  for (const auto& v : base.vertices) {
    int idx = extended.vertex(v);
    if (idx < 0) return fail("vertex '" + v + "' of the base is missing");
    vmap[idx] = out.add_vertex(v);
  }
  for (int i = 0; i < extended.nv(); ++i)
    if (vmap[i] < 0) vmap[i] = out.add_vertex(extended.vertices[i]);
  std::vector<bool> used(extended.na(), false);
  for (const auto& a : base.arrows) {
    int idx = extended.arrow(a.name);
    if (idx < 0) return fail("arrow '" + a.name + "' of the base is missing");
    Arrow b = extended.arrows[idx];
    b.src = vmap[b.src];
    b.tgt = vmap[b.tgt];
    Arrow ref = a;
    ref.partner = -1;
    Arrow cmp = b;
    cmp.partner = -1;
    if (!(ref == cmp)) return fail("arrow '" + a.name + "' differs from the base");
    used[idx] = true;
    out.arrows.push_back(b);
  }
  for (int i = 0; i < extended.na(); ++i) {
    if (used[i]) continue;
    Arrow b = extended.arrows[i];
    b.src = vmap[b.src];
    b.tgt = vmap[b.tgt];
    out.arrows.push_back(b);
  }
  for (auto& a : out.arrows)
    if (a.special && a.partner >= 0 && a.partner < extended.na()) a.partner = out.arrow(extended.arrows[a.partner].name);
  return out;
}

}  // namespace

bool check_fringing(const Quiver& base, const Quiver& extended, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  auto aligned = align(base, extended, why);
  if (!aligned) return false;
  const Quiver& e = *aligned;
  auto rep = validate(e);
  if (!rep.is_skewed_gentle) return fail("extended quiver is not skewed-gentle and admissible");
  const int nb = base.nv();
  for (int v = 0; v < nb; ++v) {
    int ends = 0;
    for (const auto& a : e.arrows) ends += (a.src == v) + (a.tgt == v);
    if (ends != 4) return fail("interior vertex '" + e.vertices[v] + "' has " + std::to_string(ends) + " arrow ends");
  }
  for (int i = base.na(); i < e.na(); ++i) {
    const Arrow& a = e.arrows[i];
    if (a.special) return fail("fringe arrow '" + a.name + "' is special");
    bool src_in = a.src < nb, tgt_in = a.tgt < nb;
    if (src_in == tgt_in) return fail("fringe arrow '" + a.name + "' must join a fringe vertex with an interior one");
    if (src_in && a.t1 != 1) return fail("fringe arrow '" + a.name + "' needs polarization + at its fringe end");
    if (!src_in && a.s1 != 1) return fail("fringe arrow '" + a.name + "' needs source polarization +");
  }
  return true;
}

Fringing make_fringing(const Quiver& base, const Quiver& extended) {
  std::string why;
  if (!check_fringing(base, extended, &why)) throw PreconditionError("invalid fringing: " + why);
  Fringing f{base, *align(base, extended, nullptr), {}, {}};
  for (int v = base.nv(); v < f.extended.nv(); ++v) f.fringe_vertices.push_back(v);
  for (int a = base.na(); a < f.extended.na(); ++a) f.fringe_arrows.push_back(a);
  return f;
}

}  // namespace sga
