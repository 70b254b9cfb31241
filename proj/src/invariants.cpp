#include "sga/invariants.hpp"

#include <algorithm>
#include <climits>
#include <regex>
#include <set>
#include <sstream>

#include "sga/errors.hpp"

namespace sga {

int Tag::component(int k) const {
  if (kind != Pair) return 0;
  return k == 1 ? s1 : s2;
}

Tag parse_tag(const std::string& text) {
  static const std::regex signs(R"(\s*([+-])([+-])\s*)");
  static const std::regex numeric(R"(\s*\(\s*(-?1)\s*,\s*(-?1)\s*\)\s*)");
  static const std::regex stars(R"(\s*(\*\*|\(\s*\*\s*,\s*\*\s*\))\s*)");
  std::smatch m;
  if (std::regex_match(text, m, signs)) return Tag::pair(m[1] == "+" ? 1 : -1, m[2] == "+" ? 1 : -1);
  if (std::regex_match(text, m, numeric)) return Tag::pair(std::stoi(m[1]), std::stoi(m[2]));
  if (std::regex_match(text, m, stars)) return Tag::star_star();
  if (std::regex_match(text, std::regex(R"(\s*\*\s*)"))) return Tag::star();
  throw ParseError("tag: cannot parse '" + text + "'");
}

std::string tag_str(const Tag& s) {
  switch (s.kind) {
    case Tag::Star: return "*";
    case Tag::StarStar: return "(*,*)";
    case Tag::Pair: return "(" + std::to_string(s.s1) + "," + std::to_string(s.s2) + ")";
  }
  return "?";
}

int wt(const Tag& s) { return s.kind == Tag::StarStar ? 2 : 1; }

Tag tag_iota(const Tag& s) { return s.kind == Tag::Pair ? Tag::pair(s.s2, s.s1) : s; }

Tag tag_chi(const Tag& s) { return s.kind == Tag::Pair ? Tag::pair(-s.s1, -s.s2) : s; }

std::vector<Tag> tags_for(WType t) {
  switch (t) {
    case WType::UU: return {Tag::pair(1, 1)};
    case WType::UP: return {Tag::pair(1, -1), Tag::pair(1, 1)};
    case WType::PU: return {Tag::pair(-1, 1), Tag::pair(1, 1)};
    case WType::PP:
      return {Tag::pair(-1, -1), Tag::pair(-1, 1), Tag::pair(1, -1), Tag::pair(1, 1), Tag::star_star()};
    case WType::B: return {Tag::star()};
  }
  return {};
}

bool tag_legal(WType t, const Tag& s) {
  auto all = tags_for(t);
  return std::find(all.begin(), all.end(), s) != all.end();
}

int d2(int a, int b) {
  if (a == 0 && b == 0) return 2;
  if (a == 0 || b == 0) return 1;
  return a == b ? 1 : 0;
}

int d3(const Tag& s, const Tag& t) { return s.kind == Tag::Pair && s == t ? 1 : 0; }

std::string tagged_str(const Quiver& q, const TaggedAdm& z) { return adm_str(q, z.x) + " " + tag_str(z.s); }

TaggedAdm canonical_tagged(const TaggedAdm& z) {
  TaggedAdm a{canonical_rotation(z.x), z.s};
  TaggedAdm b{canonical_rotation(inverse(z.x)), tag_iota(z.s)};
  return std::min(a, b);
}

namespace {

AxModule dihedral_simple(int s, int t, int p) {
  AxModule x;
  x.alg = AlgKind::Dihedral;
  x.p = p;
  x.d = 1;
  x.S = Mat::scalar(1, s, p);
  x.T = Mat::scalar(1, t, p);
  x.name = std::string("W1(") + (s > 0 ? "+" : "-") + "," + (t > 0 ? "+" : "-") + ")";
  return x;
}

void require_legal(const TaggedAdm& z) {
  if (!tag_legal(z.x.type, z.s))
    throw PreconditionError("tag " + tag_str(z.s) + " is not legal for a word of type " + wtype_name(z.x.type));
}

}  // namespace

std::vector<AxModule> simple_family(const AdmWord& x, const Tag& s, int p) {
  if (!tag_legal(x.type, s)) throw PreconditionError("tag " + tag_str(s) + " is not legal for type " + wtype_name(x.type));
  std::vector<AxModule> out;
  switch (x.type) {
    case WType::UU: out.push_back(module_vo(p)); break;
    case WType::UP: out.push_back(module_v(s.s2, p)); break;
    case WType::PU: out.push_back(module_v(s.s1, p)); break;
    case WType::PP:
      if (s.kind == Tag::Pair) {
        out.push_back(dihedral_simple(s.s1, s.s2, p));
      } else {
        for (int t = 2; t < p - 1; ++t) out.push_back(module_vt(1, t, p));
      }
      break;
    case WType::B:
      for (int t = 1; t < p; ++t) out.push_back(module_band(1, t, p));
      break;
  }
  return out;
}

std::vector<int> dim_vector(const Quiver& q, const TaggedAdm& z, int p) {
  return split_dims(build_module(q, z.x, simple_family(z.x, z.s, p).front()));
}

bool punctured_same_vertex(const Quiver& q, const AdmWord& x) {
  if (x.type != WType::PP) return false;
  const Letter& a = x.word.front();
  const Letter& b = x.word.back();
  return is_punctured(q, a) && is_punctured(q, b) && a.id == b.id;
}

std::vector<Tag> s_prime(const Quiver& q, const AdmWord& x) {
  if (punctured_same_vertex(q, x)) return {Tag::pair(-1, -1), Tag::pair(1, 1)};
  return tags_for(x.type);
}

namespace {

std::vector<HEdge> loops_of(const Winding& h) {
  std::vector<HEdge> out;
  for (const auto& e : h.edges)
    if (e.loop) out.push_back(e);
  return out;
}

HEdge loop_edge(int index) {
  HEdge e;
  e.loop = true;
  e.index = index;
  return e;
}

}  // namespace

std::vector<std::pair<int, int>> punctured_pairs(const Quiver& q, const AdmWord& x, const AdmWord& y) {
  std::set<std::pair<int, int>> excluded;
  if (x.is_string() && y.is_string()) {
    if (x == y) excluded = {{0, 0}, {1, 1}};
    else if (x == inverse(y)) excluded = {{1, 0}, {0, 1}};
  }
  std::vector<std::pair<int, int>> out;
  for (const auto& ly : loops_of(build_H(q, y)))
    for (const auto& lx : loops_of(build_H(q, x)))
      if (ly.image == lx.image && !excluded.count({ly.index, lx.index})) out.emplace_back(ly.index, lx.index);
  std::sort(out.begin(), out.end());
  return out;
}

int diag_b(const AdmWord& x, const AdmWord& y) {
  if (!x.in_adm_b() || !y.in_adm_b()) return 0;
  if (canonical_rotation(x) == canonical_rotation(y)) return 1;
  if (canonical_rotation(x) == canonical_rotation(inverse(y))) return -1;
  return 0;
}

int KissCensus::count(Shape s) const {
  auto get = [s](const std::map<Shape, int>& m) {
    auto it = m.find(s);
    return it == m.end() ? 0 : it->second;
  };
  return get(forward) + get(backward);
}

int KissCensus::total() const {
  int n = 0;
  for (Shape s : {Shape::A, Shape::Dp, Shape::At, Shape::Dtp}) n += count(s);
  return n;
}

namespace {

std::map<Shape, int> fringed_kisses(const Quiver& qf, const AdmWord& tx, const AdmWord& ty) {
  std::map<Shape, int> out;
  HomGraph g = build_HQ(qf, tx, ty);
  for (const auto& l : classify_components(g).lines)
    if (l.kiss) ++out[l.line.shape];
  return out;
}

}  // namespace

KissCensus kiss_census(const Fringing& f, const AdmWord& x, const AdmWord& y) {
  const Quiver& qf = f.extended;
  KissCensus c;
  AdmWord tx = tau_adm(qf, x), ty = tau_adm(qf, y);
  c.forward = fringed_kisses(qf, tx, ty);
  c.backward = fringed_kisses(qf, ty, tx);
  c.pairs = punctured_pairs(f.base, x, y);
  c.diag = diag_b(x, y);
  const int at = c.count(Shape::At), dtp = c.count(Shape::Dtp), dp = c.count(Shape::Dp);
  std::string where = adm_str(f.base, x) + " / " + adm_str(f.base, y);
  if (at * dtp != 0 || at + dtp != 2 * std::abs(c.diag))
    throw TheoremViolation("kiss census: affine kisses " + std::to_string(at) + "+" + std::to_string(dtp) +
                           " against band orientation " + std::to_string(c.diag) + " for " + where);
  if (dp != static_cast<int>(c.pairs.size()))
    throw TheoremViolation("kiss census: " + std::to_string(dp) + " D' kisses against " +
                           std::to_string(c.pairs.size()) + " punctured pairs for " + where);
  return c;
}

int e_comb(const KissCensus& c, const Tag& s, const Tag& t) {
  const Tag tc = tag_chi(t);
  int e = c.a() * wt(s) * wt(t);
  for (const auto& [j, i] : c.pairs) e += d2(s.component(i + 1), tc.component(j + 1));
  const Tag sp = c.diag == -1 ? tag_iota(s) : s;
  return e + 2 * std::abs(c.diag) * d3(sp, tc);
}

int e_comb(const Fringing& f, const TaggedAdm& a, const TaggedAdm& b) {
  require_legal(a);
  require_legal(b);
  return e_comb(kiss_census(f, a.x, b.x), a.s, b.s);
}

SourceSinks source_sinks(const Fringing& f, const AdmWord& x) {
  const Quiver& qf = f.extended;
  const int n = f.base.nv();
  SourceSinks ss;
  ss.a_plus.assign(static_cast<size_t>(n), 0);
  ss.a_minus.assign(static_cast<size_t>(n), 0);
  ss.d_plus.assign(static_cast<size_t>(n), {});
  ss.d_minus.assign(static_cast<size_t>(n), {});
  Winding h = build_H(qf, tau_adm(qf, x));
  auto ordinary = [&](int v, bool starting) {
    return std::count_if(h.edges.begin(), h.edges.end(),
                         [&](const HEdge& e) { return !e.loop && (starting ? e.src : e.tgt) == v; });
  };
  for (int v = h.first; v <= h.last; ++v) {
    const int i = h.vertex_label(v);
    if (i >= n) continue;
    if (ordinary(v, true) == 2) ++ss.a_plus[static_cast<size_t>(i)];
    if (ordinary(v, false) == 2) ++ss.a_minus[static_cast<size_t>(i)];
  }
  for (const auto& e : h.edges) {
    if (!e.loop) continue;
    const int i = h.vertex_label(e.src);
    if (ordinary(e.src, false) == 0) ss.d_plus[static_cast<size_t>(i)].push_back(e.index);
    if (ordinary(e.src, true) == 0) ss.d_minus[static_cast<size_t>(i)].push_back(e.index);
  }
  return ss;
}

std::vector<int> g_comb(const Fringing& f, const TaggedAdm& z) {
  require_legal(z);
  SourceSinks ss = source_sinks(f, z.x);
  std::vector<int> g;
  for (const auto& sv : gabriel_presentation(f.base).vertices) {
    const auto i = static_cast<size_t>(sv.v);
    int v = (ss.a_minus[i] - ss.a_plus[i]) * wt(z.s);
    for (int j : ss.d_minus[i]) v += d2(sv.rho, -z.s.component(j + 1));
    for (int j : ss.d_plus[i]) v -= d2(z.s.component(j + 1), sv.rho);
    g.push_back(v);
  }
  return g;
}

int E_formula(const Fringing& f, const AdmWord& x, const AxModule& X, const AdmWord& y, const AxModule& Y) {
  KissCensus c = kiss_census(f, x, y);
  const AxModule yc = twist_chi(Y);
  int e = c.a() * X.dim() * Y.dim();
  for (const auto& [j, i] : c.pairs)
    e += hom_involution(unit_action(x, loop_edge(i), X), unit_action(y, loop_edge(j), yc));
  if (c.diag != 0) {
    auto prime = [&](const AxModule& z) { return c.diag == 1 ? z : twist_iota(z); };
    e += hom_ax(prime(X), yc) + hom_ax(prime(Y), twist_chi(X));
  }
  return e;
}

std::vector<int> g_formula(const Fringing& f, const AdmWord& x, const AxModule& X) {
  SourceSinks ss = source_sinks(f, x);
  const AdmWord tx = tau_adm(f.extended, x);
  const AxModule xc = twist_chi(X);
  std::vector<int> g;
  for (const auto& sv : gabriel_presentation(f.base).vertices) {
    const auto i = static_cast<size_t>(sv.v);
    int v = (ss.a_minus[i] - ss.a_plus[i]) * X.dim();
    const Mat rho = Mat::scalar(1, sv.rho, X.p);
    for (int j : ss.d_minus[i]) v += hom_involution(rho, unit_action(tx, loop_edge(j), xc));
    for (int j : ss.d_plus[i]) v -= hom_involution(unit_action(tx, loop_edge(j), X), rho);
    g.push_back(v);
  }
  return g;
}

int E_generic_oracle(const Quiver& q, const TaggedAdm& a, const TaggedAdm& b, int p) {
  int best = INT_MAX;
  for (const auto& X : simple_family(a.x, a.s, p))
    for (const auto& Y : simple_family(b.x, b.s, p)) best = std::min(best, E_oracle(q, a.x, X, b.x, Y));
  return best;
}

bool is_tau_generic(const Fringing& f, const TaggedAdm& z) { return e_comb(f, z, z) == 0; }

bool simplified_check(const Fringing& f, const TaggedAdm& z) {
  require_legal(z);
  if (kiss_census(f, z.x, z.x).a() != 0) return false;
  auto sp = s_prime(f.base, z.x);
  return std::find(sp.begin(), sp.end(), z.s) != sp.end();
}

ComponentTable enumerate_components(const Fringing& f, int max_len, int p) {
  ComponentTable t;
  AdmSet adm = enumerate_adm(f.base, max_len);
  t.truncated = adm.truncated;
  std::set<TaggedAdm> seen;
  for (const auto& x : adm.all())
    for (const Tag& s : tags_for(x.type)) {
      TaggedAdm z = canonical_tagged({x, s});
      if (!seen.insert(z).second) continue;
      const bool generic = is_tau_generic(f, z);
      if (generic != simplified_check(f, z))
        throw TheoremViolation("tau-generic tests disagree on " + tagged_str(f.base, z));
      if (generic) t.classes.push_back({z, dim_vector(f.base, z, p), g_comb(f, z)});
    }
  const size_t n = t.classes.size();
  t.e.assign(n, std::vector<int>(n, 0));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b) {
      KissCensus c = kiss_census(f, t.classes[a].z.x, t.classes[b].z.x);
      t.e[a][b] = e_comb(c, t.classes[a].z.s, t.classes[b].z.s);
      t.e[b][a] = t.e[a][b];
    }
  return t;
}

std::string components_tsv(const Quiver& q, const ComponentTable& t) {
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s;
  };
  std::ostringstream os;
  os << "id\tword\ttag\ttype\tdim\tg\n";
  for (size_t k = 0; k < t.classes.size(); ++k) {
    const auto& c = t.classes[k];
    os << k << '\t' << adm_str(q, c.z.x) << '\t' << tag_str(c.z.s) << '\t' << wtype_name(c.z.x.type) << '\t'
       << join(c.dim) << '\t' << join(c.g) << '\n';
  }
  os << "# e\n";
  for (const auto& row : t.e) {
    for (size_t k = 0; k < row.size(); ++k) os << (k ? "\t" : "") << row[k];
    os << '\n';
  }
  if (t.truncated) os << "# truncated\n";
  return os.str();
}

}  // namespace sga
