#include "sga/rep.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <regex>

#include "sga/errors.hpp"

namespace sga {

AlgKind algebra_of(WType t) {
  switch (t) {
    case WType::UU: return AlgKind::Field;
    case WType::UP:
    case WType::PU: return AlgKind::Involution;
    case WType::PP: return AlgKind::Dihedral;
    case WType::B: return AlgKind::Laurent;
  }
  return AlgKind::Field;
}

const char* alg_name(AlgKind a) {
  switch (a) {
    case AlgKind::Field: return "k";
    case AlgKind::Involution: return "k[T]/(T^2-1)";
    case AlgKind::Dihedral: return "k<S,T>/(S^2-1,T^2-1)";
    case AlgKind::Laurent: return "k[T,T^-1]";
  }
  return "?";
}

namespace {

int norm(int v, int p) { return ((v % p) + p) % p; }

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string sign_str(int s) { return s > 0 ? "+" : "-"; }

}  // namespace

Mat s_tilde(int m, int sign, int p) {
  Mat s(m, m, p);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= i; ++j) {
      long long v = binom(i, j) % p;
      if ((i + 1) % 2) v = -v;
      if (sign < 0 && (i + j) % 2) v = -v;
      s.set(i - 1, j - 1, static_cast<int>(v % p));
    }
  return s;
}

AxModule module_vo(int p) {
  AxModule x;
  x.alg = AlgKind::Field;
  x.name = "Vo";
  x.p = p;
  return x;
}

AxModule module_v(int sign, int p) {
  AxModule x;
  x.alg = AlgKind::Involution;
  x.name = "V" + sign_str(sign);
  x.T = Mat::scalar(1, sign, p);
  x.p = p;
  return x;
}

AxModule module_band(int m, int t, int p) {
  if (norm(t, p) == 0) throw PreconditionError("band parameter must be nonzero");
  AxModule x;
  x.alg = AlgKind::Laurent;
  x.name = "V(" + std::to_string(m) + "," + std::to_string(norm(t, p)) + ")";
  x.T = jordan_block(m, t, p);
  x.p = p;
  x.d = m;
  return x;
}

AxModule module_w(int m, int sign, bool chi, int p) {
  AxModule x;
  x.alg = AlgKind::Dihedral;
  x.p = p;
  x.d = m;
  Mat st = s_tilde(m, sign, p);
  x.S = st * jordan_block(m, sign, p);
  x.T = st;
  x.name = std::string(chi ? "Wchi(" : "W(") + std::to_string(m) + "," + sign_str(sign) + ")";
  if (chi) {
    x.S = x.S.scaled(-1);
    x.T = x.T.scaled(-1);
  }
  return x;
}

AxModule module_vt(int m, int s, int p) {
  s = norm(s, p);
  if (s == 0 || s == 1 || s == p - 1) throw PreconditionError("Vt(m,s) needs s outside {0,1,-1}");
  AxModule x;
  x.alg = AlgKind::Dihedral;
  x.p = p;
  x.d = 2 * m;
  x.name = "Vt(" + std::to_string(m) + "," + std::to_string(s) + ")";
  Mat j = jordan_block(m, s, p);
  x.S = Mat(2 * m, 2 * m, p);
  x.S.put(0, m, j);
  x.S.put(m, 0, j.inverse());
  x.T = Mat(2 * m, 2 * m, p);
  x.T.put(0, m, Mat::identity(m, p));
  x.T.put(m, 0, Mat::identity(m, p));
  return x;
}

// R (x)_{k[X,X^-1]} V_{m,s} in the basis (1 (x) v, T (x) v), where X = ST. T swaps
// the halves, X acts by J on the first and by J^{-1} on the second, and S = XT.
AxModule induced_dihedral(int m, int s, int p) {
  AxModule x;
  x.alg = AlgKind::Dihedral;
  x.p = p;
  x.d = 2 * m;
  x.name = "R(x)V(" + std::to_string(m) + "," + std::to_string(norm(s, p)) + ")";
  Mat j = jordan_block(m, s, p);
  x.T = Mat(2 * m, 2 * m, p);
  x.T.put(0, m, Mat::identity(m, p));
  x.T.put(m, 0, Mat::identity(m, p));
  Mat xm(2 * m, 2 * m, p);
  xm.put(0, 0, j);
  xm.put(m, m, j.inverse());
  x.S = xm * x.T;
  return x;
}

AxModule direct_sum(const AxModule& a, const AxModule& b) {
  if (a.alg != b.alg) throw PreconditionError("direct sum of modules over different algebras");
  AxModule x = a;
  x.name = a.name + "+" + b.name;
  x.d = a.d + b.d;
  auto sum = [&](const Mat& u, const Mat& v) {
    if (u.rows() == 0) return u;
    Mat m(x.d, x.d, a.p);
    m.put(0, 0, u);
    m.put(a.d, a.d, v);
    return m;
  };
  x.S = sum(a.S, b.S);
  x.T = sum(a.T, b.T);
  return x;
}

AxModule twist_chi(const AxModule& X) {
  AxModule y = X;
  if (X.alg == AlgKind::Field || X.alg == AlgKind::Laurent) return y;
  y.T = X.T.scaled(-1);
  if (X.alg == AlgKind::Dihedral) y.S = X.S.scaled(-1);
  y.name = X.name + "^chi";
  return y;
}

AxModule twist_iota(const AxModule& X) {
  AxModule y = X;
  if (X.alg == AlgKind::Dihedral) {
    std::swap(y.S, y.T);
    y.name = X.name + "^iota";
  } else if (X.alg == AlgKind::Laurent) {
    y.T = X.T.inverse();
    y.name = X.name + "^iota";
  }
  return y;
}

AxModule twist_neg_t(const AxModule& X) {
  AxModule y = X;
  if (X.alg == AlgKind::Field) return y;
  y.T = X.T.scaled(-1);
  y.name = X.name + "^-T";
  return y;
}

AxModule parse_module(const std::string& text, int p) {
  static const std::regex simple(R"(\s*V([o+-])\s*)");
  static const std::regex param(R"(\s*(V|W|Wchi|Vt)\(\s*(\d+)\s*,\s*([+-]|-?\d+)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(text, m, simple)) {
    if (m[1] == "o") return module_vo(p);
    return module_v(m[1] == "+" ? 1 : -1, p);
  }
  if (!std::regex_match(text, m, param)) throw ParseError("module: cannot parse '" + text + "'");
  const std::string kind = m[1];
  const int dim = std::stoi(m[2]);
  const std::string arg = m[3];
  if (dim < 1) throw ParseError("module: dimension must be positive in '" + text + "'");
  const bool is_sign = arg == "+" || arg == "-";
  if (kind == "W" || kind == "Wchi") {
    if (!is_sign) throw ParseError("module: W expects a sign in '" + text + "'");
    return module_w(dim, arg == "+" ? 1 : -1, kind == "Wchi", p);
  }
  if (is_sign) throw ParseError("module: expected a field element in '" + text + "'");
  const int t = std::stoi(arg);
  if (kind == "V") return module_band(dim, t, p);
  return module_vt(dim, t, p);
}

bool module_ok(const AxModule& X) {
  const Mat one = Mat::identity(X.d, X.p);
  switch (X.alg) {
    case AlgKind::Field: return true;
    case AlgKind::Involution: return X.T * X.T == one;
    case AlgKind::Dihedral: return X.T * X.T == one && X.S * X.S == one;
    case AlgKind::Laurent: return X.T.rank() == X.d;
  }
  return false;
}

bool module_fits(WType t, const AxModule& X) { return algebra_of(t) == X.alg; }

std::vector<AxModule> indecomposables_Ax(WType t, int max_dim, int p) {
  if (!is_odd_prime(p)) throw PreconditionError("field characteristic must be an odd prime");
  std::vector<AxModule> out;
  if (max_dim < 1) return out;
  switch (algebra_of(t)) {
    case AlgKind::Field: out.push_back(module_vo(p)); break;
    case AlgKind::Involution:
      out.push_back(module_v(1, p));
      out.push_back(module_v(-1, p));
      break;
    case AlgKind::Laurent:
      for (int m = 1; m <= max_dim; ++m)
        for (int s = 1; s < p; ++s) out.push_back(module_band(m, s, p));
      break;
    case AlgKind::Dihedral:
      for (int m = 1; m <= max_dim; ++m) {
        for (int sign : {1, -1})
          for (bool chi : {false, true}) out.push_back(module_w(m, sign, chi, p));
        if (2 * m > max_dim) continue;
        for (int s = 2; s < p - 1; ++s)
          if (s <= gf_inv(s, p)) out.push_back(module_vt(m, s, p));
      }
      break;
  }
  return out;
}

namespace {

// Solution dimension of f A_k = B_k f over the pairs (A_k, B_k), f of size rows x cols.
int intertwiners(const std::vector<std::pair<Mat, Mat>>& gens, int rows, int cols, int p) {
  LinearSystem sys(rows * cols, p);
  for (const auto& [a, b] : gens)
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        std::vector<std::pair<int, int>> eq;
        for (int k = 0; k < cols; ++k) eq.emplace_back(r * cols + k, a.at(k, c));
        for (int l = 0; l < rows; ++l) eq.emplace_back(l * cols + c, -b.at(r, l));
        sys.add(eq);
      }
  return sys.solution_dim();
}

}  // namespace

int hom_ax(const AxModule& X, const AxModule& Y) {
  if (X.alg != Y.alg) throw PreconditionError("Hom between modules over different algebras");
  std::vector<std::pair<Mat, Mat>> gens;
  if (X.alg != AlgKind::Field) gens.emplace_back(X.T, Y.T);
  if (X.alg == AlgKind::Dihedral) gens.emplace_back(X.S, Y.S);
  return intertwiners(gens, Y.d, X.d, X.p);
}

std::vector<Mat> hom_ax_basis(const AxModule& X, const AxModule& Y) {
  if (X.alg != Y.alg) throw PreconditionError("Hom between modules over different algebras");
  std::vector<std::pair<Mat, Mat>> gens;
  if (X.alg != AlgKind::Field) gens.emplace_back(X.T, Y.T);
  if (X.alg == AlgKind::Dihedral) gens.emplace_back(X.S, Y.S);
  const int rows = Y.d, cols = X.d;
  LinearSystem sys(rows * cols, X.p);
  for (const auto& [a, b] : gens)
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        std::vector<std::pair<int, int>> eq;
        for (int k = 0; k < cols; ++k) eq.emplace_back(r * cols + k, a.at(k, c));
        for (int l = 0; l < rows; ++l) eq.emplace_back(l * cols + c, -b.at(r, l));
        sys.add(eq);
      }
  Mat sol = sys.solutions();
  std::vector<Mat> out;
  for (int k = 0; k < sol.cols(); ++k) {
    Mat f(rows, cols, X.p);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) f.set(r, c, sol.at(r * cols + c, k));
    out.push_back(f);
  }
  return out;
}

namespace {

// Visits every linear combination of `basis`; stops when `visit` returns true.
template <class F>
bool for_each_combination(const std::vector<Mat>& basis, int p, F visit) {
  std::vector<int> c(basis.size(), 0);
  while (true) {
    Mat f = basis.front().scaled(0);
    for (size_t k = 0; k < basis.size(); ++k) f = f + basis[k].scaled(c[k]);
    if (visit(f)) return true;
    size_t k = 0;
    while (k < c.size() && ++c[k] == p) c[k++] = 0;
    if (k == c.size()) return false;
  }
}

}  // namespace

std::optional<Mat> ax_iso_witness(const AxModule& X, const AxModule& Y) {
  if (X.d != Y.d || X.alg != Y.alg) return std::nullopt;
  auto basis = hom_ax_basis(X, Y);
  if (basis.empty()) return std::nullopt;
  std::optional<Mat> found;
  for_each_combination(basis, X.p, [&](const Mat& f) {
    if (f.rank() != X.d) return false;
    found = f;
    return true;
  });
  return found;
}

std::optional<bool> end_is_local(const AxModule& X, long long budget) {
  auto basis = hom_ax_basis(X, X);
  long long count = 1;
  for (size_t k = 0; k < basis.size(); ++k)
    if ((count *= X.p) > budget) return std::nullopt;
  const Mat zero(X.d, X.d, X.p);
  bool local = !for_each_combination(basis, X.p, [&](const Mat& f) {
    if (f.rank() == X.d) return false;
    Mat pw = f;
    for (int k = 1; k < X.d; ++k) pw = pw * f;
    return !(pw == zero);  // neither invertible nor nilpotent
  });
  return local;
}

int hom_involution(const Mat& tx, const Mat& ty) { return intertwiners({{tx, ty}}, ty.rows(), tx.rows(), tx.field()); }

int Rep::total_dim() const {
  int s = 0;
  for (int d : dim) s += d;
  return s;
}

Rep zero_rep(const Quiver& q, int p) {
  Rep m;
  m.q = &q;
  m.p = p;
  m.dim.assign(static_cast<size_t>(q.nv()), 0);
  m.mat.assign(q.arrows.size(), Mat(0, 0, p));
  return m;
}

namespace {

// Ordinary composable pairs (first after second) giving the monomial relations.
std::vector<std::pair<int, int>> zero_relations(const Quiver& q) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < q.na(); ++a)
    for (int b = 0; b < q.na(); ++b) {
      const Arrow &A = q.arrows[static_cast<size_t>(a)], &B = q.arrows[static_cast<size_t>(b)];
      if (!A.special && !B.special && A.s() == B.t()) out.emplace_back(a, b);
    }
  return out;
}

}  // namespace

std::vector<std::string> relation_failures(const Rep& m) {
  const Quiver& q = *m.q;
  std::vector<std::string> out;
  for (auto [a, b] : zero_relations(q))
    if (!(m.mat[static_cast<size_t>(a)] * m.mat[static_cast<size_t>(b)]).is_zero())
      out.push_back(q.arrows[static_cast<size_t>(a)].name + q.arrows[static_cast<size_t>(b)].name + " != 0");
  for (int a = 0; a < q.na(); ++a) {
    const Arrow& A = q.arrows[static_cast<size_t>(a)];
    if (!A.special) continue;
    const Mat& e = m.mat[static_cast<size_t>(a)];
    const Mat& back = m.mat[static_cast<size_t>(A.partner)];
    if (!(back * e == Mat::identity(m.dim[static_cast<size_t>(A.src)], m.p)))
      out.push_back(A.name + "'" + A.name + " != 1");
  }
  return out;
}

std::vector<int> split_dims(const Rep& m) {
  const Quiver& q = *m.q;
  std::vector<int> out;
  for (int v = 0; v < q.nv(); ++v) {
    int e = q.special_loop_at(v);
    const int d = m.dim[static_cast<size_t>(v)];
    if (e < 0) {
      out.push_back(d);
      continue;
    }
    const Mat& eps = m.mat[static_cast<size_t>(e)];
    const int plus = d - (eps - Mat::identity(d, m.p)).rank();
    out.push_back(d - plus);  // (v,-) precedes (v,+)
    out.push_back(plus);
  }
  return out;
}

Rep simple_rep(const Quiver& q, int v, int rho, int p) {
  Rep m;
  m.q = &q;
  m.p = p;
  m.dim.assign(static_cast<size_t>(q.nv()), 0);
  m.dim[static_cast<size_t>(v)] = 1;
  for (const auto& a : q.arrows) {
    Mat z(m.dim[static_cast<size_t>(a.tgt)], m.dim[static_cast<size_t>(a.src)], p);
    if (a.special && a.src == v && a.tgt == v) z.set(0, 0, rho);
    m.mat.push_back(z);
  }
  return m;
}

Mat unit_action(const AdmWord& x, const HEdge& e, const AxModule& X) {
  const Mat one = Mat::identity(X.d, X.p);
  if (e.loop) {
    if (x.type == WType::PP && e.index == 0) return X.S;
    return X.T;
  }
  if (x.is_band() && e.index == 0) {
    Mat u = x.word[0].kind == LK::Direct ? X.T : X.T.inverse();
    return e.twin ? u.inverse() : u;
  }
  return one;
}

int copy_offset(const Winding& h, int v, int dimX) {
  int k = 0;
  for (int u = h.first; u < v; ++u)
    if (h.vertex_label(u) == h.vertex_label(v)) ++k;
  return k * dimX;
}

Rep build_module(const Quiver& q, const AdmWord& x, const AxModule& X) {
  if (!module_fits(x.type, X))
    throw PreconditionError(std::string("module ") + X.name + " is not over " + alg_name(algebra_of(x.type)));
  if (!module_ok(X)) throw PreconditionError("module " + X.name + " violates the algebra relations");
  Winding h = build_Ho(q, x);
  Rep m;
  m.q = &q;
  m.p = X.p;
  m.dim.assign(static_cast<size_t>(q.nv()), 0);
  for (int v = h.first; v <= h.last; ++v) m.dim[static_cast<size_t>(h.vertex_label(v))] += X.d;
  for (const auto& a : q.arrows) m.mat.emplace_back(m.dim[static_cast<size_t>(a.tgt)], m.dim[static_cast<size_t>(a.src)], X.p);
  for (const auto& e : h.edges) {
    Mat u = unit_action(x, e, X);
    Mat& target = m.mat[static_cast<size_t>(e.image)];
    const int r0 = copy_offset(h, e.tgt, X.d), c0 = copy_offset(h, e.src, X.d);
    for (int r = 0; r < X.d; ++r)
      for (int c = 0; c < X.d; ++c) target.add_to(r0 + r, c0 + c, u.at(r, c));
  }
  auto bad = relation_failures(m);
  if (!bad.empty()) throw TheoremViolation("M°(" + adm_str(q, x) + ", " + X.name + "): " + bad.front());
  return m;
}

namespace {

struct HomSystem {
  std::vector<int> base;  // first unknown of each vertex block
  int unknowns = 0;
};

HomSystem layout(const Rep& m, const Rep& n) {
  HomSystem s;
  for (size_t v = 0; v < m.dim.size(); ++v) {
    s.base.push_back(s.unknowns);
    s.unknowns += n.dim[v] * m.dim[v];
  }
  return s;
}

LinearSystem hom_equations(const Rep& m, const Rep& n, const HomSystem& s) {
  if (m.q != n.q && m.q->nv() != n.q->nv()) throw PreconditionError("Hom between representations of different quivers");
  const Quiver& q = *m.q;
  LinearSystem sys(s.unknowns, m.p);
  for (int a = 0; a < q.na(); ++a) {
    const Arrow& A = q.arrows[static_cast<size_t>(a)];
    const size_t sv = static_cast<size_t>(A.src), tv = static_cast<size_t>(A.tgt);
    const Mat &ma = m.mat[static_cast<size_t>(a)], &na = n.mat[static_cast<size_t>(a)];
    const int rows = n.dim[tv], cols = m.dim[sv];
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        std::vector<std::pair<int, int>> eq;
        for (int k = 0; k < m.dim[tv]; ++k) eq.emplace_back(s.base[tv] + r * m.dim[tv] + k, ma.at(k, c));
        for (int l = 0; l < n.dim[sv]; ++l) eq.emplace_back(s.base[sv] + l * m.dim[sv] + c, -na.at(r, l));
        sys.add(eq);
      }
  }
  return sys;
}

RepMap unpack(const Rep& m, const Rep& n, const HomSystem& s, const Mat& sol, int col) {
  RepMap f;
  for (size_t v = 0; v < m.dim.size(); ++v) {
    Mat b(n.dim[v], m.dim[v], m.p);
    for (int r = 0; r < n.dim[v]; ++r)
      for (int c = 0; c < m.dim[v]; ++c) b.set(r, c, sol.at(s.base[v] + r * m.dim[v] + c, col));
    f.push_back(b);
  }
  return f;
}

// Rank of a family of maps, each flattened to one row.
int family_rank(const std::vector<RepMap>& fs, int p) {
  if (fs.empty()) return 0;
  int len = 0;
  for (const auto& b : fs.front()) len += b.rows() * b.cols();
  Mat m(static_cast<int>(fs.size()), len, p);
  for (size_t k = 0; k < fs.size(); ++k) {
    int c = 0;
    for (const auto& b : fs[k])
      for (int r = 0; r < b.rows(); ++r)
        for (int cc = 0; cc < b.cols(); ++cc) m.set(static_cast<int>(k), c++, b.at(r, cc));
  }
  return m.rank();
}

}  // namespace

int hom_dim_oracle(const Rep& m, const Rep& n) {
  HomSystem s = layout(m, n);
  return hom_equations(m, n, s).solution_dim();
}

std::vector<RepMap> hom_basis_oracle(const Rep& m, const Rep& n) {
  HomSystem s = layout(m, n);
  Mat sol = hom_equations(m, n, s).solutions();
  std::vector<RepMap> out;
  for (int c = 0; c < sol.cols(); ++c) out.push_back(unpack(m, n, s, sol, c));
  return out;
}

bool is_hom(const Rep& m, const Rep& n, const RepMap& f) {
  const Quiver& q = *m.q;
  for (int a = 0; a < q.na(); ++a) {
    const Arrow& A = q.arrows[static_cast<size_t>(a)];
    if (!(f[static_cast<size_t>(A.tgt)] * m.mat[static_cast<size_t>(a)] ==
          n.mat[static_cast<size_t>(a)] * f[static_cast<size_t>(A.src)]))
      return false;
  }
  return true;
}

int ext1_dim(const Rep& n, const Rep& m) {
  const Quiver& q = *m.q;
  std::vector<int> base;
  int unknowns = 0;
  for (const auto& A : q.arrows) {
    base.push_back(unknowns);
    unknowns += m.dim[static_cast<size_t>(A.tgt)] * n.dim[static_cast<size_t>(A.src)];
  }
  LinearSystem sys(unknowns, m.p);
  auto zcols = [&](int a) { return n.dim[static_cast<size_t>(q.arrows[static_cast<size_t>(a)].src)]; };
  // M(a) Z_b + Z_a N(b) = 0.
  auto linearized = [&](int a, int b) {
    const Mat &ma = m.mat[static_cast<size_t>(a)], &nb = n.mat[static_cast<size_t>(b)];
    const int rows = ma.rows(), cols = nb.cols(), mid_m = ma.cols(), mid_n = nb.rows();
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        std::vector<std::pair<int, int>> eq;
        for (int k = 0; k < mid_m; ++k) eq.emplace_back(base[static_cast<size_t>(b)] + k * zcols(b) + c, ma.at(r, k));
        for (int l = 0; l < mid_n; ++l) eq.emplace_back(base[static_cast<size_t>(a)] + r * zcols(a) + l, nb.at(l, c));
        sys.add(eq);
      }
  };
  for (auto [a, b] : zero_relations(q)) linearized(a, b);
  for (int a = 0; a < q.na(); ++a) {
    const Arrow& A = q.arrows[static_cast<size_t>(a)];
    if (A.special) linearized(A.partner, a);
  }
  int coboundaries = 0;
  for (size_t v = 0; v < m.dim.size(); ++v) coboundaries += n.dim[v] * m.dim[v];
  coboundaries -= hom_dim_oracle(n, m);
  return sys.solution_dim() - coboundaries;
}

namespace {

// f_tgt X(u_x) = Y(u_y)^{sign} f_src for every arrow of the graph in `arrows`,
// unknown blocks dim Y x dim X per vertex in `verts`.
struct BlockSystem {
  std::map<int, int> base;
  int unknowns = 0;
  LinearSystem sys{0, 5};
};

BlockSystem block_system(const HomGraph& g, const AdmWord& x, const AxModule& X, const AdmWord& y, const AxModule& Y,
                         const std::vector<int>& verts, const std::vector<int>& arrows, const Winding& hxo,
                         const Winding& hyo) {
  BlockSystem b;
  const int dx = X.d, dy = Y.d;
  for (int v : verts) {
    b.base[v] = b.unknowns;
    b.unknowns += dx * dy;
  }
  b.sys = LinearSystem(b.unknowns, X.p);
  for (int k : arrows) {
    const HQArrow& a = g.arrows[static_cast<size_t>(k)];
    Mat ux = unit_action(x, hxo.edges[static_cast<size_t>(a.x_edge)], X);
    Mat uy = unit_action(y, hyo.edges[static_cast<size_t>(a.y_edge)], Y);
    if (a.kind == HQKind::Cross || a.kind == HQKind::OMinus) uy = uy.inverse();
    const int t = b.base.at(a.tgt), s = b.base.at(a.src);
    for (int r = 0; r < dy; ++r)
      for (int c = 0; c < dx; ++c) {
        std::vector<std::pair<int, int>> eq;
        for (int k2 = 0; k2 < dx; ++k2) eq.emplace_back(t + r * dx + k2, ux.at(k2, c));
        for (int l = 0; l < dy; ++l) eq.emplace_back(s + l * dx + c, -uy.at(r, l));
        b.sys.add(eq);
      }
  }
  return b;
}

}  // namespace

HomFormula hom_dim_formula(const Quiver& q, const AdmWord& x, const AxModule& X, const AdmWord& y, const AxModule& Y) {
  if (!module_fits(x.type, X) || !module_fits(y.type, Y)) throw PreconditionError("module does not match word type");
  HomGraph g = build_HQ(q, x, y);
  ComponentReport r = classify_components(g);
  HomFormula out;
  for (size_t k = 0; k < r.lines.size(); ++k) {
    const auto& l = r.lines[k];
    if (!l.real) continue;
    BlockSystem b = block_system(g, x, X, y, Y, l.line.vertices, l.line.arrows, g.hx, g.hy);
    const int d = b.sys.solution_dim();
    out.per_line.emplace_back(static_cast<int>(k), d);
    out.total += d;
  }
  return out;
}

std::vector<LineBasis> hom_basis_structured(const Quiver& q, const AdmWord& x, const AxModule& X, const AdmWord& y,
                                            const AxModule& Y) {
  HomGraph g = build_HQ(q, x, y);
  ComponentReport r = classify_components(g);
  Rep m = build_module(q, x, X), n = build_module(q, y, Y);
  std::vector<LineBasis> out;
  std::vector<RepMap> all;
  for (size_t f = 0; f < r.full.size(); ++f) {
    const Component& c = r.full[f];
    bool red = std::any_of(c.vertices.begin(), c.vertices.end(),
                           [&](int v) { return g.vertices[static_cast<size_t>(v)].colors & Red; });
    if (red) continue;
    BlockSystem b = block_system(g, x, X, y, Y, c.vertices, c.arrows, g.hx, g.hy);
    Mat sol = b.sys.solutions();
    LineBasis lb;
    lb.full = static_cast<int>(f);
    for (int col = 0; col < sol.cols(); ++col) {
      RepMap fm;
      for (int v = 0; v < q.nv(); ++v) fm.emplace_back(n.dim[static_cast<size_t>(v)], m.dim[static_cast<size_t>(v)], X.p);
      for (int v : c.vertices) {
        const auto& hv = g.vertices[static_cast<size_t>(v)];
        const int a = g.hx.vertex_label(hv.i);
        const int r0 = copy_offset(g.hy, hv.j, Y.d), c0 = copy_offset(g.hx, hv.i, X.d);
        for (int rr = 0; rr < Y.d; ++rr)
          for (int cc = 0; cc < X.d; ++cc)
            fm[static_cast<size_t>(a)].set(r0 + rr, c0 + cc, sol.at(b.base[v] + rr * X.d + cc, col));
      }
      if (!is_hom(m, n, fm))
        throw TheoremViolation("structured Hom element on a long h-line is not a homomorphism");
      lb.basis.push_back(fm);
      all.push_back(fm);
    }
    // The block at a single vertex determines the element.
    Mat proj(sol.cols(), X.d * Y.d, X.p);
    const int v0 = c.vertices.front();
    for (int col = 0; col < sol.cols(); ++col)
      for (int e = 0; e < X.d * Y.d; ++e) proj.set(col, e, sol.at(b.base[v0] + e, col));
    if (proj.rank() != sol.cols()) throw TheoremViolation("projection of a long h-line to one vertex is not injective");
    lb.dim = sol.cols();
    out.push_back(std::move(lb));
  }
  const int oracle = hom_dim_oracle(m, n);
  const int rank = family_rank(all, X.p);
  if (rank != static_cast<int>(all.size()) || rank != oracle)
    throw TheoremViolation("structured Hom basis has rank " + std::to_string(rank) + " from " +
                           std::to_string(all.size()) + " elements, oracle dimension " + std::to_string(oracle));
  return out;
}

int special_letter_count(const Quiver& q, const AdmWord& x) {
  return static_cast<int>(std::count_if(x.word.begin(), x.word.end(), [&](const Letter& l) { return on_special_loop(q, l); }));
}

TauModule tau_module(const Quiver& q, const AdmWord& x, const AxModule& X) {
  TauModule t;
  if (is_projective_adm(q, x)) {
    t.zero = true;
    return t;
  }
  t.word = tau_adm(q, x);
  t.module = twist_chi(X);
  return t;
}

int E_oracle(const Quiver& q, const AdmWord& x, const AxModule& X, const AdmWord& y, const AxModule& Y) {
  Rep m = build_module(q, x, X), n = build_module(q, y, Y);
  TauModule tx = tau_module(q, x, X), ty = tau_module(q, y, Y);
  int e = 0;
  if (!ty.zero) e += hom_dim_oracle(m, build_module(q, ty.word, ty.module));
  if (!tx.zero) e += hom_dim_oracle(n, build_module(q, tx.word, tx.module));
  return e;
}

namespace {

std::vector<Rep> simples(const Quiver& q, int p) {
  std::vector<Rep> out;
  for (const auto& sv : gabriel_presentation(q).vertices) out.push_back(simple_rep(q, sv.v, sv.rho, p));
  return out;
}

}  // namespace

int hom_to_tau_presentation(const Rep& m, const Rep& n) {
  const Quiver& q = *m.q;
  auto dm = split_dims(m);
  auto ss = simples(q, m.p);
  int total = hom_dim_oracle(n, m);
  for (size_t i = 0; i < ss.size(); ++i) {
    if (!dm[i]) continue;
    total += dm[i] * (ext1_dim(n, ss[i]) - hom_dim_oracle(n, ss[i]));
  }
  return total;
}

int E_presentation(const Rep& m, const Rep& n) { return hom_to_tau_presentation(m, n) + hom_to_tau_presentation(n, m); }

std::vector<int> g_oracle(const Quiver& q, const AdmWord& x, const AxModule& X) {
  Rep m = build_module(q, x, X);
  TauModule t = tau_module(q, x, X);
  std::optional<Rep> tm;
  if (!t.zero) tm = build_module(q, t.word, t.module);
  std::vector<int> g;
  for (const Rep& s : simples(q, X.p)) g.push_back((tm ? hom_dim_oracle(s, *tm) : 0) - hom_dim_oracle(m, s));
  return g;
}

std::vector<int> g_presentation(const Rep& m) {
  std::vector<int> g;
  for (const Rep& s : simples(*m.q, m.p)) g.push_back(ext1_dim(m, s) - hom_dim_oracle(m, s));
  return g;
}

std::optional<RepMap> iso_witness(const Rep& m, const Rep& n, unsigned seed, int tries) {
  if (m.dim != n.dim) return std::nullopt;
  auto basis = hom_basis_oracle(m, n);
  if (basis.empty()) return std::nullopt;
  auto invertible = [&](const RepMap& f) {
    for (size_t v = 0; v < f.size(); ++v)
      if (f[v].rank() != m.dim[v]) return false;
    return true;
  };
  for (const auto& f : basis)
    if (invertible(f)) return f;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(0, m.p - 1);
  for (int t = 0; t < tries; ++t) {
    RepMap f = basis.front();
    for (auto& b : f) b = b.scaled(0);
    for (const auto& e : basis) {
      const int c = coeff(rng);
      for (size_t v = 0; v < f.size(); ++v) f[v] = f[v] + e[v].scaled(c);
    }
    if (invertible(f)) return f;
  }
  return std::nullopt;
}

}  // namespace sga
