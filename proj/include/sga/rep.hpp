#pragma once
// Matrix models over GF(p): the algebras A_x with their units, the dihedral
// indecomposables, the push-forward modules M°_x(X), Hom and Ext by linear
// algebra, the h-line Hom formula and its structured basis, the translate on
// modules and brute-force E-invariants and g-vectors.

#include <optional>
#include <string>
#include <vector>

#include "sga/admissible.hpp"
#include "sga/gf.hpp"
#include "sga/hom_graph.hpp"

namespace sga {

// k, k[T]/(T^2-1), k<S,T>/(S^2-1,T^2-1), k[T,T^-1].
enum class AlgKind { Field, Involution, Dihedral, Laurent };
AlgKind algebra_of(WType t);
const char* alg_name(AlgKind a);

struct AxModule {
  AlgKind alg = AlgKind::Field;
  std::string name;
  Mat S, T;  // S only for the dihedral algebra; both empty for k
  int p = 5;
  int d = 1;
  int dim() const { return d; }
};

// Vo, V+, V-, V(m,t), W(m,+), W(m,-), Wchi(m,+), Wchi(m,-), Vt(m,t).
AxModule parse_module(const std::string& text, int p);
// Generator relations of the algebra hold exactly.
bool module_ok(const AxModule& X);
bool module_fits(WType t, const AxModule& X);

// Binomial matrix S~_{m,sign}.
Mat s_tilde(int m, int sign, int p);
AxModule module_vo(int p);
AxModule module_v(int sign, int p);                  // T acts by sign
AxModule module_band(int m, int t, int p);           // T acts by J_m(t)
AxModule module_w(int m, int sign, bool chi, int p);  // W_{m,sign} or its chi-twist
AxModule module_vt(int m, int s, int p);             // V~_{m,s}
// R (x) V_{m,s} as a 2m-dimensional dihedral module (before decomposition).
AxModule induced_dihedral(int m, int s, int p);
AxModule direct_sum(const AxModule& a, const AxModule& b);

AxModule twist_chi(const AxModule& X);  // S -> -S, T -> -T; identity on bands
AxModule twist_iota(const AxModule& X);  // swap S,T; T -> T^-1 on bands
AxModule twist_neg_t(const AxModule& X);  // T -> -T

// Indecomposable A_x-modules of dimension at most max_dim.
std::vector<AxModule> indecomposables_Ax(WType t, int max_dim, int p);

// Intertwiners between modules over the same algebra.
int hom_ax(const AxModule& X, const AxModule& Y);
std::vector<Mat> hom_ax_basis(const AxModule& X, const AxModule& Y);
// Exhaustive search for an invertible intertwiner.
std::optional<Mat> ax_iso_witness(const AxModule& X, const AxModule& Y);
// Whether every endomorphism is invertible or nilpotent, by enumerating End(X);
// nullopt when End has more than `budget` elements.
std::optional<bool> end_is_local(const AxModule& X, long long budget = 100000);
// Intertwiners for the involution algebra acting through given matrices.
int hom_involution(const Mat& tx, const Mat& ty);

struct Rep {
  const Quiver* q = nullptr;
  int p = 5;
  std::vector<int> dim;  // per vertex
  std::vector<Mat> mat;  // per arrow, dim[tgt] x dim[src]
  int total_dim() const;
};

Rep zero_rep(const Quiver& q, int p);
// Relations of the skewed-gentle algebra; returns the violated ones.
std::vector<std::string> relation_failures(const Rep& m);
// Dimension vector over the split vertices (order of gabriel_presentation).
std::vector<int> split_dims(const Rep& m);
// Simple module at the split vertex (v, rho).
Rep simple_rep(const Quiver& q, int v, int rho, int p);

// Unit U_x(e) of an edge of H°(x) acting on X.
Mat unit_action(const AdmWord& x, const HEdge& e, const AxModule& X);
// M°_x(X); throws PreconditionError on an algebra mismatch and TheoremViolation
// when a relation fails.
Rep build_module(const Quiver& q, const AdmWord& x, const AxModule& X);
// Position of the copy of X belonging to vertex v of H(x) inside M°_x(X)(G(v)).
int copy_offset(const Winding& h, int v, int dimX);

// Intertwiners: f_t M(a) = N(a) f_s for every arrow a.
using RepMap = std::vector<Mat>;  // per vertex, dim N_v x dim M_v
int hom_dim_oracle(const Rep& m, const Rep& n);
std::vector<RepMap> hom_basis_oracle(const Rep& m, const Rep& n);
bool is_hom(const Rep& m, const Rep& n, const RepMap& f);
// dim Ext^1(N, M) from the linearized relations.
int ext1_dim(const Rep& n, const Rep& m);

// Sum over real h-lines of dim Hom_{A_L}(X, Y), each evaluated on the + equations
// of the line alone.
struct HomFormula {
  int total = 0;
  std::vector<std::pair<int, int>> per_line;  // (line index, dim)
};
HomFormula hom_dim_formula(const Quiver& q, const AdmWord& x, const AxModule& X, const AdmWord& y,
                           const AxModule& Y);

struct LineBasis {
  int full = -1;               // component of the whole graph
  int dim = 0;                 // dimension of the block space at one vertex
  std::vector<RepMap> basis;   // homomorphisms supported on the line
};
// Propagates blocks along every long h-line; throws TheoremViolation when the union
// is not a basis of the oracle Hom space.
std::vector<LineBasis> hom_basis_structured(const Quiver& q, const AdmWord& x, const AxModule& X, const AdmWord& y,
                                            const AxModule& Y);

struct TauModule {
  bool zero = false;  // x projective
  AdmWord word;
  AxModule module;
};
TauModule tau_module(const Quiver& q, const AdmWord& x, const AxModule& X);
int special_letter_count(const Quiver& q, const AdmWord& x);

// E(M,N) = dim Hom(M, tau N) + dim Hom(N, tau M) with tau from tau_module.
int E_oracle(const Quiver& q, const AdmWord& x, const AxModule& X, const AdmWord& y, const AxModule& Y);
// dim Hom(M, tau N) from a projective presentation of N (no use of tau_module).
int hom_to_tau_presentation(const Rep& m, const Rep& n);
int E_presentation(const Rep& m, const Rep& n);

// g_(i,rho) = dim Hom(S, tau M) - dim Hom(M, S), split-vertex order.
std::vector<int> g_oracle(const Quiver& q, const AdmWord& x, const AxModule& X);
// Ext^1(M, S) - Hom(M, S).
std::vector<int> g_presentation(const Rep& m);

// Invertible intertwiner found by trying basis elements and seeded random
// combinations.
std::optional<RepMap> iso_witness(const Rep& m, const Rep& n, unsigned seed = 1, int tries = 64);

}  // namespace sga
