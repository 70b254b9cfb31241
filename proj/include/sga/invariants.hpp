#pragma once
// Tagged admissible words, the kiss census of a pair of words, the combinatorial
// E-invariant and g-vector, tau-generic tags and the table of component labels.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sga/hom_graph.hpp"
#include "sga/rep.hpp"

namespace sga {

struct Tag {
  enum Kind { Pair, Star, StarStar };
  Kind kind = Pair;
  int s1 = 1, s2 = 1;  // only for Pair
  auto operator<=>(const Tag&) const = default;

  static Tag pair(int a, int b) { return {Pair, a, b}; }
  static Tag star() { return {Star, 0, 0}; }
  static Tag star_star() { return {StarStar, 0, 0}; }
  // Component k in {1,2}: +-1, or 0 for a star.
  int component(int k) const;
};

// "++", "+-", "(1,-1)", "*", "**", "(*,*)".
Tag parse_tag(const std::string& text);
std::string tag_str(const Tag& s);
int wt(const Tag& s);
Tag tag_iota(const Tag& s);
Tag tag_chi(const Tag& s);

std::vector<Tag> tags_for(WType t);
bool tag_legal(WType t, const Tag& s);

// Entries are +-1, or 0 for a star.
int d2(int a, int b);
int d3(const Tag& s, const Tag& t);

struct TaggedAdm {
  AdmWord x;
  Tag s;
  auto operator<=>(const TaggedAdm&) const = default;
};
std::string tagged_str(const Quiver& q, const TaggedAdm& z);
// Representative of the class under (x^-1, s^iota) ~ (x, s); bands are rotated
// to their least rotation.
TaggedAdm canonical_tagged(const TaggedAdm& z);

// The simple modules C(x,s); curves run over every admissible parameter of GF(p).
std::vector<AxModule> simple_family(const AdmWord& x, const Tag& s, int p);
std::vector<int> dim_vector(const Quiver& q, const TaggedAdm& z, int p);

// Both ends punctured at the same special vertex.
bool punctured_same_vertex(const Quiver& q, const AdmWord& x);
std::vector<Tag> s_prime(const Quiver& q, const AdmWord& x);

// Loop pairs (j, i): eta_j of H(y), eta_i of H(x) with equal images, minus the
// diagonal exclusions.
std::vector<std::pair<int, int>> punctured_pairs(const Quiver& q, const AdmWord& x, const AdmWord& y);
int diag_b(const AdmWord& x, const AdmWord& y);

struct KissCensus {
  std::map<Shape, int> forward;   // kisses of H(tau_f x, tau_f y) by type
  std::map<Shape, int> backward;  // kisses of H(tau_f y, tau_f x)
  std::vector<std::pair<int, int>> pairs;
  int diag = 0;
  int count(Shape s) const;
  int a() const { return count(Shape::A); }
  int total() const;
};
// Throws TheoremViolation when the census identities fail.
KissCensus kiss_census(const Fringing& f, const AdmWord& x, const AdmWord& y);

int e_comb(const KissCensus& c, const Tag& s, const Tag& t);
int e_comb(const Fringing& f, const TaggedAdm& a, const TaggedAdm& b);

// Proper and special sources and sinks of H(tau_f x), per base vertex.
struct SourceSinks {
  std::vector<int> a_plus, a_minus;
  std::vector<std::vector<int>> d_plus, d_minus;  // loop indices
};
SourceSinks source_sinks(const Fringing& f, const AdmWord& x);
// Split-vertex order of gabriel_presentation.
std::vector<int> g_comb(const Fringing& f, const TaggedAdm& z);

// Module-level closed forms: the E-invariant from the kiss census and the g-vector
// from the source and sink sets.
int E_formula(const Fringing& f, const AdmWord& x, const AxModule& X, const AdmWord& y, const AxModule& Y);
std::vector<int> g_formula(const Fringing& f, const AdmWord& x, const AxModule& X);

// Minimum of E_oracle over C(x,s) x C(y,t).
int E_generic_oracle(const Quiver& q, const TaggedAdm& a, const TaggedAdm& b, int p);

bool is_tau_generic(const Fringing& f, const TaggedAdm& z);
bool simplified_check(const Fringing& f, const TaggedAdm& z);

struct ComponentClass {
  TaggedAdm z;
  std::vector<int> dim, g;
};
struct ComponentTable {
  std::vector<ComponentClass> classes;
  std::vector<std::vector<int>> e;
  bool truncated = false;
};
// tau-generic classes of tagged words up to max_len; throws TheoremViolation
// when the two tau-generic tests disagree.
ComponentTable enumerate_components(const Fringing& f, int max_len, int p);
std::string components_tsv(const Quiver& q, const ComponentTable& t);

}  // namespace sga
