#pragma once
// Polarized quivers: data model, validation, the gentle re-flagging, the
// split-vertex presentation and fringing.

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace sga {

// A vertex together with a polarization sign (+1 or -1).
struct Slot {
  int v = -1;
  int sign = 1;
  Slot neg() const { return {v, -sign}; }
  auto operator<=>(const Slot&) const = default;
};

struct Arrow {
  std::string name;
  int src = -1, s1 = 1;
  int tgt = -1, t1 = 1;
  bool special = false;
  int partner = -1;  // pairing involution on special arrows
  Slot s() const { return {src, s1}; }
  Slot t() const { return {tgt, t1}; }
  bool is_loop() const { return src == tgt; }
  bool operator==(const Arrow&) const = default;
};

class Quiver {
 public:
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int add_vertex(const std::string& name);
  int add_arrow(const std::string& name, int src, int s1, int tgt, int t1);
  int add_special_loop(const std::string& name, int v);

  int nv() const { return static_cast<int>(vertices.size()); }
  int na() const { return static_cast<int>(arrows.size()); }
  int vertex(const std::string& name) const;  // -1 when absent
  int arrow(const std::string& name) const;   // -1 when absent
  // Arrow whose source (resp. target) slot is `s`, or -1.
  int out_at(Slot s) const;
  int in_at(Slot s) const;
  int special_loop_at(int v) const;
  bool is_special_vertex(int v) const { return special_loop_at(v) >= 0; }
  int special_count() const;

  bool operator==(const Quiver&) const = default;
};

struct ValidationReport {
  bool is_polarized = true;
  bool is_admissible = true;
  bool is_skewed_gentle = true;
  bool is_gentle = true;
  std::vector<std::string> diagnostics;
};

ValidationReport validate(const Quiver& q);

// Length of the longest admissible path, or nullopt when unbounded.
std::optional<int> longest_admissible_path(const Quiver& q);

// Special loops re-flagged as ordinary; arrow and vertex indices are kept, so the
// arrow-level bijection is the identity on indices.
Quiver hat_quiver(const Quiver& q);

// Split presentation: one vertex per (i, rho) with rho in {+,-} at special i and
// rho = 0 ("o") elsewhere.
struct SplitVertex {
  int v;
  int rho;  // -1, +1, or 0 for ordinary vertices
  auto operator<=>(const SplitVertex&) const = default;
};
struct SplitArrow {
  int arrow;  // ordinary arrow of the base quiver
  int tgt_rho, src_rho;
  int src, tgt;  // indices into GabrielPresentation::vertices
};
struct SplitPath {
  int first, second;  // split arrows; `first` is applied after `second`
};
struct GabrielPresentation {
  std::vector<SplitVertex> vertices;
  std::vector<SplitArrow> arrows;
  // Each relation is a sum of length-two paths with coefficient one.
  std::vector<std::vector<SplitPath>> relations;
  int vertex_index(int v, int rho) const;
  std::string vertex_name(const Quiver& q, int idx) const;
};

GabrielPresentation gabriel_presentation(const Quiver& q);

struct Fringing {
  Quiver base;
  Quiver extended;  // base vertices and arrows keep their indices
  std::vector<int> fringe_vertices;
  std::vector<int> fringe_arrows;
};

Fringing auto_fringe(const Quiver& q);
// Checks that `extended` is a valid fringing of `base`. The base must appear as a
// prefix of the extended vertex and arrow lists under the same names.
bool check_fringing(const Quiver& base, const Quiver& extended, std::string* why = nullptr);
// Builds a Fringing from a user-supplied extension; throws on failure.
Fringing make_fringing(const Quiver& base, const Quiver& extended);

}  // namespace sga
