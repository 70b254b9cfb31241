#pragma once
// Admissible words over the gentle re-flagging: the orientation map A, both
// admissibility tests, completion, the translate on admissible words, readings.

#include <optional>
#include <string>
#include <vector>

#include "sga/strings.hpp"
#include "sga/word.hpp"

namespace sga {

enum class WType { UU, UP, PU, PP, B };
const char* wtype_name(WType t);

struct AdmWord {
  Word word;  // letters over the gentle alphabet
  WType type = WType::UU;
  bool is_band() const { return type == WType::B; }
  bool is_string() const { return type != WType::B; }
  // Adm_b: type (p,p) strings and bands.
  bool in_adm_b() const { return type == WType::PP || type == WType::B; }
  auto operator<=>(const AdmWord&) const = default;
};

WType string_type(const Quiver& q, const Word& x);
AdmWord make_adm(const Quiver& q, const Word& x, bool band);
AdmWord inverse(const AdmWord& x);
std::string adm_str(const Quiver& q, const AdmWord& x);
// Parses a gentle-alphabet word; a `band:` prefix marks bands.
AdmWord parse_adm(const Quiver& q, const std::string& text);

// Orientation of special letters. `w` is a string over the skewed-gentle alphabet,
// or a band given in standard form.
AdmWord a_of_w(const Quiver& q, const Word& w, bool band);

struct Completion {
  Word word;  // over the skewed-gentle alphabet
  bool band;
};
Completion completion(const Quiver& q, const AdmWord& x);

// Direct test: orientation rule at every special letter plus the band conditions.
bool is_admissible(const Quiver& q, const Word& x, bool band, std::string* why = nullptr);
// Image test: x is A(w)^{+-1} for the completion w.
bool is_admissible_via_image(const Quiver& q, const Word& x, bool band);

bool is_projective_adm(const Quiver& q, const AdmWord& x);
bool is_injective_adm(const Quiver& q, const AdmWord& x);
// Translate on admissible words; throws PreconditionError on projectives.
AdmWord tau_adm(const Quiver& q, const AdmWord& x);

// Unfolded word with indices shifted by `offset`, optionally periodic.
struct Unfolded {
  Word seq;
  int offset = 0;
  bool periodic = false;
  std::vector<bool> fold;  // fold positions; a fold letter reads the same in both directions
  Letter at(int i) const;
};
// x-bar-bar: punctured letters replaced by special letters, unfolded.
Unfolded unfold_bar(const Quiver& q, const AdmWord& x);
// x-hat^delta: unfolded over the gentle alphabet with e^delta at the fold points.
Unfolded unfold_hat(const Quiver& q, const AdmWord& x, int delta);
// The reading at index i towards the side selected by rho.
EPWord reading(const Quiver& q, const Unfolded& u, int i, int rho);
// Valid indices of H(x): 1..n for strings, 0..n for bands.
std::pair<int, int> index_range(const AdmWord& x);

struct AdmSet {
  std::vector<AdmWord> adm_s;  // types (u,u), (u,p), (p,u)
  std::vector<AdmWord> adm_b;  // type (p,p) strings and bands (one rotation each)
  bool truncated = false;
  std::vector<AdmWord> all() const;
};
// Route 1: images of strings and standard-form bands and their inverses.
AdmSet enumerate_adm(const Quiver& q, int max_len);
// Route 2: filter all gentle strings and bands by the direct test.
AdmSet enumerate_adm_direct(const Quiver& q, int max_len);
// Least rotation of an admissible band (strings unchanged).
AdmWord canonical_rotation(const AdmWord& x);

}  // namespace sga
