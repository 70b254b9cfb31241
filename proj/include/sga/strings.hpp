#pragma once
// Strings and bands, extremal tails, projective/injective strings, successors
// and the Auslander-Reiten translation on strings.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sga/word.hpp"

namespace sga {

struct StringList {
  std::vector<Word> strings;
  bool truncated = false;  // some path was cut by the length bound
};

// Strings starting with the trivial inverse letter at `s`, descending in the
// lexicographic order.
StringList enumerate_strings_at(const Alphabet& al, Slot s, int max_len);
// All strings over every legal start slot.
StringList enumerate_strings(const Alphabet& al, int max_len);
std::vector<Slot> legal_slots(const Alphabet& al);

struct BandList {
  std::vector<Word> bands;  // canonical representatives, primitive
  bool truncated = false;
};
BandList enumerate_bands(const Alphabet& al, int max_len);

bool is_symmetric_string(const Word& w);
// Symmetric band: some rotation of w equals its inverse.
bool is_symmetric_band(const Word& w);
// A rotation of the symmetric band of the shape e* v f* v^{-1}; nullopt if w is
// not a symmetric band.
std::optional<Word> symmetric_standard_form(const Quiver& q, const Word& w);
bool is_standard_symmetric(const Quiver& q, const Word& w);
// All standard-form representatives of a band class: every rotation for an
// asymmetric band, the shapes e* v f* v^{-1} for a symmetric one.
std::vector<Word> standard_forms(const Quiver& q, const Word& band);

// Right tails after the trivial inverse letter at (i, rho): the first letter lives
// at (i, -rho). Greedy largest resp. smallest letters.
Word max_tail(const Alphabet& al, Slot s);
Word min_tail(const Alphabet& al, Slot s);

struct LabeledString {
  std::string label;
  Word word;
};
// Projective strings p~ and injective strings q~ with their labels.
std::vector<LabeledString> projective_strings(const Alphabet& al);
std::vector<LabeledString> injective_strings(const Alphabet& al);
// Simple strings s~_i = 1(i,rho)^{-1} 1(i,-rho) in both orientations.
std::vector<LabeledString> simple_strings(const Alphabet& al);
bool is_projective_string(const Alphabet& al, const Word& w);
bool is_injective_string(const Alphabet& al, const Word& w);
// All labels of a string (p~ before q~ before s~).
std::vector<std::string> string_labels(const Alphabet& al, const Word& w);

enum class SuccessorTag { Cohook, HookRemoved };
struct Successor {
  Word word;
  SuccessorTag tag;
};
// w[1]; nullopt when w is the maximum of its slot.
std::optional<Successor> successor(const Alphabet& al, const Word& w);
// [1]w = (w^{-1}[1])^{-1}.
std::optional<Successor> left_successor(const Alphabet& al, const Word& w);
// Auslander-Reiten translate of a string; throws PreconditionError when w is projective.
Word tau_string(const Alphabet& al, const Word& w);
// Inverse translate; throws PreconditionError when w is injective.
Word tau_inv_string(const Alphabet& al, const Word& w);

// Left predecessor helpers used by the inverse translate.
std::optional<Word> predecessor(const Alphabet& al, const Word& w);

}  // namespace sga
