#pragma once
// Letters, words and the lexicographic order.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "sga/quiver.hpp"

namespace sga {

enum class LK : unsigned char { Direct, Inverse, Special, Trivial, TrivialInv };

struct Letter {
  LK kind = LK::Trivial;
  int id = -1;   // arrow index, or vertex index for trivial letters
  int sign = 0;  // polarization of trivial letters, 0 otherwise
  auto operator<=>(const Letter&) const = default;

  static Letter direct(int a) { return {LK::Direct, a, 0}; }
  static Letter inverse(int a) { return {LK::Inverse, a, 0}; }
  static Letter special(int a) { return {LK::Special, a, 0}; }
  static Letter trivial(int v, int s) { return {LK::Trivial, v, s}; }
  static Letter trivial_inv(int v, int s) { return {LK::TrivialInv, v, s}; }

  bool is_trivial() const { return kind == LK::Trivial || kind == LK::TrivialInv; }
  bool is_arrow() const { return kind == LK::Direct || kind == LK::Inverse || kind == LK::Special; }
};

using Word = std::vector<Letter>;

// Which alphabet a word lives in. Over the gentle re-flagging special loops are
// ordinary arrows and the punctured trivial letters at (i,-) exist.
struct Alphabet {
  const Quiver* q;
  bool hat = false;
};

std::optional<Slot> lsrc(const Quiver& q, const Letter& l);
std::optional<Slot> ltgt(const Quiver& q, const Letter& l);
Letter inv(const Letter& l);
Word inv(const Word& w);
// Whether the letter exists in the alphabet.
bool letter_ok(const Alphabet& al, const Letter& l);
// Checks letters and the concatenation condition.
bool is_word(const Alphabet& al, const Word& w);
// Concatenation condition between consecutive letters.
bool joins(const Quiver& q, const Letter& a, const Letter& b);
// Whether the trivial letter is punctured (at (i,-) for a special vertex i).
bool is_punctured(const Quiver& q, const Letter& l);
// The letter of a special loop in either orientation.
bool on_special_loop(const Quiver& q, const Letter& l);
// Re-flagging map from the gentle alphabet back to the skewed-gentle one.
Letter forget(const Quiver& q, const Letter& l);
Word forget(const Quiver& q, const Word& w);

// Letters whose target slot is `s`, in increasing order.
std::vector<Letter> letters_at(const Alphabet& al, Slot s);

enum class Cmp { LT, EQ, GT, INC };
const char* cmp_name(Cmp c);

// Letter order: comparable iff same target slot (direct < trivial < inverse).
Cmp compare_letters(const Quiver& q, const Letter& a, const Letter& b);

// Eventually periodic word: prefix followed by infinitely many copies of cycle
// (finite when cycle is empty).
struct EPWord {
  Word prefix;
  Word cycle;
  std::optional<Letter> at(size_t k) const;
  bool finite() const { return cycle.empty(); }
};

struct LexResult {
  Cmp cmp;
  int delta = -1;  // position of the first difference when comparable and different
};

LexResult lex_compare(const Quiver& q, const EPWord& a, const EPWord& b);
LexResult lex_compare(const Quiver& q, const Word& a, const Word& b);

// Rendering and parsing; letter syntax `a`, `a-`, `e*`, `1(i,+)`, `1(i,+)-`.
std::string letter_str(const Quiver& q, const Letter& l);
std::string word_str(const Quiver& q, const Word& w);
// Parses a word. `hat` selects the gentle alphabet. Throws ParseError.
Word parse_word(const Quiver& q, const std::string& text, bool hat, bool* is_band = nullptr);

// Cyclic helpers for bands.
Word rotate(const Word& w, size_t k);
bool is_band_word(const Alphabet& al, const Word& w);
bool is_primitive(const Word& w);
// Canonical representative among rotations of w and w^{-1}: least in the
// tuple order of letters.
Word band_canonical(const Word& w);
bool band_equivalent(const Word& a, const Word& b);
// Least rotation of w alone.
Word least_rotation(const Word& w);

}  // namespace sga
