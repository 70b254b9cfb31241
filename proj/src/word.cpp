#include "sga/word.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sga/errors.hpp"

namespace sga {

std::optional<Slot> lsrc(const Quiver& q, const Letter& l) {
  switch (l.kind) {
    case LK::Direct: return q.arrows[l.id].s();
    case LK::Inverse: return q.arrows[l.id].t();
    case LK::Special: return Slot{q.arrows[l.id].src, -1};
    case LK::Trivial: return std::nullopt;
    case LK::TrivialInv: return Slot{l.id, l.sign};
  }
  return std::nullopt;
}

std::optional<Slot> ltgt(const Quiver& q, const Letter& l) {
  switch (l.kind) {
    case LK::Direct: return q.arrows[l.id].t();
    case LK::Inverse: return q.arrows[l.id].s();
    case LK::Special: return Slot{q.arrows[l.id].src, -1};
    case LK::Trivial: return Slot{l.id, l.sign};
    case LK::TrivialInv: return std::nullopt;
  }
  return std::nullopt;
}

Letter inv(const Letter& l) {
  switch (l.kind) {
    case LK::Direct: return Letter::inverse(l.id);
    case LK::Inverse: return Letter::direct(l.id);
    case LK::Special: return l;
    case LK::Trivial: return Letter::trivial_inv(l.id, l.sign);
    case LK::TrivialInv: return Letter::trivial(l.id, l.sign);
  }
  return l;
}

Word inv(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inv(*it));
  return out;
}

bool letter_ok(const Alphabet& al, const Letter& l) {
  const Quiver& q = *al.q;
  switch (l.kind) {
    case LK::Direct:
    case LK::Inverse:
      if (l.id < 0 || l.id >= q.na()) return false;
      return al.hat || !q.arrows[l.id].special;
    case LK::Special:
      if (l.id < 0 || l.id >= q.na()) return false;
      return !al.hat && q.arrows[l.id].special && q.arrows[l.id].is_loop();
    case LK::Trivial:
    case LK::TrivialInv:
      if (l.id < 0 || l.id >= q.nv() || (l.sign != 1 && l.sign != -1)) return false;
      return al.hat || !(l.sign == -1 && q.is_special_vertex(l.id));
  }
  return false;
}

bool joins(const Quiver& q, const Letter& a, const Letter& b) {
  auto s = lsrc(q, a);
  auto t = ltgt(q, b);
  return s && t && *s == t->neg();
}

bool is_word(const Alphabet& al, const Word& w) {
  if (w.empty()) return false;
  for (size_t k = 0; k < w.size(); ++k) {
    if (!letter_ok(al, w[k])) return false;
    if (k + 1 < w.size() && !joins(*al.q, w[k], w[k + 1])) return false;
  }
  return true;
}

bool is_punctured(const Quiver& q, const Letter& l) {
  return l.is_trivial() && l.sign == -1 && q.is_special_vertex(l.id);
}

bool on_special_loop(const Quiver& q, const Letter& l) {
  return (l.kind == LK::Direct || l.kind == LK::Inverse || l.kind == LK::Special) && q.arrows[l.id].special;
}

Letter forget(const Quiver& q, const Letter& l) {
  if (on_special_loop(q, l)) return Letter::special(l.id);
  if (is_punctured(q, l)) return Letter::special(q.special_loop_at(l.id));
  return l;
}

Word forget(const Quiver& q, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& l : w) out.push_back(forget(q, l));
  return out;
}

std::vector<Letter> letters_at(const Alphabet& al, Slot s) {
  const Quiver& q = *al.q;
  if (!al.hat && s.sign == -1 && q.is_special_vertex(s.v)) return {Letter::special(q.special_loop_at(s.v))};
  std::vector<Letter> out;
  for (int a = 0; a < q.na(); ++a)
    if (q.arrows[a].t() == s && letter_ok(al, Letter::direct(a))) out.push_back(Letter::direct(a));
  out.push_back(Letter::trivial(s.v, s.sign));
  for (int a = 0; a < q.na(); ++a)
    if (q.arrows[a].s() == s && letter_ok(al, Letter::inverse(a))) out.push_back(Letter::inverse(a));
  return out;
}

const char* cmp_name(Cmp c) {
  switch (c) {
    case Cmp::LT: return "LT";
    case Cmp::EQ: return "EQ";
    case Cmp::GT: return "GT";
    case Cmp::INC: return "INCOMPARABLE";
  }
  return "?";
}

namespace {
int rank_of(const Letter& l) {
  switch (l.kind) {
    case LK::Direct: return 0;
    case LK::Trivial:
    case LK::Special: return 1;
    case LK::Inverse: return 2;
    case LK::TrivialInv: return 1;
  }
  return 1;
}
}  // namespace

Cmp compare_letters(const Quiver& q, const Letter& a, const Letter& b) {
  if (a == b) return Cmp::EQ;
  auto ta = ltgt(q, a), tb = ltgt(q, b);
  if (!ta || !tb || !(*ta == *tb)) return Cmp::INC;
  int ra = rank_of(a), rb = rank_of(b);
  if (ra == rb) return Cmp::INC;
  return ra < rb ? Cmp::LT : Cmp::GT;
}

std::optional<Letter> EPWord::at(size_t k) const {
  if (k < prefix.size()) return prefix[k];
  if (cycle.empty()) return std::nullopt;
  return cycle[(k - prefix.size()) % cycle.size()];
}

LexResult lex_compare(const Quiver& q, const EPWord& a, const EPWord& b) {
  size_t bound;
  if (a.finite() || b.finite()) {
    bound = std::min(a.finite() ? a.prefix.size() : SIZE_MAX, b.finite() ? b.prefix.size() : SIZE_MAX) + 1;
  } else {
    bound = std::max(a.prefix.size(), b.prefix.size()) + std::lcm(a.cycle.size(), b.cycle.size());
  }
  for (size_t k = 0; k < bound; ++k) {
    auto la = a.at(k), lb = b.at(k);
    if (!la && !lb) return {Cmp::EQ};
    if (!la || !lb) return {Cmp::INC};
    if (*la == *lb) continue;
    Cmp c = compare_letters(q, *la, *lb);
    if (c == Cmp::INC) return {Cmp::INC};
    return {c, static_cast<int>(k)};
  }
  return {Cmp::EQ};
}

LexResult lex_compare(const Quiver& q, const Word& a, const Word& b) {
  return lex_compare(q, EPWord{a, {}}, EPWord{b, {}});
}

std::string letter_str(const Quiver& q, const Letter& l) {
  auto triv = [&](const Letter& t) { return "1(" + q.vertices[t.id] + "," + (t.sign > 0 ? "+" : "-") + ")"; };
  switch (l.kind) {
    case LK::Direct: return q.arrows[l.id].name;
    case LK::Inverse: return q.arrows[l.id].name + "-";
    case LK::Special: return q.arrows[l.id].name + "*";
    case LK::Trivial: return triv(l);
    case LK::TrivialInv: return triv(l) + "-";
  }
  return "?";
}

std::string word_str(const Quiver& q, const Word& w) {
  std::string out;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += letter_str(q, w[k]);
  }
  return out;
}

namespace {

std::string normalize_dashes(const std::string& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    // U+2011 non-breaking hyphen and U+2212 minus sign
    if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
        ((static_cast<unsigned char>(s[i + 1]) == 0x80 && static_cast<unsigned char>(s[i + 2]) == 0x91) ||
         (static_cast<unsigned char>(s[i + 1]) == 0x88 && static_cast<unsigned char>(s[i + 2]) == 0x92))) {
      out += '-';
      i += 2;
    } else {
      out += s[i];
    }
  }
  return out;
}

}  // namespace

Word parse_word(const Quiver& q, const std::string& raw, bool hat, bool* is_band) {
  std::string text = normalize_dashes(raw);
  size_t start = text.find_first_not_of(" \t");
  bool band = false;
  if (start != std::string::npos && text.compare(start, 5, "band:") == 0) {
    band = true;
    text = text.substr(start + 5);
  }
  if (is_band) *is_band = band;
  Alphabet al{&q, hat};
  Word w;
  std::istringstream in(text);
  std::string tok;
  size_t col = 0;
  while (in >> tok) {
    col = text.find(tok, col);
    auto err = [&](const std::string& msg) {
      return ParseError("word: column " + std::to_string(col + 1) + ": " + msg + " in '" + tok + "'");
    };
    Letter l;
    if (tok.rfind("1(", 0) == 0) {
      size_t close = tok.find(')');
      size_t comma = tok.rfind(',', close);
      if (close == std::string::npos || comma == std::string::npos || comma + 2 != close) throw err("bad trivial letter");
      std::string vname = tok.substr(2, comma - 2);
      char sg = tok[comma + 1];
      if (sg != '+' && sg != '-') throw err("bad sign");
      int v = q.vertex(vname);
      if (v < 0) throw err("unknown vertex '" + vname + "'");
      std::string tail = tok.substr(close + 1);
      if (tail.empty()) l = Letter::trivial(v, sg == '+' ? 1 : -1);
      else if (tail == "-") l = Letter::trivial_inv(v, sg == '+' ? 1 : -1);
      else throw err("trailing characters");
    } else {
      std::string name = tok;
      LK kind = LK::Direct;
      if (!name.empty() && name.back() == '-') {
        kind = LK::Inverse;
        name.pop_back();
      } else if (!name.empty() && name.back() == '*') {
        kind = LK::Special;
        name.pop_back();
      }
      int a = q.arrow(name);
      if (a < 0) throw err("unknown arrow '" + name + "'");
      l = {kind, a, 0};
    }
    if (!letter_ok(al, l))
      throw err(hat ? "letter not in the gentle alphabet" : "letter not in the alphabet (punctured or re-flagged letter?)");
    w.push_back(l);
    col += tok.size();
  }
  if (w.empty()) throw ParseError("word: empty");
  if (band ? !is_band_word(al, w) : !is_word(al, w)) throw ParseError("word: concatenation condition fails");
  return w;
}

Word rotate(const Word& w, size_t k) {
  Word out(w.begin() + static_cast<long>(k % w.size()), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(k % w.size()));
  return out;
}

bool is_band_word(const Alphabet& al, const Word& w) {
  if (w.empty()) return false;
  for (const auto& l : w)
    if (l.is_trivial()) return false;
  return is_word(al, w) && joins(*al.q, w.back(), w.front());
}

bool is_primitive(const Word& w) {
  const size_t n = w.size();
  for (size_t d = 1; d < n; ++d)
    if (n % d == 0 && rotate(w, d) == w) return false;
  return true;
}

Word least_rotation(const Word& w) {
  Word best = w;
  for (size_t k = 1; k < w.size(); ++k) best = std::min(best, rotate(w, k));
  return best;
}

Word band_canonical(const Word& w) { return std::min(least_rotation(w), least_rotation(inv(w))); }

bool band_equivalent(const Word& a, const Word& b) {
  return a.size() == b.size() && band_canonical(a) == band_canonical(b);
}

}  // namespace sga
