#include "sga/strings.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "sga/errors.hpp"

namespace sga {

std::vector<Slot> legal_slots(const Alphabet& al) {
  std::vector<Slot> out;
  for (int v = 0; v < al.q->nv(); ++v)
    for (int s : {-1, 1})
      if (letter_ok(al, Letter::trivial_inv(v, s))) out.push_back({v, s});
  return out;
}

namespace {

void sort_descending(const Quiver& q, std::vector<Word>& ws) {
  std::stable_sort(ws.begin(), ws.end(), [&](const Word& a, const Word& b) {
    auto c = lex_compare(q, a, b).cmp;
    if (c == Cmp::INC) throw std::logic_error("strings of one slot must be comparable");
    return c == Cmp::GT;
  });
}

}  // namespace

StringList enumerate_strings_at(const Alphabet& al, Slot s, int max_len) {
  StringList out;
  if (!letter_ok(al, Letter::trivial_inv(s.v, s.sign)))
    throw PreconditionError("no strings start at this slot");
  if (max_len < 2) {
    out.truncated = true;
    return out;
  }
  Word w{Letter::trivial_inv(s.v, s.sign)};
  std::function<void()> dfs = [&]() {
    Slot next = lsrc(*al.q, w.back())->neg();
    for (const Letter& l : letters_at(al, next)) {
      if (static_cast<int>(w.size()) + 1 > max_len || (!l.is_trivial() && static_cast<int>(w.size()) + 2 > max_len)) {
        out.truncated = true;
        continue;
      }
      w.push_back(l);
      if (l.is_trivial()) out.strings.push_back(w);
      else dfs();
      w.pop_back();
    }
  };
  dfs();
  sort_descending(*al.q, out.strings);
  return out;
}

StringList enumerate_strings(const Alphabet& al, int max_len) {
  StringList out;
  for (Slot s : legal_slots(al)) {
    auto part = enumerate_strings_at(al, s, max_len);
    out.truncated |= part.truncated;
    out.strings.insert(out.strings.end(), part.strings.begin(), part.strings.end());
  }
  return out;
}

BandList enumerate_bands(const Alphabet& al, int max_len) {
  const Quiver& q = *al.q;
  std::set<Word> found;
  BandList out;
  std::vector<Letter> starts;
  for (int a = 0; a < q.na(); ++a)
    for (Letter l : {Letter::direct(a), Letter::inverse(a), Letter::special(a)})
      if (letter_ok(al, l)) starts.push_back(l);
  Word w;
  std::function<void()> dfs = [&]() {
    if (joins(q, w.back(), w.front()) && is_primitive(w)) found.insert(band_canonical(w));
    Slot next = lsrc(q, w.back())->neg();
    for (const Letter& l : letters_at(al, next)) {
      if (l.is_trivial()) continue;
      if (static_cast<int>(w.size()) >= max_len) {
        out.truncated = true;
        continue;
      }
      w.push_back(l);
      dfs();
      w.pop_back();
    }
  };
  for (const Letter& l : starts) {
    w = {l};
    dfs();
  }
  out.bands.assign(found.begin(), found.end());
  return out;
}

bool is_symmetric_string(const Word& w) { return w == inv(w); }

bool is_symmetric_band(const Word& w) {
  Word wi = inv(w);
  for (size_t k = 0; k < w.size(); ++k)
    if (rotate(w, k) == wi) return true;
  return false;
}

bool is_standard_symmetric(const Quiver& q, const Word& w) {
  return !w.empty() && w[0].kind == LK::Special && q.arrows[w[0].id].special && inv(w) == rotate(w, 1);
}

std::optional<Word> symmetric_standard_form(const Quiver& q, const Word& w) {
  for (size_t k = 0; k < w.size(); ++k) {
    Word r = rotate(w, k);
    if (is_standard_symmetric(q, r)) return r;
  }
  return std::nullopt;
}

std::vector<Word> standard_forms(const Quiver& q, const Word& band) {
  std::vector<Word> out;
  bool sym = is_symmetric_band(band);
  std::set<Word> seen;
  for (const Word& base : {band, inv(band)}) {
    for (size_t k = 0; k < base.size(); ++k) {
      Word r = rotate(base, k);
      if (sym && !is_standard_symmetric(q, r)) continue;
      if (!sym && base != band) continue;
      if (seen.insert(r).second) out.push_back(r);
    }
  }
  return out;
}

namespace {

Word tail(const Alphabet& al, Slot start, bool largest) {
  Word out;
  Slot cur = start.neg();
  const int cap = 4 * (al.q->na() + 2) * (al.q->na() + 2);
  for (;;) {
    auto ls = letters_at(al, cur);
    Letter l = largest ? ls.back() : ls.front();
    out.push_back(l);
    if (l.is_trivial()) return out;
    if (static_cast<int>(out.size()) > cap) throw PreconditionError("extremal tail does not terminate: quiver is not admissible");
    cur = lsrc(*al.q, l)->neg();
  }
}

Word cat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string slot_label(const Quiver& q, int v, int sign) {
  return "(" + q.vertices[v] + "," + (sign > 0 ? "+" : "-") + ")";
}

}  // namespace

Word max_tail(const Alphabet& al, Slot s) { return tail(al, s, true); }
Word min_tail(const Alphabet& al, Slot s) { return tail(al, s, false); }

namespace {

std::vector<LabeledString> extremal_strings(const Alphabet& al, bool largest, const std::string& name) {
  const Quiver& q = *al.q;
  std::vector<LabeledString> out;
  for (int v = 0; v < q.nv(); ++v) {
    bool special = !al.hat && q.is_special_vertex(v);
    if (!special) {
      for (int rho : {-1, 1}) {
        Word left = tail(al, {v, -rho}, largest);
        Word right = tail(al, {v, rho}, largest);
        out.push_back({name + slot_label(q, v, rho), cat(inv(left), right)});
      }
    } else {
      Word t = tail(al, {v, 1}, largest);  // starts with the special letter
      Word rest(t.begin() + 1, t.end());
      out.push_back({name + "(" + q.vertices[v] + ")", cat(cat(inv(rest), Word{t[0]}), rest)});
    }
  }
  return out;
}

}  // namespace

std::vector<LabeledString> projective_strings(const Alphabet& al) { return extremal_strings(al, true, "p~"); }
std::vector<LabeledString> injective_strings(const Alphabet& al) { return extremal_strings(al, false, "q~"); }

std::vector<LabeledString> simple_strings(const Alphabet& al) {
  std::vector<LabeledString> out;
  for (int v = 0; v < al.q->nv(); ++v) {
    if (!al.hat && al.q->is_special_vertex(v)) continue;
    for (int rho : {-1, 1})
      out.push_back({"s~(" + al.q->vertices[v] + ")", {Letter::trivial_inv(v, rho), Letter::trivial(v, -rho)}});
  }
  return out;
}

bool is_projective_string(const Alphabet& al, const Word& w) {
  for (const auto& p : projective_strings(al))
    if (p.word == w) return true;
  return false;
}

bool is_injective_string(const Alphabet& al, const Word& w) {
  for (const auto& p : injective_strings(al))
    if (p.word == w) return true;
  return false;
}

std::vector<std::string> string_labels(const Alphabet& al, const Word& w) {
  std::vector<std::string> out;
  for (const auto& fam : {projective_strings(al), injective_strings(al), simple_strings(al)})
    for (const auto& p : fam)
      if (p.word == w && std::find(out.begin(), out.end(), p.label) == out.end()) out.push_back(p.label);
  return out;
}

std::optional<Successor> successor(const Alphabet& al, const Word& w) {
  const Quiver& q = *al.q;
  if (w.size() < 2 || w.back().kind != LK::Trivial) throw PreconditionError("successor: not a string");
  Slot end = *ltgt(q, w.back());
  for (int a = 0; a < q.na(); ++a) {
    Letter l = Letter::inverse(a);
    if (letter_ok(al, l) && *ltgt(q, l) == end) {
      Word out(w.begin(), w.end() - 1);
      out.push_back(l);
      // tail() is keyed by the slot whose negation holds its first letter
      Word t = tail(al, *lsrc(q, l), false);
      return Successor{cat(out, t), SuccessorTag::Cohook};
    }
  }
  for (size_t k = w.size() - 1; k-- > 1;) {
    if (w[k].kind == LK::Direct) {
      Word out(w.begin(), w.begin() + static_cast<long>(k));
      Slot t = *ltgt(q, w[k]);
      out.push_back(Letter::trivial(t.v, t.sign));
      return Successor{out, SuccessorTag::HookRemoved};
    }
  }
  return std::nullopt;
}

std::optional<Successor> left_successor(const Alphabet& al, const Word& w) {
  auto r = successor(al, inv(w));
  if (!r) return std::nullopt;
  return Successor{inv(r->word), r->tag};
}

std::optional<Word> predecessor(const Alphabet& al, const Word& w) {
  const Quiver& q = *al.q;
  Slot end = *ltgt(q, w.back());
  for (int a = 0; a < q.na(); ++a) {
    Letter l = Letter::direct(a);
    if (letter_ok(al, l) && *ltgt(q, l) == end) {
      Word out(w.begin(), w.end() - 1);
      out.push_back(l);
      return cat(out, tail(al, *lsrc(q, l), true));
    }
  }
  for (size_t k = w.size() - 1; k-- > 1;) {
    if (w[k].kind == LK::Inverse) {
      Word out(w.begin(), w.begin() + static_cast<long>(k));
      Slot t = *ltgt(q, w[k]);
      out.push_back(Letter::trivial(t.v, t.sign));
      return out;
    }
  }
  return std::nullopt;
}

Word tau_string(const Alphabet& al, const Word& w) {
  if (auto r = successor(al, w))
    if (auto l = left_successor(al, r->word)) return l->word;
  if (auto l = left_successor(al, w))
    if (auto r = successor(al, l->word)) return r->word;
  throw PreconditionError("string is projective: " + word_str(*al.q, w));
}

Word tau_inv_string(const Alphabet& al, const Word& w) {
  auto left_pred = [&](const Word& v) -> std::optional<Word> {
    auto r = predecessor(al, inv(v));
    if (!r) return std::nullopt;
    return inv(*r);
  };
  if (auto r = predecessor(al, w))
    if (auto l = left_pred(*r)) return *l;
  if (auto l = left_pred(w))
    if (auto r = predecessor(al, *l)) return *r;
  throw PreconditionError("string is injective: " + word_str(*al.q, w));
}

}  // namespace sga
