#include "sga/admissible.hpp"

#include <algorithm>
#include <set>

#include "sga/errors.hpp"

namespace sga {

const char* wtype_name(WType t) {
  switch (t) {
    case WType::UU: return "(u,u)";
    case WType::UP: return "(u,p)";
    case WType::PU: return "(p,u)";
    case WType::PP: return "(p,p)";
    case WType::B: return "(b)";
  }
  return "?";
}

WType string_type(const Quiver& q, const Word& x) {
  bool a = is_punctured(q, x.front()), b = is_punctured(q, x.back());
  if (a && b) return WType::PP;
  if (a) return WType::PU;
  if (b) return WType::UP;
  return WType::UU;
}

AdmWord make_adm(const Quiver& q, const Word& x, bool band) {
  return AdmWord{x, band ? WType::B : string_type(q, x)};
}

AdmWord inverse(const AdmWord& x) {
  AdmWord y{inv(x.word), x.type};
  if (x.type == WType::UP) y.type = WType::PU;
  else if (x.type == WType::PU) y.type = WType::UP;
  return y;
}

std::string adm_str(const Quiver& q, const AdmWord& x) {
  return (x.is_band() ? "band: " : "") + word_str(q, x.word);
}

AdmWord parse_adm(const Quiver& q, const std::string& text) {
  bool band = false;
  Word w = parse_word(q, text, true, &band);
  if (!band && (w.front().kind != LK::TrivialInv || w.back().kind != LK::Trivial))
    throw ParseError("admissible word: a string must start with 1(..)- and end with 1(..)");
  return make_adm(q, w, band);
}

namespace {

Word slice(const Word& w, size_t from, size_t to) {  // [from, to)
  return Word(w.begin() + static_cast<long>(from), w.begin() + static_cast<long>(to));
}

Word cat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Orientation of a special letter from comparing the inverse left part with the right part.
std::optional<Letter> orient(const Quiver& q, int arrow, const Word& left_inv, const Word& right) {
  Cmp c = lex_compare(q, left_inv, right).cmp;
  if (c == Cmp::GT) return Letter::direct(arrow);
  if (c == Cmp::LT) return Letter::inverse(arrow);
  return std::nullopt;
}

// Orientations along a linear word over the skewed-gentle alphabet.
Word orient_string(const Quiver& q, const Word& w, size_t upto) {
  Word out;
  for (size_t k = 0; k < upto; ++k) {
    if (w[k].kind != LK::Special) {
      out.push_back(w[k]);
      continue;
    }
    auto l = orient(q, w[k].id, inv(slice(w, 0, k)), slice(w, k + 1, w.size()));
    if (!l) throw PreconditionError("a_of_w: symmetric position off the centre");
    out.push_back(*l);
  }
  return out;
}

// Orientation at position k of a band.
std::optional<Letter> orient_band(const Quiver& q, const Word& w, size_t k) {
  Word r = rotate(w, k + 1);
  r.pop_back();
  return orient(q, w[k].id, inv(r), r);
}

}  // namespace

AdmWord a_of_w(const Quiver& q, const Word& w, bool band) {
  if (!band) {
    if (!is_symmetric_string(w)) return make_adm(q, orient_string(q, w, w.size()), false);
    size_t m = w.size() / 2;
    Word out = orient_string(q, w, m);
    out.push_back(Letter::trivial(q.arrows[w[m].id].src, -1));
    return make_adm(q, out, false);
  }
  if (!is_symmetric_band(w)) {
    Word out;
    for (size_t k = 0; k < w.size(); ++k) {
      if (w[k].kind != LK::Special) {
        out.push_back(w[k]);
        continue;
      }
      auto l = orient_band(q, w, k);
      if (!l) throw PreconditionError("a_of_w: undecided orientation in a band");
      out.push_back(*l);
    }
    return make_adm(q, out, true);
  }
  if (!is_standard_symmetric(q, w)) throw PreconditionError("a_of_w: symmetric band not in standard form");
  size_t m = (w.size() - 2) / 2;
  Word out{Letter::trivial_inv(q.arrows[w[0].id].src, -1)};
  for (size_t k = 1; k <= m; ++k) {
    if (w[k].kind != LK::Special) {
      out.push_back(w[k]);
      continue;
    }
    auto l = orient_band(q, w, k);
    if (!l) throw PreconditionError("a_of_w: undecided orientation in a band");
    out.push_back(*l);
  }
  out.push_back(Letter::trivial(q.arrows[w[m + 1].id].src, -1));
  return make_adm(q, out, false);
}

Completion completion(const Quiver& q, const AdmWord& x) {
  const Word& w = x.word;
  const size_t l = w.size() - 1;
  switch (x.type) {
    case WType::UU: return {forget(q, w), false};
    case WType::B: return {forget(q, w), true};
    case WType::UP: return {forget(q, cat(w, inv(slice(w, 0, l)))), false};
    case WType::PU: return {forget(q, cat(inv(slice(w, 1, l + 1)), w)), false};
    case WType::PP: return {forget(q, cat(slice(w, 0, l + 1), inv(slice(w, 1, l)))), true};
  }
  return {};
}

bool is_admissible(const Quiver& q, const Word& x, bool band, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  Alphabet hat{&q, true};
  if (band) {
    if (!is_band_word(hat, x)) return fail("not a band word over the gentle alphabet");
    Word f = forget(q, x);
    if (!is_primitive(f)) return fail("completion is not primitive");
    if (is_symmetric_band(f)) return fail("completion is a symmetric band");
    for (size_t k = 0; k < x.size(); ++k) {
      if (!on_special_loop(q, x[k])) continue;
      Word r = rotate(x, k + 1);
      r.pop_back();
      Cmp c = lex_compare(q, inv(r), r).cmp;
      if (c != Cmp::GT && c != Cmp::LT) return fail("undecided orientation at position " + std::to_string(k));
      if ((c == Cmp::GT) != (x[k].kind == LK::Direct)) return fail("wrong orientation at position " + std::to_string(k));
    }
    return true;
  }
  if (!is_word(hat, x) || x.size() < 2 || x.front().kind != LK::TrivialInv || x.back().kind != LK::Trivial)
    return fail("not a string over the gentle alphabet");
  for (size_t k = 1; k + 1 < x.size(); ++k) {
    if (!on_special_loop(q, x[k])) continue;
    Cmp c = lex_compare(q, inv(slice(x, 0, k)), slice(x, k + 1, x.size())).cmp;
    if (c != Cmp::GT && c != Cmp::LT) return fail("undecided orientation at position " + std::to_string(k));
    if ((c == Cmp::GT) != (x[k].kind == LK::Direct)) return fail("wrong orientation at position " + std::to_string(k));
  }
  if (string_type(q, x) == WType::PP) {
    Completion c = completion(q, make_adm(q, x, false));
    if (!is_primitive(c.word)) return fail("completion is not a primitive band");
  }
  return true;
}

bool is_admissible_via_image(const Quiver& q, const Word& x, bool band) {
  Alphabet hat{&q, true}, base{&q, false};
  if (band ? !is_band_word(hat, x) : !is_word(hat, x)) return false;
  if (!band && (x.size() < 2 || x.front().kind != LK::TrivialInv || x.back().kind != LK::Trivial)) return false;
  AdmWord ax = make_adm(q, x, band);
  Completion c = completion(q, ax);
  if (c.band) {
    if (!is_band_word(base, c.word) || !is_primitive(c.word)) return false;
    if (ax.type == WType::B && is_symmetric_band(c.word)) return false;
    if (ax.type == WType::PP && !is_standard_symmetric(q, c.word)) return false;
  } else if (!is_word(base, c.word)) {
    return false;
  }
  AdmWord img = a_of_w(q, c.word, c.band);
  return ax.type == WType::PU ? inverse(ax) == img : ax == img;
}

bool is_projective_adm(const Quiver& q, const AdmWord& x) {
  if (x.in_adm_b()) return false;
  return is_projective_string({&q, false}, completion(q, x).word);
}

bool is_injective_adm(const Quiver& q, const AdmWord& x) {
  if (x.in_adm_b()) return false;
  return is_injective_string({&q, false}, completion(q, x).word);
}

AdmWord tau_adm(const Quiver& q, const AdmWord& x) {
  if (x.in_adm_b()) return x;
  Completion c = completion(q, x);
  Word t = tau_string({&q, false}, c.word);
  AdmWord img = a_of_w(q, t, false);
  return x.type == WType::PU ? inverse(img) : img;
}

Letter Unfolded::at(int i) const {
  long k = static_cast<long>(i) + offset;
  if (periodic) {
    long n = static_cast<long>(seq.size());
    k = ((k % n) + n) % n;
  }
  return seq.at(static_cast<size_t>(k));
}

namespace {

Unfolded unfold(const Quiver& q, const AdmWord& x, bool bar, int delta) {
  const Word& w = x.word;
  const size_t l = w.size() - 1;
  auto fold = [&](const Letter& punct) {
    int e = q.special_loop_at(punct.id);
    if (bar) return Letter::special(e);
    return delta > 0 ? Letter::direct(e) : Letter::inverse(e);
  };
  auto conv = [&](const Word& v) { return bar ? forget(q, v) : v; };
  Unfolded u;
  std::vector<size_t> folds;
  switch (x.type) {
    case WType::UU: u.seq = conv(w); break;
    case WType::B:
      u.seq = conv(w);
      u.periodic = true;
      break;
    case WType::UP:
      u.seq = cat(cat(conv(slice(w, 0, l)), {fold(w[l])}), conv(inv(slice(w, 0, l))));
      folds = {l};
      break;
    case WType::PU:
      u.seq = cat(cat(conv(inv(slice(w, 1, l + 1))), {fold(w[0])}), conv(slice(w, 1, l + 1)));
      u.offset = static_cast<int>(l);
      folds = {l};
      break;
    case WType::PP:
      u.seq = cat(cat(cat(Word{fold(w[0])}, conv(slice(w, 1, l))), {fold(w[l])}), conv(inv(slice(w, 1, l))));
      u.periodic = true;
      folds = {0, l};
      break;
  }
  u.fold.assign(u.seq.size(), false);
  for (size_t f : folds) u.fold[f] = true;
  return u;
}

}  // namespace

Unfolded unfold_bar(const Quiver& q, const AdmWord& x) { return unfold(q, x, true, 0); }
Unfolded unfold_hat(const Quiver& q, const AdmWord& x, int delta) { return unfold(q, x, false, delta); }

EPWord reading(const Quiver& q, const Unfolded& u, int i, int rho) {
  Letter here = u.at(i);
  auto t = ltgt(q, here);
  bool right = t && t->sign == rho;
  const long n = static_cast<long>(u.seq.size());
  long k = static_cast<long>(i) + u.offset;
  if (u.periodic) k = (k % n + n) % n;
  auto back = [&](long from, long count) {
    Word w;
    for (long c = 0; c < count; ++c) {
      long p = ((from - c) % n + n) % n;
      const Letter& l = u.seq[static_cast<size_t>(p)];
      w.push_back(u.fold[static_cast<size_t>(p)] ? l : inv(l));
    }
    return w;
  };
  if (u.periodic) {
    if (right) return EPWord{{}, rotate(u.seq, static_cast<size_t>(k))};
    return EPWord{{}, back(k - 1, n)};
  }
  if (right) return EPWord{slice(u.seq, static_cast<size_t>(k), u.seq.size()), {}};
  return EPWord{back(k - 1, k), {}};
}

std::pair<int, int> index_range(const AdmWord& x) {
  int n = static_cast<int>(x.word.size()) - 1;
  if (x.is_band()) return {0, n};
  return {1, n};
}

std::vector<AdmWord> AdmSet::all() const {
  std::vector<AdmWord> out = adm_s;
  out.insert(out.end(), adm_b.begin(), adm_b.end());
  return out;
}

AdmWord canonical_rotation(const AdmWord& x) {
  if (!x.is_band()) return x;
  return AdmWord{least_rotation(x.word), WType::B};
}

namespace {

void insert_sorted(AdmSet& s, std::set<AdmWord>& seen, const AdmWord& x) {
  AdmWord c = canonical_rotation(x);
  if (!seen.insert(c).second) return;
  (c.in_adm_b() ? s.adm_b : s.adm_s).push_back(c);
}

void finish(AdmSet& s) {
  auto key = [](const AdmWord& a, const AdmWord& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a < b;
  };
  std::sort(s.adm_s.begin(), s.adm_s.end(), key);
  std::sort(s.adm_b.begin(), s.adm_b.end(), key);
}

}  // namespace

AdmSet enumerate_adm(const Quiver& q, int max_len) {
  AdmSet out;
  std::set<AdmWord> seen;
  Alphabet base{&q, false};
  // Symmetric words fold to roughly half their length.
  auto strs = enumerate_strings(base, 2 * max_len + 1);
  for (const Word& w : strs.strings) {
    AdmWord x = a_of_w(q, w, false);
    if (static_cast<int>(x.word.size()) > max_len) continue;
    insert_sorted(out, seen, x);
    insert_sorted(out, seen, inverse(x));
  }
  auto bands = enumerate_bands(base, 2 * max_len);
  for (const Word& b : bands.bands) {
    for (const Word& w : standard_forms(q, b)) {
      AdmWord x = a_of_w(q, w, true);
      if (static_cast<int>(x.word.size()) > max_len) continue;
      insert_sorted(out, seen, x);
      insert_sorted(out, seen, inverse(x));
    }
  }
  // Longer skewed-gentle words could only fold into admissible words of length
  // beyond the bound, so completeness depends only on the gentle side.
  out.truncated = strs.truncated || bands.truncated;
  finish(out);
  return out;
}

AdmSet enumerate_adm_direct(const Quiver& q, int max_len) {
  AdmSet out;
  std::set<AdmWord> seen;
  Alphabet hat{&q, true};
  auto strs = enumerate_strings(hat, max_len);
  for (const Word& w : strs.strings)
    if (is_admissible(q, w, false)) insert_sorted(out, seen, make_adm(q, w, false));
  auto bands = enumerate_bands(hat, max_len);
  for (const Word& b : bands.bands)
    for (const Word& w : {b, inv(b)})
      if (is_admissible(q, w, true)) insert_sorted(out, seen, make_adm(q, w, true));
  out.truncated = strs.truncated || bands.truncated;
  finish(out);
  return out;
}

}  // namespace sga
