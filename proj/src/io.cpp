#include "sga/io.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "sga/errors.hpp"

namespace sga {

namespace {

[[noreturn]] void fail(int line, size_t col, const std::string& msg) {
  throw ParseError("quiver: line " + std::to_string(line) + ", column " + std::to_string(col + 1) + ": " + msg);
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == '-' || c == '*' || c == '(' || c == ')' || c == ',' || c == ':' || c == '#') return false;
  return true;
}

}  // namespace

Quiver parse_quiver(const std::string& text) {
  Quiver q;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::vector<size_t> cols;
    std::string t;
    size_t pos = 0;
    while (ls >> t) {
      pos = line.find(t, pos);
      tok.push_back(t);
      cols.push_back(pos);
      pos += t.size();
    }
    if (tok.empty()) continue;
    const std::string& cmd = tok[0];
    if (cmd == "vertex") {
      if (tok.size() != 2) fail(lineno, cols[0], "expected 'vertex <id>'");
      if (!valid_name(tok[1])) fail(lineno, cols[1], "invalid vertex id '" + tok[1] + "'");
      if (q.vertex(tok[1]) >= 0) fail(lineno, cols[1], "duplicate vertex '" + tok[1] + "'");
      q.add_vertex(tok[1]);
    } else if (cmd == "arrow") {
      if (tok.size() != 5 || tok[3] != "->") fail(lineno, cols[0], "expected 'arrow <name> <src>:<sign> -> <tgt>:<sign>'");
      if (!valid_name(tok[1])) fail(lineno, cols[1], "invalid arrow name '" + tok[1] + "'");
      if (q.arrow(tok[1]) >= 0) fail(lineno, cols[1], "duplicate arrow '" + tok[1] + "'");
      auto end = [&](size_t k) {
        const std::string& e = tok[k];
        size_t c = e.rfind(':');
        if (c == std::string::npos || c + 2 != e.size() || (e[c + 1] != '+' && e[c + 1] != '-'))
          fail(lineno, cols[k], "expected <vertex>:<+|-> but got '" + e + "'");
        int v = q.vertex(e.substr(0, c));
        if (v < 0) fail(lineno, cols[k], "unknown vertex '" + e.substr(0, c) + "'");
        return std::pair<int, int>{v, e[c + 1] == '+' ? 1 : -1};
      };
      auto [s, s1] = end(2);
      auto [d, t1] = end(4);
      q.add_arrow(tok[1], s, s1, d, t1);
    } else if (cmd == "special") {
      if (tok.size() != 3) fail(lineno, cols[0], "expected 'special <name> <vertex>'");
      if (!valid_name(tok[1])) fail(lineno, cols[1], "invalid arrow name '" + tok[1] + "'");
      if (q.arrow(tok[1]) >= 0) fail(lineno, cols[1], "duplicate arrow '" + tok[1] + "'");
      int v = q.vertex(tok[2]);
      if (v < 0) fail(lineno, cols[2], "unknown vertex '" + tok[2] + "'");
      if (q.is_special_vertex(v)) fail(lineno, cols[2], "vertex '" + tok[2] + "' already has a special loop");
      q.add_special_loop(tok[1], v);
    } else {
      fail(lineno, cols[0], "unknown directive '" + cmd + "'");
    }
  }
  return q;
}

std::string print_quiver(const Quiver& q) {
  std::ostringstream os;
  for (const auto& v : q.vertices) os << "vertex " << v << '\n';
  for (const auto& a : q.arrows) {
    if (a.special && a.is_loop()) {
      os << "special " << a.name << ' ' << q.vertices[a.src] << '\n';
      continue;
    }
    os << "arrow " << a.name << ' ' << q.vertices[a.src] << ':' << (a.s1 > 0 ? '+' : '-') << " -> "
       << q.vertices[a.tgt] << ':' << (a.t1 > 0 ? '+' : '-') << '\n';
  }
  return os.str();
}

namespace {

const char* kEx1 =
    "vertex 1\nvertex 2\nvertex 3\n"
    "arrow a 1:+ -> 2:+\n"
    "arrow b 2:+ -> 3:-\n"
    "arrow c 3:+ -> 1:+\n"
    "special e 2\n";

// Fringe vertices 5 and 6; arrow pAB runs from B to A.
const char* kEx1Fringe =
    "vertex 5\nvertex 6\n"
    "arrow p53 3:- -> 5:+\n"
    "arrow p15 5:+ -> 1:-\n"
    "arrow p61 1:- -> 6:+\n"
    "arrow p36 6:+ -> 3:+\n";

const char* kEx46 =
    "vertex 1\n"
    "arrow a 1:+ -> 1:+\n"
    "special e 1\n";

}  // namespace

bool is_builtin(const std::string& name) { return name == "EX1" || name == "EX1F" || name == "EX46"; }

std::string builtin_text(const std::string& name) {
  if (name == "EX1") return kEx1;
  if (name == "EX1F") return std::string(kEx1) + kEx1Fringe;
  if (name == "EX46") return kEx46;
  throw PreconditionError("unknown builtin quiver '" + name + "'");
}

Quiver load_quiver(const std::string& name) {
  if (is_builtin(name)) return parse_quiver(builtin_text(name));
  std::ifstream f(name);
  if (!f) throw ParseError("cannot open quiver file '" + name + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_quiver(ss.str());
}

Quiver random_skewed_gentle(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Quiver q;
  for (int v = 0; v < n; ++v) q.add_vertex(std::to_string(v + 1));
  std::bernoulli_distribution coin(0.35);
  for (int v = 0; v < n; ++v)
    if (coin(rng) || (v == n - 1 && q.special_count() == 0)) q.add_special_loop("e" + std::to_string(v + 1), v);
  std::uniform_int_distribution<int> pick_v(0, n - 1), pick_s(0, 1);
  int made = 0;
  for (int attempt = 0; attempt < 40 * n && made < n + 1; ++attempt) {
    Slot s{pick_v(rng), pick_s(rng) ? 1 : -1}, t{pick_v(rng), pick_s(rng) ? 1 : -1};
    if (q.out_at(s) >= 0 || q.in_at(t) >= 0) continue;
    Quiver trial = q;
    trial.add_arrow("a" + std::to_string(made + 1), s.v, s.sign, t.v, t.sign);
    if (!validate(trial).is_skewed_gentle) continue;
    q = trial;
    ++made;
  }
  return q;
}

}  // namespace sga
