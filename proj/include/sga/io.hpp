#pragma once
// Quiver DSL, builtin example quivers and the random quiver generator.

#include <cstdint>
#include <string>

#include "sga/quiver.hpp"

namespace sga {

// Line-oriented DSL:
//   vertex <id>
//   arrow <name> <src>:<+|-> -> <tgt>:<+|->
//   special <name> <vertex>
// `#` starts a comment. Throws ParseError with line and column.
Quiver parse_quiver(const std::string& text);
std::string print_quiver(const Quiver& q);

// Builtin names: EX1 (three vertices, one special loop), EX1F (EX1 with the
// two-fringe-vertex fringing), EX46 (one vertex with an ordinary and a special loop).
bool is_builtin(const std::string& name);
std::string builtin_text(const std::string& name);
// A builtin name or a path to a DSL file.
Quiver load_quiver(const std::string& name_or_path);

// Random skewed-gentle admissible quiver on `n` vertices, deterministic in `seed`.
Quiver random_skewed_gentle(int n, std::uint64_t seed);

}  // namespace sga
