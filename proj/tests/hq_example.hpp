#pragma once
// Colors of the decorated product quiver of the one-vertex example, transcribed
// as reference data: row r is vertex r of H(y) in the reference labelling
// (our r+1), column c is vertex c of H(x). R red, O orange, P purple, B blue,
// C cyan, T teal.

#include <array>
#include <string>

#include "sga/hom_graph.hpp"

namespace hq_example {

inline const char* kX = "1(1,+)- e a e a- 1(1,-)";
inline const char* kY = "1(1,-)- a e a e a- 1(1,-)";

inline const std::array<std::array<const char*, 5>, 6> kColors = {{
    {"PB", "T", "PB", "BT", ""},
    {"R", "RC", "", "C", "RT"},
    {"OB", "", "OB", "B", "P"},
    {"R", "RC", "", "C", "RT"},
    {"RO", "R", "O", "", "RP"},
    {"PB", "T", "PB", "BT", ""},
}};

inline unsigned parse_colors(const std::string& s) {
  unsigned c = 0;
  for (char ch : s) switch (ch) {
      case 'R': c |= sga::Red; break;
      case 'O': c |= sga::Orange; break;
      case 'P': c |= sga::Purple; break;
      case 'B': c |= sga::Blue; break;
      case 'C': c |= sga::Cyan; break;
      case 'T': c |= sga::Teal; break;
    }
  return c;
}

}  // namespace hq_example
