#pragma once

#include <string>

namespace gaplogic {

// Three-valued verdict. N marks a truth-value gap: the formula fails to make
// a statement rather than making a false one. The order F < N < T makes the
// strong Kleene tables expressible as min/max.
enum class Tv3 : unsigned char { F = 0, N = 1, T = 2 };

constexpr Tv3 tv3_and(Tv3 a, Tv3 b) { return a < b ? a : b; }
constexpr Tv3 tv3_or(Tv3 a, Tv3 b) { return a < b ? b : a; }
constexpr Tv3 tv3_not(Tv3 a) {
  return static_cast<Tv3>(2 - static_cast<unsigned char>(a));
}
constexpr Tv3 tv3_implies(Tv3 a, Tv3 b) { return tv3_or(tv3_not(a), b); }
constexpr Tv3 tv3_iff(Tv3 a, Tv3 b) {
  return tv3_and(tv3_implies(a, b), tv3_implies(b, a));
}

constexpr Tv3 tv3_of_bool(bool b) { return b ? Tv3::T : Tv3::F; }

inline const char* to_string(Tv3 v) {
  switch (v) {
    case Tv3::F: return "F";
    case Tv3::N: return "N";
    default: return "T";
  }
}

}  // namespace gaplogic
