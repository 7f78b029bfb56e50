#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gaplogic/syntax.hpp"
#include "gaplogic/tv3.hpp"

namespace gaplogic {

// Two-valued assignment of atoms. Must cover every atom of the formula under
// evaluation; a missing atom is an EvalError, not a default.
using Valuation = std::map<std::string, bool>;

// Exhaustive truth-table operations refuse formulas with more atoms than
// this (CapError), keeping 2^n enumeration at desk scale.
inline constexpr std::size_t kDefaultAtomCap = 20;

// Atom names of f, lexicographically sorted.
std::vector<std::string> atoms_of(const Formula& f);

// Standard two-valued evaluation. Throws EvalError on non-propositional
// input or a valuation that misses an atom.
bool classical_eval(const Formula& f, const Valuation& v);

// True iff f is false under every valuation (exhaustive enumeration).
bool is_unsat(const Formula& f, std::size_t atom_cap = kDefaultAtomCap);

// True iff f is true under every valuation.
bool is_classical_tautology(const Formula& f,
                            std::size_t atom_cap = kDefaultAtomCap);

// Three-valued evaluation. Works on canonicalize(f) and adds one rule to the
// strong Kleene tables: a negated conjunction ~(A & B) where A or B is
// classically unsatisfiable is N. Such a formula denies something that could
// not have been the case, so it makes no statement; this is what separates
// ~((P & ~P) & ~Q) from genuinely contentful tautologies like ~(P & ~P).
// The check is structural, so it fires on every valuation identically.
Tv3 eval3(const Formula& f, const Valuation& v);

// True iff eval3(f, v) = T for every valuation v: f is a tautology whose
// truth never rests on a vacuous denial. Strictly stronger than classical
// tautology.
bool is_trt_tautology(const Formula& f, std::size_t atom_cap = kDefaultAtomCap);

struct TableRow3 {
  Valuation valuation;
  Tv3 value;
};

// Full three-valued table over the 2^n valuations, atoms sorted, rows in
// lexicographic order with F before T (all-F row first).
std::vector<TableRow3> truth_table3(const Formula& f,
                                    std::size_t atom_cap = kDefaultAtomCap);

}  // namespace gaplogic
