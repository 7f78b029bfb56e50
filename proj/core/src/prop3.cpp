#include "gaplogic/prop3.hpp"

#include <set>
#include <stdexcept>
#include <unordered_map>

namespace gaplogic {

namespace {

using Kind = Formula::Kind;

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Kind::Atom:
      out.insert(f.name());
      return;
    case Kind::Pred:
      return;
    case Kind::Not:
      collect_atoms(f.child(), out);
      return;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
      return;
    case Kind::Exists:
    case Kind::ForAll:
      collect_atoms(f.body(), out);
      return;
  }
}

void require_propositional(const Formula& f, const char* op) {
  if (!is_propositional(f)) {
    throw EvalError(std::string(op) + ": input contains predicates or quantifiers");
  }
}

bool atom_value(const Valuation& v, const std::string& name) {
  auto it = v.find(name);
  if (it == v.end()) {
    throw EvalError("valuation does not assign atom '" + name + "'");
  }
  return it->second;
}

bool classical_rec(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case Kind::Atom:
      return atom_value(v, f.name());
    case Kind::Not:
      return !classical_rec(f.child(), v);
    case Kind::And:
      return classical_rec(f.lhs(), v) && classical_rec(f.rhs(), v);
    case Kind::Or:
      return classical_rec(f.lhs(), v) || classical_rec(f.rhs(), v);
    case Kind::Implies:
      return !classical_rec(f.lhs(), v) || classical_rec(f.rhs(), v);
    case Kind::Iff:
      return classical_rec(f.lhs(), v) == classical_rec(f.rhs(), v);
    default:
      throw EvalError("classical_eval: input contains predicates or quantifiers");
  }
}

// Bit-mask evaluator used by the exhaustive enumerations: atom i reads bit i.
bool eval_bits(const Formula& f, const std::map<std::string, std::size_t>& idx,
               std::uint32_t bits) {
  switch (f.kind()) {
    case Kind::Atom:
      return (bits >> idx.at(f.name())) & 1u;
    case Kind::Not:
      return !eval_bits(f.child(), idx, bits);
    case Kind::And:
      return eval_bits(f.lhs(), idx, bits) && eval_bits(f.rhs(), idx, bits);
    case Kind::Or:
      return eval_bits(f.lhs(), idx, bits) || eval_bits(f.rhs(), idx, bits);
    case Kind::Implies:
      return !eval_bits(f.lhs(), idx, bits) || eval_bits(f.rhs(), idx, bits);
    case Kind::Iff:
      return eval_bits(f.lhs(), idx, bits) == eval_bits(f.rhs(), idx, bits);
    default:
      throw EvalError("eval_bits: input contains predicates or quantifiers");
  }
}

std::map<std::string, std::size_t> atom_indices(
    const std::vector<std::string>& atoms) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < atoms.size(); ++i) idx.emplace(atoms[i], i);
  return idx;
}

void check_cap(std::size_t atom_count, std::size_t cap, const char* op) {
  if (atom_count > cap || atom_count > 31) {  // 2^n rows must fit a uint32
    throw CapError(std::string(op) + ": " + std::to_string(atom_count) +
                   " atoms exceeds the cap of " + std::to_string(cap));
  }
}

using UnsatMemo = std::unordered_map<Formula, bool, FormulaHash>;

bool is_unsat_memo(const Formula& f, std::size_t cap, UnsatMemo& memo) {
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  const bool result = is_unsat(f, cap);
  memo.emplace(f, result);
  return result;
}

// Assumes f is canonical, so only Atom, Not, and And appear.
Tv3 eval3_canon(const Formula& f, const Valuation& v, std::size_t cap,
                UnsatMemo& memo) {
  switch (f.kind()) {
    case Kind::Atom:
      return tv3_of_bool(atom_value(v, f.name()));
    case Kind::And:
      return tv3_and(eval3_canon(f.lhs(), v, cap, memo),
                     eval3_canon(f.rhs(), v, cap, memo));
    case Kind::Not: {
      const Formula inner = f.child();
      if (inner.is(Kind::And) &&
          (is_unsat_memo(inner.lhs(), cap, memo) ||
           is_unsat_memo(inner.rhs(), cap, memo))) {
        return Tv3::N;
      }
      return tv3_not(eval3_canon(inner, v, cap, memo));
    }
    default:
      throw std::logic_error("eval3: non-canonical node");
  }
}

}  // namespace

std::vector<std::string> atoms_of(const Formula& f) {
  std::set<std::string> s;
  collect_atoms(f, s);
  return {s.begin(), s.end()};
}

bool classical_eval(const Formula& f, const Valuation& v) {
  require_propositional(f, "classical_eval");
  return classical_rec(f, v);
}

bool is_unsat(const Formula& f, std::size_t atom_cap) {
  require_propositional(f, "is_unsat");
  const std::vector<std::string> atoms = atoms_of(f);
  check_cap(atoms.size(), atom_cap, "is_unsat");
  const auto idx = atom_indices(atoms);
  const std::uint32_t rows = 1u << atoms.size();
  for (std::uint32_t bits = 0; bits < rows; ++bits) {
    if (eval_bits(f, idx, bits)) return false;
  }
  return true;
}

bool is_classical_tautology(const Formula& f, std::size_t atom_cap) {
  require_propositional(f, "is_classical_tautology");
  const std::vector<std::string> atoms = atoms_of(f);
  check_cap(atoms.size(), atom_cap, "is_classical_tautology");
  const auto idx = atom_indices(atoms);
  const std::uint32_t rows = 1u << atoms.size();
  for (std::uint32_t bits = 0; bits < rows; ++bits) {
    if (!eval_bits(f, idx, bits)) return false;
  }
  return true;
}

Tv3 eval3(const Formula& f, const Valuation& v) {
  require_propositional(f, "eval3");
  UnsatMemo memo;
  return eval3_canon(canonicalize(f), v, kDefaultAtomCap, memo);
}

bool is_trt_tautology(const Formula& f, std::size_t atom_cap) {
  require_propositional(f, "is_trt_tautology");
  const std::vector<std::string> atoms = atoms_of(f);
  check_cap(atoms.size(), atom_cap, "is_trt_tautology");
  const Formula canon = canonicalize(f);
  UnsatMemo memo;  // the vacuity checks do not depend on the valuation
  const std::uint32_t rows = 1u << atoms.size();
  Valuation v;
  for (const std::string& a : atoms) v[a] = false;
  for (std::uint32_t bits = 0; bits < rows; ++bits) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      v[atoms[i]] = (bits >> (atoms.size() - 1 - i)) & 1u;
    }
    if (eval3_canon(canon, v, atom_cap, memo) != Tv3::T) return false;
  }
  return true;
}

std::vector<TableRow3> truth_table3(const Formula& f, std::size_t atom_cap) {
  require_propositional(f, "truth_table3");
  const std::vector<std::string> atoms = atoms_of(f);
  check_cap(atoms.size(), atom_cap, "truth_table3");
  const Formula canon = canonicalize(f);
  UnsatMemo memo;
  const std::uint32_t rows = 1u << atoms.size();
  std::vector<TableRow3> table;
  table.reserve(rows);
  for (std::uint32_t bits = 0; bits < rows; ++bits) {
    Valuation v;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      v[atoms[i]] = (bits >> (atoms.size() - 1 - i)) & 1u;
    }
    table.push_back({v, eval3_canon(canon, v, atom_cap, memo)});
  }
  return table;
}

}  // namespace gaplogic
