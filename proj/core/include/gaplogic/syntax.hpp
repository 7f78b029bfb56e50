#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gaplogic {

// Arbitrary-precision natural number. Formula codes grow past 10^100 even for
// short sentences, so fixed-width integers are not an option here.
using Nat = mpz_class;

// Raised on malformed input text. position() is a 0-based byte offset into
// the offending string.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Raised when an operation is applied to input it cannot handle (wrong
// signature, open formula where a sentence is required, and so on).
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a computation would exceed a configured resource cap.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A term: either a variable or a numeral. Numerals only occur where formulas
// talk about numbers; model-theoretic evaluation maps them to domain elements
// by name.
class Term {
 public:
  enum class Kind { Var, Numeral };

  static Term var(std::string name);
  static Term numeral(Nat value);

  Kind kind() const { return kind_; }
  bool is_var() const { return kind_ == Kind::Var; }
  bool is_numeral() const { return kind_ == Kind::Numeral; }

  const std::string& name() const;  // Var only
  const Nat& value() const;         // Numeral only

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }
  std::uint64_t hash() const;

 private:
  Term(Kind kind, std::string name, Nat value)
      : kind_(kind), name_(std::move(name)), value_(std::move(value)) {}

  Kind kind_;
  std::string name_;
  Nat value_;
};

struct FormulaNode;

// Immutable formula AST. Formula is a cheap value type (one shared_ptr);
// subtrees are shared freely. Connectives are binary, quantifiers bind one
// variable. Equality is structural, hashes are precomputed bottom-up.
class Formula {
 public:
  enum class Kind { Atom, Pred, Not, And, Or, Implies, Iff, Exists, ForAll };

  static Formula atom(std::string name);
  static Formula pred(std::string name, std::vector<Term> args);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula biconditional(Formula lhs, Formula rhs);
  static Formula exists(std::string var, Formula body);
  static Formula for_all(std::string var, Formula body);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  const std::string& name() const;        // Atom, Pred
  const std::vector<Term>& args() const;  // Pred
  Formula child() const;                  // Not
  Formula lhs() const;                    // And, Or, Implies, Iff
  Formula rhs() const;                    // And, Or, Implies, Iff
  const std::string& bound_var() const;   // Exists, ForAll
  Formula body() const;                   // Exists, ForAll

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }
  std::uint64_t hash() const;

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node)
      : node_(std::move(node)) {}
  const FormulaNode& node() const { return *node_; }

  std::shared_ptr<const FormulaNode> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const {
    return static_cast<std::size_t>(f.hash());
  }
};

// Parses the concrete syntax:
//
//   formula := iff
//   iff     := imp ("<->" imp)*           left-associative
//   imp     := or ("->" imp)?             right-associative
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "~" unary | "(" formula ")" | quant | atom
//   quant   := ("forall" | "exists") ident "." unary
//   atom    := ident ( "(" term ("," term)* ")" )?
//   term    := ident | natural-literal
//
// Identifiers are a letter followed by letters or digits; "forall" and
// "exists" are reserved.
// A name must be applied to the same number of arguments everywhere it
// occurs; a zero-argument occurrence is a propositional atom.
Formula parse_formula(std::string_view text);

struct RenderOptions {
  // When set, every connective and quantifier gets its own parentheses.
  bool full_parens = false;
};

// Prints a formula in the concrete syntax above. The default style wraps
// every binary connective in parentheses and leaves negations and quantifier
// bodies bare; full_parens wraps those too. parse_formula(render(f)) == f
// holds either way.
std::string render(const Formula& f, const RenderOptions& opts = {});
std::string render(const Term& t);

// Rewrites into the {~, &, exists} fragment:
//
//   A -> B    becomes  ~(A & ~B)
//   A | B     becomes  ~(~A & ~B)
//   A <-> B   becomes  ~(A & ~B) & ~(B & ~A)
//   forall x. A  becomes  ~(exists x. ~A)
//
// Double negations introduced along the way are eliminated, so the result
// never contains ~~. Atoms and predicates are left untouched. The gap
// semantics is sensitive to this surface shape, which is why the rewrite is
// pinned down exactly rather than left to a generic NNF pass.
Formula canonicalize(const Formula& f);

std::set<std::string> free_variables(const Formula& f);

// Replaces free occurrences of var by a numeral. Only numerals are allowed
// on the right so capture is impossible; passing a variable term throws
// EvalError.
Formula substitute(const Formula& f, const std::string& var,
                   const Term& replacement);

// Name -> arity for every atom and predicate in f. Atoms count as arity 0.
std::map<std::string, std::size_t> predicate_arities(const Formula& f);

// True when f contains no quantifiers and no applied predicates.
bool is_propositional(const Formula& f);

}  // namespace gaplogic
