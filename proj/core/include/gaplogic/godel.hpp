#ifndef GAPLOGIC_GODEL_HPP
#define GAPLOGIC_GODEL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaplogic/syntax.hpp"
#include "gaplogic/tv3.hpp"

namespace gaplogic {

// A structural invariant of the diagonal construction failed. This is never
// expected to fire; it guards the construction rather than its inputs.
class SelfCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bijective base-17 code over a fixed token alphabet. Every nonempty token
// sequence maps to a unique positive natural and back:
//   encode(t1..tm) = sum of index(tj) * 17^(m-j), indices 1-based.
class GodelCodec {
 public:
  GodelCodec() = default;

  // The token list, in index order: ~ & ( ) , exists . x y z Prf Diag ; # d0
  // d1 ->
  static const std::vector<std::string>& alphabet();

  // Empty input encodes to 0; throws EvalError on a token outside the
  // alphabet.
  Nat encode(const std::vector<std::string>& tokens) const;

  // Inverse of encode on positive naturals; throws EvalError on n < 1.
  std::vector<std::string> decode(const Nat& n) const;
};

// Canonical token spelling of a formula, matching the render() shape with
// numerals spelled as "#" followed by binary digit tokens d0/d1, most
// significant first (zero is "# d0"). Throws EvalError when the formula uses
// syntax the alphabet cannot spell: named atoms, predicates other than
// Prf/Diag, variables other than x/y/z, or the |, <->, forall connectives.
std::vector<std::string> formula_tokens(const Formula& f);

// Parses a token sequence back to a formula. Returns nullopt unless the
// sequence is the canonical spelling of some expressible formula, i.e.
// formula_tokens(*result) reproduces the input exactly.
std::optional<Formula> parse_token_formula(
    const std::vector<std::string>& tokens);

// encode(formula_tokens(f)): the numeric code of a formula. Injective.
Nat goedel_number(const Formula& f);

// If y decodes to a formula with exactly one free variable v, the code of
// that formula with the numeral of y itself substituted for v; otherwise
// nullopt. The binary relation Diag(y,z) holds iff diag(y) = z.
std::optional<Nat> diag(const Nat& y);

// A finite axiom list closed under modus ponens. Axioms must be closed
// formulas; they need not be expressible in the token alphabet, though only
// expressible sentences can appear in encoded proofs.
struct ToySystem {
  std::vector<Formula> axioms;
};

struct ProvableEntry {
  Formula sentence;
  std::vector<Formula> proof;  // lines; each is an axiom or follows by MP
  // Codes are absent when the sentence (or some proof line) is not
  // expressible in the token alphabet.
  std::optional<Nat> code;
  std::optional<Nat> proof_code;
};

struct Closure {
  std::vector<ProvableEntry> entries;  // axioms first, then discovery order

  bool contains(const Formula& f) const;
  const ProvableEntry* find(const Formula& f) const;
};

// Least set containing the axioms and closed under modus ponens, with one
// canonical proof per member: shortest line count, ties broken by rendered
// text. Finite because every MP conclusion is a subformula of an axiom.
Closure compute_closure(const ToySystem& sys);

// Code of a proof: the lines' token spellings joined with ";" tokens.
Nat encode_proof(const std::vector<Formula>& lines);

// The proof relation on naturals: x decodes to a ";"-separated stream of
// canonical sentence spellings, every line is an axiom or follows from two
// earlier lines by modus ponens, and the last line's code is z. Total:
// malformed x is simply not a proof.
bool check_proof(const Nat& x, const Nat& z, const ToySystem& sys);

// Exact emptiness test for {x : check_proof(x, z)}: returns the canonical
// proof code when z codes a provable sentence, nullopt otherwise.
std::optional<Nat> prf_witness(const Nat& z, const ToySystem& sys);

// The diagonal construction. The template U denies that any z is both
// provable and the diagonalization of y:
//   U = ~(exists x)(exists z)(Prf(x,z) & Diag(y,z))
// G substitutes U's own code k for y, so G speaks about the set containing
// exactly its own code. H denies provability of G outright, and J states
// their equivalence. None of this depends on the axiom list.
struct FixedPoint {
  Formula template_formula;  // U, free variable y
  Nat template_code;         // k
  Formula sentence;          // G = U with #k for y
  Nat sentence_code;         // the code of G
  Formula unprovability_claim;  // H = ~(exists x)Prf(x, #code(G))
  Formula equivalence;          // J = G <-> H
};

// Builds the fixed point and verifies diag(k) = code(G); throws
// SelfCheckError if the arithmetic does not close.
FixedPoint build_fixed_point();

// Verdict for one instance K_n = ~(exists x)(Prf(x,n) & Diag(k,n)) under the
// gap rule with exact term emptiness: the Prf term is empty iff n codes no
// provable sentence, the Diag term is empty iff n differs from code(G).
struct InstanceReport {
  Nat n;
  Tv3 verdict = Tv3::N;  // N iff a term is empty; F otherwise
  bool prf_term_empty = false;
  bool diag_term_empty = false;
  // Which universally quantified reading of K_n has an empty antecedent.
  std::string direction;
};

InstanceReport eval_instance_K(const Nat& n, const ToySystem& sys);

// Instance-by-instance reading of G over a sample of naturals, plus the
// overall verdict: with every instance carrying an empty term, G comes out N
// whenever G is unprovable (and F in a system that proves it; this is
// checked, not assumed). as_written_classical is the two-valued verdict of
// the nested form, decided symbolically from the emptiness facts.
struct UnrollReport {
  Tv3 overall = Tv3::N;
  Tv3 as_written_classical = Tv3::T;
  bool sentence_provable = false;
  std::vector<InstanceReport> instances;
};

// 1..bound plus every closure member's code plus code(G), sorted, unique.
std::vector<Nat> default_sample(const ToySystem& sys, unsigned bound = 64);

// Empty sample means default_sample(sys).
UnrollReport eval_G_unrolled(const ToySystem& sys,
                             std::vector<Nat> sample = {});

// Three-valued and classical verdicts for G, H, and J = G <-> H. Under the
// gap semantics H stays classical (its pattern has a single term), so an
// unprovable G yields g = N, h = T, j = N. Classically all three are T.
struct EquivalenceReport {
  Tv3 g_gap = Tv3::N;
  Tv3 h_gap = Tv3::T;
  Tv3 j_gap = Tv3::N;
  Tv3 g_classical = Tv3::T;
  Tv3 h_classical = Tv3::T;
  Tv3 j_classical = Tv3::T;
  std::string note;
};

EquivalenceReport eval_J(const ToySystem& sys);

}  // namespace gaplogic

#endif  // GAPLOGIC_GODEL_HPP
