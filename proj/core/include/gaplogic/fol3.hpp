#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gaplogic/syntax.hpp"
#include "gaplogic/tv3.hpp"

namespace gaplogic {

// A finite model: named domain elements, predicate extensions as tuple sets,
// and an environment for free variables. Numeral terms denote the element
// whose name is their decimal spelling.
struct Interpretation {
  std::vector<std::string> domain;  // nonempty, distinct names
  std::map<std::string, std::set<std::vector<std::string>>> predicates;
  std::map<std::string, std::string> env;
};

enum class Semantics { Classical, Presup };

std::string to_string(Semantics s);

// Result of a validity check. countermodel is set whenever value != T and
// explanation says what went wrong there (including, under gap semantics,
// which presupposition failed).
struct Verdict {
  Tv3 value = Tv3::N;
  std::optional<Interpretation> countermodel;
  std::string explanation;
};

using Signature = std::map<std::string, std::size_t>;  // predicate -> arity

inline constexpr int kDefaultMaxDomain = 8;
inline constexpr std::uint64_t kDefaultModelCap = std::uint64_t{1} << 24;

// Elements of the domain satisfying f when x denotes them (classically).
// Free variables of f other than x must be covered by I.env.
std::set<std::string> sat_set(const Formula& f, const std::string& x,
                              const Interpretation& I);

// Standard two-valued Tarskian evaluation over the finite domain.
bool eval_classical_fol(const Formula& f, const Interpretation& I);

// Three-valued evaluation of canonicalize(f):
//
//   ~(exists x. (A & B))  is N when the elements satisfying A, or those
//                         satisfying B, form an empty set: the denial
//                         presupposes both ranges are inhabited. Otherwise
//                         classical.
//   ~(exists x. psi)      with a non-conjunction body: classical.
//   exists x. psi         strong Kleene disjunction over the instances.
//   ~ / &                 propositional rules (see prop3), with quantified
//                         subformulas opaque to the vacuity check.
//
// When the result is N and gap_reason is non-null, *gap_reason names the
// empty set that caused the gap.
Tv3 eval3_fol(const Formula& f, const Interpretation& I,
              std::string* gap_reason = nullptr);

// Streams every model of the signature over a fixed domain size, in a
// deterministic order: extensions are subsets counted in binary, predicates
// in name order with the first predicate changing slowest; the all-empty
// model comes first. Element names are "a", "b", ...
class ModelEnumerator {
 public:
  // Throws CapError when the signature has more than cap models at this size.
  ModelEnumerator(Signature signature, std::size_t size,
                  std::uint64_t cap = kDefaultModelCap);

  std::optional<Interpretation> next();
  std::uint64_t total() const { return total_; }

  static std::string element_name(std::size_t i);

 private:
  std::vector<std::pair<std::string, std::size_t>> preds_;  // name, arity
  std::size_t size_;
  std::uint64_t total_;
  std::uint64_t at_ = 0;
};

// True-premise preservation over every model with domain size 1..max_domain:
// valid iff whenever all premises are T, the conclusion is T. Under presup
// semantics an N premise deactivates the argument and an N conclusion
// refutes it. Returns the first countermodel in enumeration order.
Verdict check_validity(const std::vector<Formula>& premises,
                       const Formula& conclusion, const Signature& signature,
                       int max_domain, Semantics semantics,
                       std::uint64_t model_cap = kDefaultModelCap);

}  // namespace gaplogic
