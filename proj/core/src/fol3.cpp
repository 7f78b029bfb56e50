#include "gaplogic/fol3.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "gaplogic/prop3.hpp"

namespace gaplogic {

namespace {

using Kind = Formula::Kind;
using Env = std::map<std::string, std::string>;

const std::set<std::vector<std::string>>& extension(const Interpretation& I,
                                                    const std::string& name) {
  auto it = I.predicates.find(name);
  if (it == I.predicates.end()) {
    throw EvalError("predicate '" + name + "' is not interpreted in the model");
  }
  return it->second;
}

// Checks the model interprets every predicate of f at the arity f uses.
void validate_model_for(const Formula& f, const Interpretation& I) {
  if (I.domain.empty()) throw EvalError("domain must be nonempty");
  for (const auto& [name, arity] : predicate_arities(f)) {
    for (const auto& row : extension(I, name)) {
      if (row.size() != arity) {
        throw EvalError("predicate '" + name + "' is used with " +
                        std::to_string(arity) +
                        " arguments but its extension holds a tuple of size " +
                        std::to_string(row.size()));
      }
    }
  }
}

std::string term_element(const Term& t, const Interpretation& I,
                         const Env& env) {
  if (t.is_var()) {
    auto it = env.find(t.name());
    if (it == env.end()) throw EvalError("unbound variable '" + t.name() + "'");
    return it->second;
  }
  std::string name = t.value().get_str();
  if (std::find(I.domain.begin(), I.domain.end(), name) == I.domain.end()) {
    throw EvalError("numeral " + name + " does not name a domain element");
  }
  return name;
}

// Restores (or removes) a variable binding on scope exit.
class ScopedBinding {
 public:
  ScopedBinding(Env& env, std::string var) : env_(env), var_(std::move(var)) {
    auto it = env_.find(var_);
    if (it != env_.end()) {
      had_old_ = true;
      old_ = it->second;
    }
  }
  ScopedBinding(const ScopedBinding&) = delete;
  ScopedBinding& operator=(const ScopedBinding&) = delete;
  ~ScopedBinding() {
    if (had_old_) {
      env_[var_] = old_;
    } else {
      env_.erase(var_);
    }
  }
  void bind(const std::string& value) { env_[var_] = value; }

 private:
  Env& env_;
  std::string var_;
  bool had_old_ = false;
  std::string old_;
};

bool classical_rec(const Formula& f, const Interpretation& I, Env& env) {
  switch (f.kind()) {
    case Kind::Atom:
      return extension(I, f.name()).count({}) > 0;
    case Kind::Pred: {
      std::vector<std::string> tuple;
      tuple.reserve(f.args().size());
      for (const Term& t : f.args()) tuple.push_back(term_element(t, I, env));
      return extension(I, f.name()).count(tuple) > 0;
    }
    case Kind::Not:
      return !classical_rec(f.child(), I, env);
    case Kind::And:
      return classical_rec(f.lhs(), I, env) && classical_rec(f.rhs(), I, env);
    case Kind::Or:
      return classical_rec(f.lhs(), I, env) || classical_rec(f.rhs(), I, env);
    case Kind::Implies:
      return !classical_rec(f.lhs(), I, env) || classical_rec(f.rhs(), I, env);
    case Kind::Iff:
      return classical_rec(f.lhs(), I, env) == classical_rec(f.rhs(), I, env);
    case Kind::Exists: {
      ScopedBinding b(env, f.bound_var());
      for (const std::string& d : I.domain) {
        b.bind(d);
        if (classical_rec(f.body(), I, env)) return true;
      }
      return false;
    }
    case Kind::ForAll: {
      ScopedBinding b(env, f.bound_var());
      for (const std::string& d : I.domain) {
        b.bind(d);
        if (!classical_rec(f.body(), I, env)) return false;
      }
      return true;
    }
  }
  throw std::logic_error("unreachable");
}

void require_closed_under(const Formula& f, const Env& env,
                          const std::string& extra = {}) {
  for (const std::string& v : free_variables(f)) {
    if (v != extra && env.find(v) == env.end()) {
      throw EvalError("unbound variable '" + v + "'");
    }
  }
}

std::set<std::string> sat_set_env(const Formula& f, const std::string& x,
                                  const Interpretation& I, Env& env) {
  std::set<std::string> out;
  ScopedBinding b(env, x);
  for (const std::string& d : I.domain) {
    b.bind(d);
    if (classical_rec(f, I, env)) out.insert(d);
  }
  return out;
}

// --- vacuity check plumbing ---------------------------------------------
//
// The propositional unsat test underlying the gap rule treats quantified
// subformulas and predicate applications as opaque letters: structurally
// identical subformulas share a letter, and a lone letter is satisfiable.

using LetterMap = std::unordered_map<Formula, Formula, FormulaHash>;

Formula letterize(const Formula& f, LetterMap& letters, int& counter) {
  switch (f.kind()) {
    case Kind::Not:
      return Formula::negation(letterize(f.child(), letters, counter));
    case Kind::And:
      return Formula::conjunction(letterize(f.lhs(), letters, counter),
                                  letterize(f.rhs(), letters, counter));
    default: {  // Atom, Pred, or Exists: opaque
      auto it = letters.find(f);
      if (it != letters.end()) return it->second;
      Formula letter = Formula::atom("q" + std::to_string(counter++));
      letters.emplace(f, letter);
      return letter;
    }
  }
}

using UnsatMemo = std::unordered_map<Formula, bool, FormulaHash>;

bool conjunct_unsat(const Formula& f, UnsatMemo& memo) {
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  LetterMap letters;
  int counter = 0;
  const bool result = is_unsat(letterize(f, letters, counter));
  memo.emplace(f, result);
  return result;
}

void note_gap(std::string* gap, std::string reason) {
  if (gap != nullptr && gap->empty()) *gap = std::move(reason);
}

// Assumes canonical input: Atom, Pred, Not, And, Exists only.
Tv3 eval3_rec(const Formula& f, const Interpretation& I, Env& env,
              UnsatMemo& memo, std::string* gap) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Pred:
      return tv3_of_bool(classical_rec(f, I, env));
    case Kind::And: {
      const Tv3 a = eval3_rec(f.lhs(), I, env, memo, gap);
      if (a == Tv3::F) return Tv3::F;
      return tv3_and(a, eval3_rec(f.rhs(), I, env, memo, gap));
    }
    case Kind::Exists: {
      ScopedBinding b(env, f.bound_var());
      Tv3 acc = Tv3::F;
      for (const std::string& d : I.domain) {
        b.bind(d);
        acc = tv3_or(acc, eval3_rec(f.body(), I, env, memo, gap));
        if (acc == Tv3::T) break;
      }
      return acc;
    }
    case Kind::Not: {
      const Formula inner = f.child();
      if (inner.is(Kind::Exists)) {
        const std::string& x = inner.bound_var();
        const Formula body = inner.body();
        if (body.is(Kind::And)) {
          // The denial ranges over two terms; both must be inhabited for it
          // to state anything.
          const Formula alpha = body.lhs();
          const Formula beta = body.rhs();
          const bool alpha_empty = sat_set_env(alpha, x, I, env).empty();
          const bool beta_empty = sat_set_env(beta, x, I, env).empty();
          if (alpha_empty || beta_empty) {
            std::string reason = "term " +
                                 render(alpha_empty ? alpha : beta) +
                                 " is empty";
            if (alpha_empty && beta_empty) {
              reason = "terms " + render(alpha) + " and " + render(beta) +
                       " are empty";
            }
            note_gap(gap, std::move(reason));
            return Tv3::N;
          }
          ScopedBinding b(env, x);
          for (const std::string& d : I.domain) {
            b.bind(d);
            if (classical_rec(body, I, env)) return Tv3::F;
          }
          return Tv3::T;
        }
        return tv3_of_bool(classical_rec(f, I, env));
      }
      if (inner.is(Kind::And)) {
        const bool lu = conjunct_unsat(inner.lhs(), memo);
        if (lu || conjunct_unsat(inner.rhs(), memo)) {
          note_gap(gap, "denied conjunct " +
                            render(lu ? inner.lhs() : inner.rhs()) +
                            " is unsatisfiable");
          return Tv3::N;
        }
      }
      return tv3_not(eval3_rec(inner, I, env, memo, gap));
    }
    default:
      throw std::logic_error("eval3_fol: non-canonical node");
  }
}

}  // namespace

std::string to_string(Semantics s) {
  return s == Semantics::Classical ? "classical" : "presup";
}

std::set<std::string> sat_set(const Formula& f, const std::string& x,
                              const Interpretation& I) {
  validate_model_for(f, I);
  Env env = I.env;
  require_closed_under(f, env, x);
  return sat_set_env(f, x, I, env);
}

bool eval_classical_fol(const Formula& f, const Interpretation& I) {
  validate_model_for(f, I);
  Env env = I.env;
  require_closed_under(f, env);
  return classical_rec(f, I, env);
}

Tv3 eval3_fol(const Formula& f, const Interpretation& I,
              std::string* gap_reason) {
  validate_model_for(f, I);
  Env env = I.env;
  require_closed_under(f, env);
  const Formula canon = canonicalize(f);
  UnsatMemo memo;
  std::string gap;
  const Tv3 value = eval3_rec(canon, I, env, memo, &gap);
  if (gap_reason != nullptr) {
    *gap_reason = value == Tv3::N ? gap : std::string();
  }
  return value;
}

// --- model enumeration ----------------------------------------------------

namespace {

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// Sum of size^arity over the signature: the total extension bit count.
// Throws when 2^bits models would exceed the cap.
std::uint64_t checked_bits(
    const std::vector<std::pair<std::string, std::size_t>>& preds,
    std::size_t size, std::uint64_t cap) {
  std::uint64_t bits = 0;
  for (const auto& [name, arity] : preds) {
    std::uint64_t t = 1;
    for (std::size_t i = 0; i < arity; ++i) {
      t *= size;
      if (t >= 63) break;
    }
    bits += t;
    if (t >= 63 || bits >= 63) {
      throw CapError("model space exceeds the cap at domain size " +
                     std::to_string(size));
    }
  }
  if (cap != 0 && (std::uint64_t{1} << bits) > cap) {
    throw CapError(std::to_string(std::uint64_t{1} << bits) +
                   " models at domain size " + std::to_string(size) +
                   " exceeds the cap of " + std::to_string(cap));
  }
  return bits;
}

std::vector<std::vector<std::string>> all_tuples(std::size_t size,
                                                 std::size_t arity) {
  const std::uint64_t count = ipow(size, arity);
  std::vector<std::vector<std::string>> out;
  out.reserve(count);
  for (std::uint64_t t = 0; t < count; ++t) {
    std::vector<std::string> tuple(arity);
    std::uint64_t rem = t;
    for (std::size_t p = arity; p-- > 0;) {
      tuple[p] = ModelEnumerator::element_name(rem % size);
      rem /= size;
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

Interpretation model_at(
    const std::vector<std::pair<std::string, std::size_t>>& preds,
    std::size_t size, std::uint64_t index) {
  Interpretation I;
  I.domain.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    I.domain.push_back(ModelEnumerator::element_name(i));
  }
  std::vector<std::uint64_t> digit(preds.size());
  std::uint64_t rem = index;
  for (std::size_t i = preds.size(); i-- > 0;) {
    const std::uint64_t radix = std::uint64_t{1}
                                << ipow(size, preds[i].second);
    digit[i] = rem % radix;
    rem /= radix;
  }
  for (std::size_t i = 0; i < preds.size(); ++i) {
    auto tuples = all_tuples(size, preds[i].second);
    std::set<std::vector<std::string>> ext;
    for (std::size_t j = 0; j < tuples.size(); ++j) {
      if ((digit[i] >> j) & 1u) ext.insert(std::move(tuples[j]));
    }
    I.predicates[preds[i].first] = std::move(ext);
  }
  return I;
}

}  // namespace

std::string ModelEnumerator::element_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "e" + std::to_string(i + 1);
}

ModelEnumerator::ModelEnumerator(Signature signature, std::size_t size,
                                 std::uint64_t cap)
    : size_(size) {
  if (size == 0) throw EvalError("domain size must be at least 1");
  preds_.assign(signature.begin(), signature.end());
  total_ = std::uint64_t{1} << checked_bits(preds_, size, cap);
}

std::optional<Interpretation> ModelEnumerator::next() {
  if (at_ == total_) return std::nullopt;
  return model_at(preds_, size_, at_++);
}

// --- validity ---------------------------------------------------------------

namespace {

bool has_numerals(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
      return false;
    case Kind::Pred:
      return std::any_of(f.args().begin(), f.args().end(),
                         [](const Term& t) { return t.is_numeral(); });
    case Kind::Not:
      return has_numerals(f.child());
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff:
      return has_numerals(f.lhs()) || has_numerals(f.rhs());
    case Kind::Exists:
    case Kind::ForAll:
      return has_numerals(f.body());
  }
  return false;
}

struct Outcome {
  bool premises_all_true = false;
  Tv3 conclusion = Tv3::N;
  std::string gap_reason;
};

Outcome judge(const std::vector<Formula>& premises, const Formula& conclusion,
              const Interpretation& I, Semantics semantics) {
  Outcome out;
  for (const Formula& p : premises) {
    const Tv3 v = semantics == Semantics::Classical
                      ? tv3_of_bool(eval_classical_fol(p, I))
                      : eval3_fol(p, I);
    if (v != Tv3::T) return out;
  }
  out.premises_all_true = true;
  if (semantics == Semantics::Classical) {
    out.conclusion = tv3_of_bool(eval_classical_fol(conclusion, I));
  } else {
    out.conclusion = eval3_fol(conclusion, I, &out.gap_reason);
  }
  return out;
}

std::string counterexample_text(const Outcome& o) {
  std::string text = "premises are all true but the conclusion is ";
  text += to_string(o.conclusion);
  if (!o.gap_reason.empty()) text += " (" + o.gap_reason + ")";
  return text;
}

Verdict valid_verdict(int max_domain) {
  return {Tv3::T, std::nullopt,
          "no countermodel with domain size 1.." + std::to_string(max_domain)};
}

// Exhaustive path: walk every model of every size in enumeration order.
Verdict check_validity_direct(const std::vector<Formula>& premises,
                              const Formula& conclusion, const Signature& sig,
                              int max_domain, Semantics semantics,
                              std::uint64_t cap) {
  for (int size = 1; size <= max_domain; ++size) {
    ModelEnumerator en(sig, static_cast<std::size_t>(size), cap);
    while (auto model = en.next()) {
      const Outcome o = judge(premises, conclusion, *model, semantics);
      if (o.premises_all_true && o.conclusion != Tv3::T) {
        return {Tv3::F, std::move(model), counterexample_text(o)};
      }
    }
  }
  return valid_verdict(max_domain);
}

// Quotient path for all-unary, numeral-free sequents. A sentence over unary
// predicates cannot count elements or tell them apart by name, so its value
// depends only on which of the 2^m predicate-membership types are inhabited.
// Verdicts are computed once per type profile on a small realizer model, and
// the model scan then only has to read off profiles until it hits the first
// countermodel in enumeration order.
Verdict check_validity_profiles(const std::vector<Formula>& premises,
                                const Formula& conclusion,
                                const Signature& sig, int max_domain,
                                Semantics semantics, std::uint64_t cap) {
  std::vector<std::string> preds;
  preds.reserve(sig.size());
  for (const auto& [name, arity] : sig) preds.push_back(name);
  const std::size_t m = preds.size();
  const std::size_t type_count = std::size_t{1} << m;
  const std::size_t profile_count = std::size_t{1} << type_count;

  // One verdict per nonempty set of inhabited types.
  std::vector<char> is_countermodel(profile_count, 0);
  bool reachable_countermodel = false;
  for (std::size_t profile = 1; profile < profile_count; ++profile) {
    Interpretation realizer;
    for (std::size_t type = 0; type < type_count; ++type) {
      if (!((profile >> type) & 1u)) continue;
      const std::string name =
          ModelEnumerator::element_name(realizer.domain.size());
      realizer.domain.push_back(name);
      for (std::size_t j = 0; j < m; ++j) {
        if ((type >> j) & 1u) realizer.predicates[preds[j]].insert({name});
      }
    }
    for (const std::string& p : preds) realizer.predicates[p];  // ensure present
    const Outcome o = judge(premises, conclusion, realizer, semantics);
    if (o.premises_all_true && o.conclusion != Tv3::T) {
      is_countermodel[profile] = 1;
      if (std::popcount(profile) <= max_domain) reachable_countermodel = true;
    }
  }
  if (!reachable_countermodel) return valid_verdict(max_domain);

  // Scan sizes in order for the first model whose profile is a countermodel.
  std::vector<std::pair<std::string, std::size_t>> sorted_preds;
  for (const std::string& p : preds) sorted_preds.emplace_back(p, 1);
  for (int size = 1; size <= max_domain; ++size) {
    const std::uint64_t bits = checked_bits(sorted_preds, size, cap);
    const std::uint64_t total = std::uint64_t{1} << bits;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::size_t profile = 0;
      std::uint64_t rem = idx;
      // Last predicate occupies the least significant digit.
      std::uint64_t masks[6];
      for (std::size_t i = m; i-- > 0;) {
        masks[i] = rem & ((std::uint64_t{1} << size) - 1);
        rem >>= size;
      }
      for (int e = 0; e < size; ++e) {
        std::size_t type = 0;
        for (std::size_t j = 0; j < m; ++j) {
          type |= ((masks[j] >> e) & 1u) << j;
        }
        profile |= std::size_t{1} << type;
      }
      if (is_countermodel[profile]) {
        Interpretation model = model_at(sorted_preds, size, idx);
        const Outcome o = judge(premises, conclusion, model, semantics);
        return {Tv3::F, std::move(model), counterexample_text(o)};
      }
    }
  }
  throw std::logic_error("profile scan found no countermodel");
}

}  // namespace

Verdict check_validity(const std::vector<Formula>& premises,
                       const Formula& conclusion, const Signature& signature,
                       int max_domain, Semantics semantics,
                       std::uint64_t model_cap) {
  if (max_domain < 1) throw EvalError("max_domain must be at least 1");
  auto check_formula = [&signature](const Formula& f) {
    if (!free_variables(f).empty()) {
      throw EvalError("validity requires closed formulas: " + render(f));
    }
    for (const auto& [name, arity] : predicate_arities(f)) {
      auto it = signature.find(name);
      if (it == signature.end() || it->second != arity) {
        throw EvalError("'" + name + "' does not match the given signature");
      }
    }
  };
  for (const Formula& p : premises) check_formula(p);
  check_formula(conclusion);

  std::vector<std::pair<std::string, std::size_t>> preds(signature.begin(),
                                                         signature.end());
  for (int size = 1; size <= max_domain; ++size) {
    checked_bits(preds, static_cast<std::size_t>(size), model_cap);
  }

  const bool all_unary =
      !signature.empty() &&
      std::all_of(signature.begin(), signature.end(),
                  [](const auto& p) { return p.second == 1; });
  bool numeral_free = !has_numerals(conclusion);
  for (const Formula& p : premises) numeral_free = numeral_free && !has_numerals(p);

  if (all_unary && signature.size() <= 6 && numeral_free) {
    return check_validity_profiles(premises, conclusion, signature, max_domain,
                                   semantics, model_cap);
  }
  return check_validity_direct(premises, conclusion, signature, max_domain,
                               semantics, model_cap);
}

}  // namespace gaplogic
