#include "gaplogic/godel.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <utility>

namespace gaplogic {

namespace {

using Kind = Formula::Kind;

constexpr unsigned kBase = 17;

const std::unordered_map<std::string, unsigned>& index_map() {
  static const std::unordered_map<std::string, unsigned> map = [] {
    std::unordered_map<std::string, unsigned> m;
    const auto& alpha = GodelCodec::alphabet();
    for (unsigned i = 0; i < alpha.size(); ++i) m.emplace(alpha[i], i + 1);
    return m;
  }();
  return map;
}

}  // namespace

const std::vector<std::string>& GodelCodec::alphabet() {
  static const std::vector<std::string> tokens = {
      "~", "&", "(", ")", ",",   "exists", ".",  "x", "y",
      "z", "Prf", "Diag", ";", "#", "d0",     "d1", "->"};
  return tokens;
}

Nat GodelCodec::encode(const std::vector<std::string>& tokens) const {
  Nat n = 0;
  for (const std::string& tok : tokens) {
    auto it = index_map().find(tok);
    if (it == index_map().end()) {
      throw EvalError("token '" + tok + "' is outside the alphabet");
    }
    n = n * kBase + it->second;
  }
  return n;
}

std::vector<std::string> GodelCodec::decode(const Nat& n) const {
  if (n < 1) {
    throw EvalError("only positive naturals decode to token sequences");
  }
  std::vector<std::string> reversed;
  Nat rem = n;
  while (rem > 0) {
    const unsigned long i = Nat((rem - 1) % kBase).get_ui() + 1;
    reversed.push_back(alphabet()[i - 1]);
    rem = (rem - static_cast<unsigned long>(i)) / kBase;
  }
  return {reversed.rbegin(), reversed.rend()};
}

// --- token spelling --------------------------------------------------------

namespace {

void numeral_tokens(const Nat& value, std::vector<std::string>& out) {
  out.push_back("#");
  if (value == 0) {
    out.push_back("d0");
    return;
  }
  const std::size_t bits = mpz_sizeinbase(value.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    out.push_back(mpz_tstbit(value.get_mpz_t(), i) ? "d1" : "d0");
  }
}

void term_tokens(const Term& t, std::vector<std::string>& out) {
  if (t.is_numeral()) {
    numeral_tokens(t.value(), out);
    return;
  }
  if (t.name() != "x" && t.name() != "y" && t.name() != "z") {
    throw EvalError("variable '" + t.name() +
                    "' is outside the token alphabet");
  }
  out.push_back(t.name());
}

void tokens_rec(const Formula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case Kind::Atom:
      throw EvalError("atom '" + f.name() +
                      "' is not expressible in the token alphabet");
    case Kind::Pred: {
      if (f.name() != "Prf" && f.name() != "Diag") {
        throw EvalError("predicate '" + f.name() +
                        "' is outside the token alphabet");
      }
      if (f.args().empty()) {
        throw EvalError("a predicate needs at least one argument to spell");
      }
      out.push_back(f.name());
      out.push_back("(");
      for (std::size_t i = 0; i < f.args().size(); ++i) {
        if (i > 0) out.push_back(",");
        term_tokens(f.args()[i], out);
      }
      out.push_back(")");
      return;
    }
    case Kind::Not: {
      out.push_back("~");
      const Formula inner = f.child();
      if (inner.is(Kind::Exists) || inner.is(Kind::ForAll)) {
        out.push_back("(");
        tokens_rec(inner, out);
        out.push_back(")");
      } else {
        tokens_rec(inner, out);
      }
      return;
    }
    case Kind::And:
    case Kind::Implies:
      out.push_back("(");
      tokens_rec(f.lhs(), out);
      out.push_back(f.is(Kind::And) ? "&" : "->");
      tokens_rec(f.rhs(), out);
      out.push_back(")");
      return;
    case Kind::Or:
      throw EvalError("'|' is not in the token alphabet");
    case Kind::Iff:
      throw EvalError("'<->' is not in the token alphabet");
    case Kind::ForAll:
      throw EvalError("'forall' is not in the token alphabet");
    case Kind::Exists: {
      const std::string& v = f.bound_var();
      if (v != "x" && v != "y" && v != "z") {
        throw EvalError("variable '" + v + "' is outside the token alphabet");
      }
      out.push_back("exists");
      out.push_back(v);
      out.push_back(".");
      tokens_rec(f.body(), out);
      return;
    }
  }
  throw std::logic_error("unreachable");
}

// Rebuilds source text from tokens, reassembling "#"-prefixed binary digit
// runs into decimal numerals. Returns nullopt on a bare "#".
std::optional<std::string> tokens_to_text(
    const std::vector<std::string>& tokens) {
  std::string text;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (!text.empty()) text += ' ';
    if (tokens[i] == "#") {
      ++i;
      Nat value = 0;
      std::size_t digits = 0;
      while (i < tokens.size() && (tokens[i] == "d0" || tokens[i] == "d1")) {
        value = value * 2 + (tokens[i] == "d1" ? 1 : 0);
        ++digits;
        ++i;
      }
      if (digits == 0) return std::nullopt;
      text += value.get_str();
    } else {
      text += tokens[i];
      ++i;
    }
  }
  return text;
}

}  // namespace

std::vector<std::string> formula_tokens(const Formula& f) {
  std::vector<std::string> out;
  tokens_rec(f, out);
  return out;
}

std::optional<Formula> parse_token_formula(
    const std::vector<std::string>& tokens) {
  if (tokens.empty()) return std::nullopt;
  for (const std::string& tok : tokens) {
    if (index_map().find(tok) == index_map().end()) return std::nullopt;
  }
  const auto text = tokens_to_text(tokens);
  if (!text) return std::nullopt;
  Formula parsed = Formula::atom("never");
  try {
    parsed = parse_formula(*text);
  } catch (const ParseError&) {
    return std::nullopt;
  }
  // Accept only the canonical spelling, so that code <-> formula stays
  // one-to-one on the expressible fragment.
  try {
    if (formula_tokens(parsed) != tokens) return std::nullopt;
  } catch (const EvalError&) {
    return std::nullopt;
  }
  return parsed;
}

Nat goedel_number(const Formula& f) {
  return GodelCodec().encode(formula_tokens(f));
}

std::optional<Nat> diag(const Nat& y) {
  if (y < 1) return std::nullopt;
  const auto formula = parse_token_formula(GodelCodec().decode(y));
  if (!formula) return std::nullopt;
  const auto free = free_variables(*formula);
  if (free.size() != 1) return std::nullopt;
  return goedel_number(substitute(*formula, *free.begin(), Term::numeral(y)));
}

// --- deductive closure -------------------------------------------------------

bool Closure::contains(const Formula& f) const { return find(f) != nullptr; }

const ProvableEntry* Closure::find(const Formula& f) const {
  for (const ProvableEntry& e : entries) {
    if (e.sentence == f) return &e;
  }
  return nullptr;
}

Closure compute_closure(const ToySystem& sys) {
  for (const Formula& ax : sys.axioms) {
    if (!free_variables(ax).empty()) {
      throw EvalError("axioms must be closed: " + render(ax));
    }
  }

  std::vector<Formula> members;
  std::unordered_map<Formula, std::vector<Formula>, FormulaHash> proofs;
  for (const Formula& ax : sys.axioms) {
    if (proofs.find(ax) == proofs.end()) {
      members.push_back(ax);
      proofs.emplace(ax, std::vector<Formula>{ax});
    }
  }

  auto joined = [](const std::vector<Formula>& lines) {
    std::string s;
    for (const Formula& l : lines) {
      s += render(l);
      s += ';';
    }
    return s;
  };
  auto better = [&joined](const std::vector<Formula>& cand,
                          const std::vector<Formula>& old) {
    if (cand.size() != old.size()) return cand.size() < old.size();
    return joined(cand) < joined(old);
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Formula imp = members[i];
      if (!imp.is(Kind::Implies)) continue;
      const auto antecedent = proofs.find(imp.lhs());
      if (antecedent == proofs.end()) continue;
      const Formula b = imp.rhs();

      // Merge the two proofs, dropping duplicate lines and stopping at the
      // first line equal to b; justifiers only ever move earlier, so the
      // result is still a proof.
      std::vector<Formula> cand;
      bool done = false;
      auto feed = [&cand, &done, &b](const Formula& line) {
        if (std::find(cand.begin(), cand.end(), line) == cand.end()) {
          cand.push_back(line);
        }
        if (line == b) done = true;
      };
      for (const Formula& l : antecedent->second) {
        feed(l);
        if (done) break;
      }
      if (!done) {
        for (const Formula& l : proofs.at(imp)) {
          feed(l);
          if (done) break;
        }
      }
      if (!done) cand.push_back(b);

      auto existing = proofs.find(b);
      if (existing == proofs.end()) {
        members.push_back(b);
        proofs.emplace(b, std::move(cand));
        changed = true;
      } else if (better(cand, existing->second)) {
        existing->second = std::move(cand);
        changed = true;
      }
    }
  }

  Closure out;
  out.entries.reserve(members.size());
  for (const Formula& f : members) {
    ProvableEntry e{f, proofs.at(f), std::nullopt, std::nullopt};
    try {
      e.code = goedel_number(f);
      e.proof_code = encode_proof(e.proof);
    } catch (const EvalError&) {
      // Not expressible in the token alphabet; no numeric identity.
    }
    out.entries.push_back(std::move(e));
  }
  return out;
}

Nat encode_proof(const std::vector<Formula>& lines) {
  if (lines.empty()) throw EvalError("a proof needs at least one line");
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) tokens.push_back(";");
    const auto t = formula_tokens(lines[i]);
    tokens.insert(tokens.end(), t.begin(), t.end());
  }
  return GodelCodec().encode(tokens);
}

bool check_proof(const Nat& x, const Nat& z, const ToySystem& sys) {
  if (x < 1) return false;
  const std::vector<std::string> tokens = GodelCodec().decode(x);
  std::vector<std::vector<std::string>> segments(1);
  for (const std::string& tok : tokens) {
    if (tok == ";") {
      segments.emplace_back();
    } else {
      segments.back().push_back(tok);
    }
  }
  std::vector<Formula> lines;
  lines.reserve(segments.size());
  for (const auto& seg : segments) {
    const auto f = parse_token_formula(seg);
    if (!f || !free_variables(*f).empty()) return false;
    lines.push_back(*f);
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const bool is_axiom = std::find(sys.axioms.begin(), sys.axioms.end(),
                                    lines[i]) != sys.axioms.end();
    if (is_axiom) continue;
    bool by_mp = false;
    for (std::size_t j = 0; j < i && !by_mp; ++j) {
      if (!lines[j].is(Kind::Implies) || !(lines[j].rhs() == lines[i])) {
        continue;
      }
      for (std::size_t l = 0; l < i; ++l) {
        if (lines[l] == lines[j].lhs()) {
          by_mp = true;
          break;
        }
      }
    }
    if (!by_mp) return false;
  }
  return goedel_number(lines.back()) == z;
}

namespace {

std::optional<Nat> witness_in(const Nat& z, const Closure& closure) {
  if (z < 1) return std::nullopt;
  const auto f = parse_token_formula(GodelCodec().decode(z));
  if (!f) return std::nullopt;
  const ProvableEntry* e = closure.find(*f);
  return e == nullptr ? std::nullopt : e->proof_code;
}

InstanceReport make_instance_report(const Nat& n, const Closure& closure,
                                    const Nat& sentence_code) {
  InstanceReport r;
  r.n = n;
  r.prf_term_empty = !witness_in(n, closure).has_value();
  r.diag_term_empty = n != sentence_code;
  r.verdict = r.prf_term_empty || r.diag_term_empty ? Tv3::N : Tv3::F;
  if (r.prf_term_empty) {
    r.direction = "(x)(Prf(x,n) -> ~Diag(k,n)) is vacuous";
  } else if (r.diag_term_empty) {
    r.direction = "(x)(Diag(k,n) -> ~Prf(x,n)) is vacuous";
  }
  return r;
}

}  // namespace

std::optional<Nat> prf_witness(const Nat& z, const ToySystem& sys) {
  return witness_in(z, compute_closure(sys));
}

FixedPoint build_fixed_point() {
  const Formula prf = Formula::pred("Prf", {Term::var("x"), Term::var("z")});
  const Formula dia = Formula::pred("Diag", {Term::var("y"), Term::var("z")});
  const Formula u = Formula::negation(Formula::exists(
      "x", Formula::exists("z", Formula::conjunction(prf, dia))));
  if (free_variables(u) != std::set<std::string>{"y"}) {
    throw SelfCheckError("the template must have exactly y free");
  }
  const Nat k = goedel_number(u);
  const Formula g = substitute(u, "y", Term::numeral(k));
  if (!free_variables(g).empty()) {
    throw SelfCheckError("the diagonal sentence is not closed");
  }
  const Nat g_code = goedel_number(g);
  const auto diagonal = diag(k);
  if (!diagonal || *diagonal != g_code) {
    throw SelfCheckError(
        "diagonalizing the template code does not yield the sentence code");
  }
  const Formula h = Formula::negation(Formula::exists(
      "x", Formula::pred("Prf", {Term::var("x"), Term::numeral(g_code)})));
  return FixedPoint{u, k, g, g_code, h, Formula::biconditional(g, h)};
}

InstanceReport eval_instance_K(const Nat& n, const ToySystem& sys) {
  return make_instance_report(n, compute_closure(sys),
                              build_fixed_point().sentence_code);
}

std::vector<Nat> default_sample(const ToySystem& sys, unsigned bound) {
  std::set<Nat> sample;
  for (unsigned i = 1; i <= bound; ++i) sample.insert(Nat(i));
  for (const ProvableEntry& e : compute_closure(sys).entries) {
    if (e.code) sample.insert(*e.code);
  }
  sample.insert(build_fixed_point().sentence_code);
  return {sample.begin(), sample.end()};
}

UnrollReport eval_G_unrolled(const ToySystem& sys, std::vector<Nat> sample) {
  const FixedPoint fp = build_fixed_point();
  const Closure closure = compute_closure(sys);
  UnrollReport out;
  out.sentence_provable = witness_in(fp.sentence_code, closure).has_value();
  out.overall = out.sentence_provable ? Tv3::F : Tv3::N;
  out.as_written_classical = tv3_of_bool(!out.sentence_provable);
  if (sample.empty()) {
    for (unsigned i = 1; i <= 64; ++i) sample.push_back(Nat(i));
    for (const ProvableEntry& e : closure.entries) {
      if (e.code) sample.push_back(*e.code);
    }
    sample.push_back(fp.sentence_code);
  }
  std::sort(sample.begin(), sample.end());
  sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
  out.instances.reserve(sample.size());
  for (const Nat& n : sample) {
    out.instances.push_back(
        make_instance_report(n, closure, fp.sentence_code));
  }
  return out;
}

EquivalenceReport eval_J(const ToySystem& sys) {
  const FixedPoint fp = build_fixed_point();
  const bool provable =
      witness_in(fp.sentence_code, compute_closure(sys)).has_value();
  EquivalenceReport r;
  r.g_gap = provable ? Tv3::F : Tv3::N;
  r.h_gap = tv3_of_bool(!provable);
  r.j_gap = tv3_iff(r.g_gap, r.h_gap);
  r.g_classical = tv3_of_bool(!provable);
  r.h_classical = tv3_of_bool(!provable);
  r.j_classical = tv3_iff(r.g_classical, r.h_classical);
  if (r.j_gap == Tv3::T) {
    r.note = "the equivalence holds";
  } else if (r.j_gap == Tv3::N) {
    r.note = "the equivalence is not true: one side has no truth value";
  } else {
    r.note = "the equivalence is false";
  }
  return r;
}

}  // namespace gaplogic
