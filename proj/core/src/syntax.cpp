#include "gaplogic/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace gaplogic {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t hash_string(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t hash_nat(const Nat& v) {
  const std::size_t limbs = mpz_size(v.get_mpz_t());
  std::uint64_t h = mix(0x243f6a8885a308d3ull, limbs);
  for (std::size_t i = 0; i < limbs; ++i) {
    h = mix(h, static_cast<std::uint64_t>(mpz_getlimbn(v.get_mpz_t(), i)));
  }
  return h;
}

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c));
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c));
}

void check_name(const std::string& name, const char* what) {
  if (name.empty() || !is_ident_start(name[0]) ||
      !std::all_of(name.begin(), name.end(), is_ident_char) ||
      name == "forall" || name == "exists") {
    throw EvalError(std::string("invalid ") + what + " name '" + name + "'");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Terms

Term Term::var(std::string name) {
  check_name(name, "variable");
  return Term(Kind::Var, std::move(name), Nat(0));
}

Term Term::numeral(Nat value) {
  if (sgn(value) < 0) throw EvalError("numerals must be non-negative");
  return Term(Kind::Numeral, std::string(), std::move(value));
}

const std::string& Term::name() const {
  if (kind_ != Kind::Var) throw std::logic_error("Term::name on a numeral");
  return name_;
}

const Nat& Term::value() const {
  if (kind_ != Kind::Numeral) {
    throw std::logic_error("Term::value on a variable");
  }
  return value_;
}

bool Term::operator==(const Term& other) const {
  if (kind_ != other.kind_) return false;
  return kind_ == Kind::Var ? name_ == other.name_ : value_ == other.value_;
}

std::uint64_t Term::hash() const {
  return kind_ == Kind::Var ? mix(1, hash_string(name_))
                            : mix(2, hash_nat(value_));
}

// ---------------------------------------------------------------------------
// Formula nodes

struct FormulaNode {
  Formula::Kind kind;
  std::string name;  // atom/pred name, or the bound variable of a quantifier
  std::vector<Term> args;
  std::shared_ptr<const FormulaNode> a;  // Not child, quantifier body, or lhs
  std::shared_ptr<const FormulaNode> b;  // rhs of a binary connective
  std::uint64_t hash = 0;
};

namespace {

using Kind = Formula::Kind;

std::shared_ptr<const FormulaNode> make_node(FormulaNode n) {
  std::uint64_t h =
      mix(0x452821e638d01377ull, static_cast<std::uint64_t>(n.kind));
  h = mix(h, hash_string(n.name));
  for (const Term& t : n.args) h = mix(h, t.hash());
  if (n.a) h = mix(h, n.a->hash);
  if (n.b) h = mix(h, n.b->hash);
  n.hash = h;
  return std::make_shared<const FormulaNode>(std::move(n));
}

bool node_equal(const FormulaNode& x, const FormulaNode& y) {
  if (&x == &y) return true;
  if (x.hash != y.hash || x.kind != y.kind || x.name != y.name) return false;
  if (x.args != y.args) return false;
  if (static_cast<bool>(x.a) != static_cast<bool>(y.a) ||
      static_cast<bool>(x.b) != static_cast<bool>(y.b)) {
    return false;
  }
  if (x.a && !node_equal(*x.a, *y.a)) return false;
  if (x.b && !node_equal(*x.b, *y.b)) return false;
  return true;
}

}  // namespace

Formula Formula::atom(std::string name) {
  check_name(name, "atom");
  return Formula(make_node({Kind::Atom, std::move(name), {}, nullptr, nullptr}));
}

Formula Formula::pred(std::string name, std::vector<Term> args) {
  if (args.empty()) return atom(std::move(name));
  check_name(name, "predicate");
  return Formula(make_node(
      {Kind::Pred, std::move(name), std::move(args), nullptr, nullptr}));
}

Formula Formula::negation(Formula f) {
  return Formula(make_node({Kind::Not, {}, {}, std::move(f.node_), nullptr}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(make_node(
      {Kind::And, {}, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(make_node(
      {Kind::Or, {}, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(make_node(
      {Kind::Implies, {}, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::biconditional(Formula lhs, Formula rhs) {
  return Formula(make_node(
      {Kind::Iff, {}, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::exists(std::string var, Formula body) {
  check_name(var, "variable");
  return Formula(make_node(
      {Kind::Exists, std::move(var), {}, std::move(body.node_), nullptr}));
}

Formula Formula::for_all(std::string var, Formula body) {
  check_name(var, "variable");
  return Formula(make_node(
      {Kind::ForAll, std::move(var), {}, std::move(body.node_), nullptr}));
}

Formula::Kind Formula::kind() const { return node().kind; }

const std::string& Formula::name() const {
  const FormulaNode& n = node();
  if (n.kind != Kind::Atom && n.kind != Kind::Pred) {
    throw std::logic_error("Formula::name on a non-atomic node");
  }
  return n.name;
}

const std::vector<Term>& Formula::args() const {
  const FormulaNode& n = node();
  if (n.kind != Kind::Atom && n.kind != Kind::Pred) {
    throw std::logic_error("Formula::args on a non-atomic node");
  }
  return n.args;
}

Formula Formula::child() const {
  const FormulaNode& n = node();
  if (n.kind != Kind::Not) {
    throw std::logic_error("Formula::child on a non-negation");
  }
  return Formula(n.a);
}

Formula Formula::lhs() const {
  const FormulaNode& n = node();
  switch (n.kind) {
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff:
      return Formula(n.a);
    default:
      throw std::logic_error("Formula::lhs on a non-binary node");
  }
}

Formula Formula::rhs() const {
  const FormulaNode& n = node();
  switch (n.kind) {
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff:
      return Formula(n.b);
    default:
      throw std::logic_error("Formula::rhs on a non-binary node");
  }
}

const std::string& Formula::bound_var() const {
  const FormulaNode& n = node();
  if (n.kind != Kind::Exists && n.kind != Kind::ForAll) {
    throw std::logic_error("Formula::bound_var on a non-quantifier");
  }
  return n.name;
}

Formula Formula::body() const {
  const FormulaNode& n = node();
  if (n.kind != Kind::Exists && n.kind != Kind::ForAll) {
    throw std::logic_error("Formula::body on a non-quantifier");
  }
  return Formula(n.a);
}

bool Formula::operator==(const Formula& other) const {
  return node_equal(node(), other.node());
}

std::uint64_t Formula::hash() const { return node().hash; }

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
  Ident,
  Number,
  Forall,
  Exists,
  Tilde,
  Amp,
  Pipe,
  Arrow,
  DoubleArrow,
  LParen,
  RParen,
  Comma,
  Dot,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_ident_start(c)) {
      while (i < text.size() && is_ident_char(text[i])) ++i;
      std::string word(text.substr(start, i - start));
      Tok k = word == "forall" ? Tok::Forall
              : word == "exists" ? Tok::Exists
                                 : Tok::Ident;
      out.push_back({k, std::move(word), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      out.push_back({Tok::Number, std::string(text.substr(start, i - start)),
                     start});
      continue;
    }
    switch (c) {
      case '~': out.push_back({Tok::Tilde, "~", start}); ++i; break;
      case '&': out.push_back({Tok::Amp, "&", start}); ++i; break;
      case '|': out.push_back({Tok::Pipe, "|", start}); ++i; break;
      case '(': out.push_back({Tok::LParen, "(", start}); ++i; break;
      case ')': out.push_back({Tok::RParen, ")", start}); ++i; break;
      case ',': out.push_back({Tok::Comma, ",", start}); ++i; break;
      case '.': out.push_back({Tok::Dot, ".", start}); ++i; break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back({Tok::Arrow, "->", start});
          i += 2;
        } else {
          throw ParseError("expected '->' after '-'", start);
        }
        break;
      case '<':
        if (i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
          out.push_back({Tok::DoubleArrow, "<->", start});
          i += 3;
        } else {
          throw ParseError("expected '<->' after '<'", start);
        }
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         start);
    }
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

// ---------------------------------------------------------------------------
// Parser (recursive descent, one token of lookahead)

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Formula run() {
    Formula f = parse_iff();
    if (peek().kind != Tok::End) {
      throw ParseError("trailing input after formula", peek().pos);
    }
    return f;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  Token take() { return toks_[at_++]; }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++at_;
    return true;
  }

  void expect(Tok k, const char* what) {
    if (!accept(k)) {
      throw ParseError(std::string("expected ") + what, peek().pos);
    }
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (accept(Tok::DoubleArrow)) {
      f = Formula::biconditional(std::move(f), parse_imp());
    }
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (accept(Tok::Arrow)) {
      return Formula::implication(std::move(f), parse_imp());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept(Tok::Pipe)) {
      f = Formula::disjunction(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept(Tok::Amp)) {
      f = Formula::conjunction(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Tilde:
        take();
        return Formula::negation(parse_unary());
      case Tok::LParen: {
        take();
        Formula f = parse_iff();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Forall:
      case Tok::Exists: {
        const bool universal = take().kind == Tok::Forall;
        const Token& v = peek();
        expect(Tok::Ident, "a variable after the quantifier");
        expect(Tok::Dot, "'.' after the quantified variable");
        Formula body = parse_unary();
        return universal ? Formula::for_all(v.text, std::move(body))
                         : Formula::exists(v.text, std::move(body));
      }
      case Tok::Ident:
        return parse_atom();
      default:
        throw ParseError("expected a formula", t.pos);
    }
  }

  Formula parse_atom() {
    Token name = take();
    std::size_t arity = 0;
    std::vector<Term> args;
    if (accept(Tok::LParen)) {
      args.push_back(parse_term());
      while (accept(Tok::Comma)) args.push_back(parse_term());
      expect(Tok::RParen, "')' after argument list");
      arity = args.size();
    }
    note_arity(name.text, arity, name.pos);
    return Formula::pred(std::move(name.text), std::move(args));
  }

  Term parse_term() {
    const Token& t = peek();
    if (t.kind == Tok::Ident) return Term::var(take().text);
    if (t.kind == Tok::Number) return Term::numeral(Nat(take().text));
    throw ParseError("expected a term", t.pos);
  }

  void note_arity(const std::string& name, std::size_t arity,
                  std::size_t pos) {
    auto [it, inserted] = arity_.emplace(name, arity);
    if (!inserted && it->second != arity) {
      throw ParseError("'" + name + "' is used with " +
                           std::to_string(it->second) + " and " +
                           std::to_string(arity) + " arguments",
                       pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  std::map<std::string, std::size_t> arity_;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Printing

namespace {

const char* connective_symbol(Kind k) {
  switch (k) {
    case Kind::And: return " & ";
    case Kind::Or: return " | ";
    case Kind::Implies: return " -> ";
    default: return " <-> ";
  }
}

void render_rec(const Formula& f, bool full, std::string& out) {
  switch (f.kind()) {
    case Kind::Atom:
      out += f.name();
      return;
    case Kind::Pred: {
      out += f.name();
      out += '(';
      bool first = true;
      for (const Term& t : f.args()) {
        if (!first) out += ',';
        first = false;
        out += render(t);
      }
      out += ')';
      return;
    }
    case Kind::Not: {
      if (full) out += '(';
      out += '~';
      const Formula c = f.child();
      // A quantifier directly under '~' binds the rest of the line, so the
      // default style needs parentheses to keep the original tree.
      const bool wrap =
          !full && (c.is(Kind::Exists) || c.is(Kind::ForAll));
      if (wrap) out += '(';
      render_rec(c, full, out);
      if (wrap) out += ')';
      if (full) out += ')';
      return;
    }
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff:
      out += '(';
      render_rec(f.lhs(), full, out);
      out += connective_symbol(f.kind());
      render_rec(f.rhs(), full, out);
      out += ')';
      return;
    case Kind::Exists:
    case Kind::ForAll:
      if (full) out += '(';
      out += f.is(Kind::Exists) ? "exists " : "forall ";
      out += f.bound_var();
      out += ". ";
      render_rec(f.body(), full, out);
      if (full) out += ')';
      return;
  }
}

}  // namespace

std::string render(const Formula& f, const RenderOptions& opts) {
  std::string out;
  render_rec(f, opts.full_parens, out);
  return out;
}

std::string render(const Term& t) {
  return t.is_var() ? t.name() : t.value().get_str();
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

// Negation that never stacks: ~~A collapses to A on the way in.
Formula negate_collapsing(Formula f) {
  if (f.is(Kind::Not)) return f.child();
  return Formula::negation(std::move(f));
}

}  // namespace

Formula canonicalize(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Pred:
      return f;
    case Kind::Not:
      return negate_collapsing(canonicalize(f.child()));
    case Kind::And:
      return Formula::conjunction(canonicalize(f.lhs()), canonicalize(f.rhs()));
    case Kind::Or:
      return negate_collapsing(
          Formula::conjunction(negate_collapsing(canonicalize(f.lhs())),
                               negate_collapsing(canonicalize(f.rhs()))));
    case Kind::Implies:
      return negate_collapsing(Formula::conjunction(
          canonicalize(f.lhs()), negate_collapsing(canonicalize(f.rhs()))));
    case Kind::Iff: {
      const Formula a = canonicalize(f.lhs());
      const Formula b = canonicalize(f.rhs());
      return Formula::conjunction(
          negate_collapsing(Formula::conjunction(a, negate_collapsing(b))),
          negate_collapsing(Formula::conjunction(b, negate_collapsing(a))));
    }
    case Kind::Exists:
      return Formula::exists(f.bound_var(), canonicalize(f.body()));
    case Kind::ForAll:
      return negate_collapsing(Formula::exists(
          f.bound_var(), negate_collapsing(canonicalize(f.body()))));
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Variables and substitution

namespace {

void free_vars_rec(const Formula& f, std::vector<std::string>& bound,
                   std::set<std::string>& out) {
  switch (f.kind()) {
    case Kind::Atom:
      return;
    case Kind::Pred:
      for (const Term& t : f.args()) {
        if (t.is_var() &&
            std::find(bound.begin(), bound.end(), t.name()) == bound.end()) {
          out.insert(t.name());
        }
      }
      return;
    case Kind::Not:
      free_vars_rec(f.child(), bound, out);
      return;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff:
      free_vars_rec(f.lhs(), bound, out);
      free_vars_rec(f.rhs(), bound, out);
      return;
    case Kind::Exists:
    case Kind::ForAll:
      bound.push_back(f.bound_var());
      free_vars_rec(f.body(), bound, out);
      bound.pop_back();
      return;
  }
}

Formula subst_rec(const Formula& f, const std::string& var, const Term& t) {
  switch (f.kind()) {
    case Kind::Atom:
      return f;
    case Kind::Pred: {
      std::vector<Term> args = f.args();
      bool changed = false;
      for (Term& a : args) {
        if (a.is_var() && a.name() == var) {
          a = t;
          changed = true;
        }
      }
      return changed ? Formula::pred(f.name(), std::move(args)) : f;
    }
    case Kind::Not:
      return Formula::negation(subst_rec(f.child(), var, t));
    case Kind::And:
      return Formula::conjunction(subst_rec(f.lhs(), var, t),
                                  subst_rec(f.rhs(), var, t));
    case Kind::Or:
      return Formula::disjunction(subst_rec(f.lhs(), var, t),
                                  subst_rec(f.rhs(), var, t));
    case Kind::Implies:
      return Formula::implication(subst_rec(f.lhs(), var, t),
                                  subst_rec(f.rhs(), var, t));
    case Kind::Iff:
      return Formula::biconditional(subst_rec(f.lhs(), var, t),
                                    subst_rec(f.rhs(), var, t));
    case Kind::Exists:
    case Kind::ForAll: {
      if (f.bound_var() == var) return f;  // shadowed
      Formula body = subst_rec(f.body(), var, t);
      return f.is(Kind::Exists) ? Formula::exists(f.bound_var(), std::move(body))
                                : Formula::for_all(f.bound_var(), std::move(body));
    }
  }
  throw std::logic_error("unreachable");
}

void arities_rec(const Formula& f, std::map<std::string, std::size_t>& out) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Pred: {
      const std::size_t arity = f.args().size();
      auto [it, inserted] = out.emplace(f.name(), arity);
      if (!inserted && it->second != arity) {
        throw EvalError("'" + f.name() + "' is used with " +
                        std::to_string(it->second) + " and " +
                        std::to_string(arity) + " arguments");
      }
      return;
    }
    case Kind::Not:
      arities_rec(f.child(), out);
      return;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff:
      arities_rec(f.lhs(), out);
      arities_rec(f.rhs(), out);
      return;
    case Kind::Exists:
    case Kind::ForAll:
      arities_rec(f.body(), out);
      return;
  }
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  free_vars_rec(f, bound, out);
  return out;
}

Formula substitute(const Formula& f, const std::string& var,
                   const Term& replacement) {
  if (!replacement.is_numeral()) {
    throw EvalError("substitute: replacement must be a numeral");
  }
  return subst_rec(f, var, replacement);
}

std::map<std::string, std::size_t> predicate_arities(const Formula& f) {
  std::map<std::string, std::size_t> out;
  arities_rec(f, out);
  return out;
}

bool is_propositional(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
      return true;
    case Kind::Pred:
      return false;
    case Kind::Not:
      return is_propositional(f.child());
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff:
      return is_propositional(f.lhs()) && is_propositional(f.rhs());
    case Kind::Exists:
    case Kind::ForAll:
      return false;
  }
  return false;
}

}  // namespace gaplogic
