#include "gaplogic/syllogistic.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace gaplogic {

namespace {

void validate_form(const CategoricalForm& form) {
  if (form.letter != 'A' && form.letter != 'E' && form.letter != 'I' &&
      form.letter != 'O') {
    throw EvalError("categorical form letter must be A, E, I, or O");
  }
  if (form.subject.empty() || form.predicate.empty()) {
    throw EvalError("categorical terms must be named");
  }
  if (form.subject == form.predicate) {
    throw EvalError("categorical terms must be distinct");
  }
}

Formula applied(const std::string& pred) {
  return Formula::pred(pred, {Term::var("x")});
}

Formula some(const Formula& body) { return Formula::exists("x", body); }

Formula no(const Formula& body) {
  return Formula::negation(Formula::exists("x", body));
}

bool intersects(const std::set<std::string>& a,
                const std::set<std::string>& b) {
  for (const std::string& e : a) {
    if (b.count(e)) return true;
  }
  return false;
}

}  // namespace

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::Table1:
      return "table1";
    case Scheme::Table2:
      return "table2";
    default:
      return "presup";
  }
}

Scheme scheme_from_string(const std::string& name) {
  if (name == "table1") return Scheme::Table1;
  if (name == "table2") return Scheme::Table2;
  if (name == "presup") return Scheme::Presup;
  throw EvalError("unknown scheme '" + name +
                  "' (expected table1, table2, or presup)");
}

Formula translate(const CategoricalForm& form, Scheme scheme) {
  validate_form(form);
  const Formula f = applied(form.subject);
  const Formula g = applied(form.predicate);
  const Formula not_g = Formula::negation(g);

  const Formula core_a = no(Formula::conjunction(f, not_g));
  const Formula core_e = no(Formula::conjunction(f, g));
  const Formula core_i = some(Formula::conjunction(f, g));
  const Formula core_o = some(Formula::conjunction(f, not_g));

  if (scheme != Scheme::Table2) {
    switch (form.letter) {
      case 'A':
        return core_a;
      case 'E':
        return core_e;
      case 'I':
        return core_i;
      default:
        return core_o;
    }
  }
  switch (form.letter) {
    case 'A':
      return Formula::conjunction(Formula::conjunction(core_a, some(f)),
                                  some(not_g));
    case 'E':
      return Formula::conjunction(Formula::conjunction(core_e, some(f)),
                                  some(g));
    case 'I':
      return Formula::disjunction(
          Formula::disjunction(core_i, Formula::negation(some(f))),
          Formula::negation(some(g)));
    default:
      // The contradictory of the Table2 A reading.
      return Formula::disjunction(
          Formula::disjunction(core_o, Formula::negation(some(f))),
          Formula::negation(some(not_g)));
  }
}

Tv3 eval_categorical(const CategoricalForm& form, const Interpretation& I,
                     Scheme scheme) {
  validate_form(form);
  if (scheme != Scheme::Presup) {
    return tv3_of_bool(eval_classical_fol(translate(form, scheme), I));
  }
  const std::set<std::string> f = sat_set(applied(form.subject), "x", I);
  const std::set<std::string> g = sat_set(applied(form.predicate), "x", I);
  std::set<std::string> not_g;
  for (const std::string& e : I.domain) {
    if (!g.count(e)) not_g.insert(e);
  }
  switch (form.letter) {
    case 'A':
      if (f.empty() || not_g.empty()) return Tv3::N;
      return tv3_of_bool(!intersects(f, not_g));
    case 'E':
      if (f.empty() || g.empty()) return Tv3::N;
      return tv3_of_bool(!intersects(f, g));
    case 'I':
      if (f.empty() || g.empty()) return Tv3::N;
      return tv3_of_bool(intersects(f, g));
    default:
      if (f.empty() || not_g.empty()) return Tv3::N;
      return tv3_of_bool(intersects(f, not_g));
  }
}

// --- square of opposition ---------------------------------------------------

namespace {

// Accumulates one law over the model stream: a required "never happens"
// clause and an optional "happens somewhere" clause.
struct LawState {
  std::string law;
  bool needs_witness = false;
  std::string witness_missing_detail;
  bool witness_found = false;
  std::optional<Interpretation> violation;
  std::string violation_detail;

  void violated(const Interpretation& model, const std::string& detail) {
    if (!violation) {
      violation = model;
      violation_detail = detail;
    }
  }

  LawReport report() const {
    LawReport r;
    r.law = law;
    if (violation) {
      r.holds = false;
      r.countermodel = violation;
      r.detail = violation_detail;
    } else if (needs_witness && !witness_found) {
      r.holds = false;
      r.detail = witness_missing_detail;
    } else {
      r.holds = true;
    }
    return r;
  }
};

}  // namespace

std::vector<LawReport> audit_square(Scheme scheme, int max_domain,
                                    std::uint64_t model_cap) {
  if (max_domain < 1) throw EvalError("max_domain must be at least 1");
  const CategoricalForm a{'A', "F", "G"};
  const CategoricalForm e{'E', "F", "G"};
  const CategoricalForm i{'I', "F", "G"};
  const CategoricalForm o{'O', "F", "G"};
  const CategoricalForm e_conv{'E', "G", "F"};
  const CategoricalForm i_conv{'I', "G", "F"};

  LawState contraries{"contraries", true, "no model makes A and E both false"};
  LawState subcontraries{"subcontraries", true,
                         "no model makes I and O both true"};
  LawState contra_ao{"contradictories_a_o"};
  LawState contra_ei{"contradictories_e_i"};
  LawState subalt_ai{"subalternation_a_i"};
  LawState subalt_eo{"subalternation_e_o"};
  LawState conversions{"conversions"};

  const Signature sig{{"F", 1}, {"G", 1}};
  for (int size = 1; size <= max_domain; ++size) {
    ModelEnumerator en(sig, static_cast<std::size_t>(size), model_cap);
    while (auto model = en.next()) {
      const Tv3 va = eval_categorical(a, *model, scheme);
      const Tv3 ve = eval_categorical(e, *model, scheme);
      const Tv3 vi = eval_categorical(i, *model, scheme);
      const Tv3 vo = eval_categorical(o, *model, scheme);

      if (va == Tv3::T && ve == Tv3::T) {
        contraries.violated(*model, "A and E are both true");
      }
      if (va == Tv3::F && ve == Tv3::F) contraries.witness_found = true;

      if (vi == Tv3::F && vo == Tv3::F) {
        subcontraries.violated(*model, "I and O are both false");
      }
      if (vi == Tv3::T && vo == Tv3::T) subcontraries.witness_found = true;

      if (va == Tv3::T && vo == Tv3::T) {
        contra_ao.violated(*model, "A and O are both true");
      }
      if (va == Tv3::F && vo == Tv3::F) {
        contra_ao.violated(*model, "A and O are both false");
      }
      if (ve == Tv3::T && vi == Tv3::T) {
        contra_ei.violated(*model, "E and I are both true");
      }
      if (ve == Tv3::F && vi == Tv3::F) {
        contra_ei.violated(*model, "E and I are both false");
      }

      if (va == Tv3::T && vi != Tv3::T) {
        subalt_ai.violated(*model, "A is true but I is not");
      }
      if (ve == Tv3::T && vo != Tv3::T) {
        subalt_eo.violated(*model, "E is true but O is not");
      }

      if (ve == Tv3::T || vi == Tv3::T || va == Tv3::T) {
        const Tv3 vec = eval_categorical(e_conv, *model, scheme);
        const Tv3 vic = eval_categorical(i_conv, *model, scheme);
        if (ve == Tv3::T && vec != Tv3::T) {
          conversions.violated(*model, "E(F,G) is true but E(G,F) is not");
        }
        if (vi == Tv3::T && vic != Tv3::T) {
          conversions.violated(*model, "I(F,G) is true but I(G,F) is not");
        }
        if (va == Tv3::T && vic != Tv3::T) {
          conversions.violated(*model, "A(F,G) is true but I(G,F) is not");
        }
      }
    }
  }

  std::vector<LawReport> out;
  for (const LawState* s : {&contraries, &subcontraries, &contra_ao,
                            &contra_ei, &subalt_ai, &subalt_eo, &conversions}) {
    out.push_back(s->report());
  }
  return out;
}

// --- moods -------------------------------------------------------------------

std::string Mood::code() const {
  std::string c{letters[0], letters[1], letters[2]};
  return c + "-" + std::to_string(figure);
}

std::array<CategoricalForm, 2> Mood::premises() const {
  const bool major_mp = figure == 1 || figure == 3;  // M-P vs P-M
  const bool minor_sm = figure == 1 || figure == 2;  // S-M vs M-S
  CategoricalForm major{letters[0], major_mp ? "M" : "P",
                        major_mp ? "P" : "M"};
  CategoricalForm minor{letters[1], minor_sm ? "S" : "M",
                        minor_sm ? "M" : "S"};
  return {major, minor};
}

CategoricalForm Mood::conclusion() const {
  return CategoricalForm{letters[2], "S", "P"};
}

std::vector<Mood> all_moods() {
  static const char kLetters[] = {'A', 'E', 'I', 'O'};
  std::vector<Mood> out;
  out.reserve(256);
  for (int figure = 1; figure <= 4; ++figure) {
    for (char major : kLetters) {
      for (char minor : kLetters) {
        for (char conclusion : kLetters) {
          out.push_back(Mood{figure, {major, minor, conclusion}});
        }
      }
    }
  }
  return out;
}

namespace {

const std::map<std::string, std::string>& traditional_catalog() {
  static const std::map<std::string, std::string> catalog = {
      {"AAA-1", "Barbara"},   {"EAE-1", "Celarent"}, {"AII-1", "Darii"},
      {"EIO-1", "Ferio"},     {"AAI-1", "Barbari"},  {"EAO-1", "Celaront"},
      {"EAE-2", "Cesare"},    {"AEE-2", "Camestres"}, {"EIO-2", "Festino"},
      {"AOO-2", "Baroco"},    {"EAO-2", "Cesaro"},   {"AEO-2", "Camestros"},
      {"AAI-3", "Darapti"},   {"IAI-3", "Disamis"},  {"AII-3", "Datisi"},
      {"EAO-3", "Felapton"},  {"OAO-3", "Bocardo"},  {"EIO-3", "Ferison"},
      {"AAI-4", "Bramantip"}, {"AEE-4", "Camenes"},  {"IAI-4", "Dimaris"},
      {"EAO-4", "Fesapo"},    {"EIO-4", "Fresison"}, {"AEO-4", "Camenop"},
  };
  return catalog;
}

const std::set<std::string>& classical_catalog() {
  static const std::set<std::string> catalog = {
      "AAA-1", "EAE-1", "AII-1", "EIO-1", "EAE-2", "AEE-2", "EIO-2", "AOO-2",
      "IAI-3", "AII-3", "OAO-3", "EIO-3", "AEE-4", "IAI-4", "EIO-4",
  };
  return catalog;
}

}  // namespace

bool is_traditional_mood(const std::string& code) {
  return traditional_catalog().count(code) > 0;
}

bool is_classical_mood(const std::string& code) {
  return classical_catalog().count(code) > 0;
}

std::string mood_name(const std::string& code) {
  auto it = traditional_catalog().find(code);
  return it == traditional_catalog().end() ? std::string() : it->second;
}

MoodAudit audit_moods(Scheme scheme, int max_domain,
                      std::uint64_t model_cap) {
  MoodAudit out;
  out.scheme = scheme;
  out.max_domain = max_domain;
  const Signature sig{{"S", 1}, {"P", 1}, {"M", 1}};
  const Semantics semantics =
      scheme == Scheme::Presup ? Semantics::Presup : Semantics::Classical;
  for (const Mood& mood : all_moods()) {
    const auto premise_forms = mood.premises();
    const std::vector<Formula> premises{translate(premise_forms[0], scheme),
                                        translate(premise_forms[1], scheme)};
    const Formula conclusion = translate(mood.conclusion(), scheme);
    Verdict verdict = check_validity(premises, conclusion, sig, max_domain,
                                     semantics, model_cap);
    MoodVerdict mv;
    mv.mood = mood;
    mv.name = mood_name(mood.code());
    mv.valid = verdict.value == Tv3::T;
    mv.traditional = is_traditional_mood(mood.code());
    mv.classical = is_classical_mood(mood.code());
    mv.countermodel = std::move(verdict.countermodel);

    const std::string code = mood.code();
    if (mv.valid) out.valid.push_back(code);
    if (mv.traditional && !mv.valid) out.missing_traditional.push_back(code);
    if (!mv.traditional && mv.valid) out.extra_traditional.push_back(code);
    if (mv.classical && !mv.valid) out.missing_classical.push_back(code);
    if (!mv.classical && mv.valid) out.extra_classical.push_back(code);
    out.verdicts.push_back(std::move(mv));
  }
  return out;
}

}  // namespace gaplogic
