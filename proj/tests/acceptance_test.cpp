// Release gate. Each numbered criterion prints one [PASS]/[FAIL] line; the
// process exits nonzero if any fails. All comparisons are exact: the expected
// catalogs, codes, and verdicts are pinned as constants below.
#include <gaplogic/fol3.hpp>
#include <gaplogic/godel.hpp>
#include <gaplogic/json_io.hpp>
#include <gaplogic/prop3.hpp>
#include <gaplogic/syllogistic.hpp>
#include <gaplogic/syntax.hpp>
#include <gaplogic/tv3.hpp>

#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "test_util.hpp"

namespace {

using namespace gaplogic;
using testing::Rng;

// A criterion reports its first failure; std::nullopt means it passed.
using Outcome = std::optional<std::string>;

std::string tv(Tv3 v) { return to_string(v); }

Outcome vacuous_classical_tautologies() {
  const std::vector<std::string> cases = {
      "(P & ~P) -> Q", "~(P & ~P) | Q", "~((P & ~P) & ~Q)"};
  for (const std::string& text : cases) {
    Formula f = parse_formula(text);
    if (!is_classical_tautology(f)) {
      return text + " is not a classical tautology";
    }
    if (is_trt_tautology(f)) {
      return text + " was accepted as a truth-relevant tautology";
    }
    for (const TableRow3& row : truth_table3(f)) {
      if (row.value != Tv3::N) {
        return text + " has a non-N row (" + tv(row.value) + ")";
      }
    }
  }
  return std::nullopt;
}

Outcome contentful_tautologies() {
  const std::vector<std::string> cases = {"P | ~P", "P -> P",
                                          "((P -> Q) & P) -> Q"};
  for (const std::string& text : cases) {
    Formula f = parse_formula(text);
    if (!is_trt_tautology(f)) {
      return text + " is not a truth-relevant tautology";
    }
    for (const TableRow3& row : truth_table3(f)) {
      if (row.value != Tv3::T) {
        return text + " has a non-T row (" + tv(row.value) + ")";
      }
    }
  }
  return std::nullopt;
}

Outcome universal_affirmative_gaps() {
  Formula a1 = parse_formula("forall x. (F(x) -> G(x))");
  Formula a2 = parse_formula("forall x. (~F(x) | G(x))");
  Formula a3 = parse_formula("~(exists x. (F(x) & ~G(x)))");
  Formula canon = canonicalize(a1);
  if (canonicalize(a2) != canon || canonicalize(a3) != canon) {
    return "the three spellings do not share a canonical form";
  }
  Signature sig = {{"F", 1}, {"G", 1}};
  for (std::size_t size = 1; size <= 4; ++size) {
    ModelEnumerator en(sig, size);
    while (std::optional<Interpretation> m = en.next()) {
      bool f_empty = m->predicates.at("F").empty();
      bool not_g_empty = true;  // ~G is empty when G covers the domain
      for (const std::string& d : m->domain) {
        if (!m->predicates.at("G").count({d})) not_g_empty = false;
      }
      Tv3 got = eval3_fol(a1, *m);
      if (eval3_fol(a2, *m) != got || eval3_fol(a3, *m) != got) {
        return "spellings disagree on a size-" + std::to_string(size) +
               " model";
      }
      bool classical = eval_classical_fol(a1, *m);
      if (f_empty && !classical) {
        return "classical evaluation is not T on an F-empty model";
      }
      Tv3 want = (f_empty || not_g_empty) ? Tv3::N
                                          : (classical ? Tv3::T : Tv3::F);
      if (got != want) {
        return "size " + std::to_string(size) + ": expected " + tv(want) +
               ", got " + tv(got);
      }
    }
  }
  return std::nullopt;
}

Outcome square_of_opposition() {
  for (Scheme scheme : {Scheme::Table2, Scheme::Presup}) {
    std::vector<LawReport> laws = audit_square(scheme, 4);
    if (laws.size() != 7) return "expected 7 law checks";
    for (const LawReport& law : laws) {
      if (!law.holds) {
        return to_string(scheme) + " breaks " + law.law;
      }
    }
  }
  std::vector<LawReport> table1 = audit_square(Scheme::Table1, 4);
  for (const std::string& name :
       {"contraries", "subalternation_a_i", "subalternation_e_o"}) {
    bool seen = false;
    for (const LawReport& law : table1) {
      if (law.law != name) continue;
      seen = true;
      if (law.holds) return "table1 unexpectedly satisfies " + name;
      if (!law.countermodel ||
          !law.countermodel->predicates.at("F").empty()) {
        return name + " lacks an F-empty countermodel";
      }
    }
    if (!seen) return std::string("missing law check ") + name;
  }
  return std::nullopt;
}

Outcome mood_catalogs() {
  MoodAudit classical = audit_moods(Scheme::Table1, 8);
  if (classical.valid.size() != 15 || !classical.missing_classical.empty() ||
      !classical.extra_classical.empty()) {
    return "table1 found " + std::to_string(classical.valid.size()) +
           " valid moods, want the classical 15";
  }
  for (Scheme scheme : {Scheme::Table2, Scheme::Presup}) {
    MoodAudit audit = audit_moods(scheme, 8);
    if (audit.valid.size() != 24 || !audit.missing_traditional.empty() ||
        !audit.extra_traditional.empty()) {
      return to_string(scheme) + " found " +
             std::to_string(audit.valid.size()) +
             " valid moods, want the traditional 24";
    }
  }
  return std::nullopt;
}

Outcome fixed_point_closes(const FixedPoint& fp, const ToySystem& sys) {
  std::optional<Nat> d = diag(fp.template_code);
  if (!d || *d != fp.sentence_code) {
    return "diag of the template code is not the sentence code";
  }
  EquivalenceReport eq = eval_J(sys);
  if (eq.g_classical != Tv3::T || eq.h_classical != Tv3::T ||
      eq.j_classical != Tv3::T) {
    return "classical verdicts G=" + tv(eq.g_classical) + " H=" +
           tv(eq.h_classical) + " J=" + tv(eq.j_classical) + ", want all T";
  }
  return std::nullopt;
}

Outcome every_instance_vacuous(const FixedPoint& fp, const ToySystem& sys) {
  const std::string prf_vacuous = "(x)(Prf(x,n) -> ~Diag(k,n)) is vacuous";
  const std::string diag_vacuous = "(x)(Diag(k,n) -> ~Prf(x,n)) is vacuous";
  Closure closure = compute_closure(sys);
  std::set<Nat> provable_codes;
  for (const ProvableEntry& entry : closure.entries) {
    if (entry.code) provable_codes.insert(*entry.code);
  }
  UnrollReport report = eval_G_unrolled(sys);
  std::size_t want = 64 + provable_codes.size() + 1;  // 1..64, codes, G
  if (report.instances.size() != want) {
    return "sample has " + std::to_string(report.instances.size()) +
           " instances, want " + std::to_string(want);
  }
  for (const InstanceReport& inst : report.instances) {
    std::string label = "n=" + inst.n.get_str();
    if (inst.verdict != Tv3::N) {
      return label + " is " + tv(inst.verdict) + ", want N";
    }
    if (inst.n == fp.sentence_code) {
      if (!inst.prf_term_empty || inst.diag_term_empty ||
          inst.direction != prf_vacuous) {
        return label + " (the sentence code) has the wrong case split";
      }
    } else if (provable_codes.count(inst.n)) {
      if (inst.prf_term_empty || !inst.diag_term_empty ||
          inst.direction != diag_vacuous) {
        return label + " (a provable code) has the wrong case split";
      }
    } else {
      if (!inst.prf_term_empty || !inst.diag_term_empty ||
          inst.direction != prf_vacuous) {
        return label + " should have both terms empty";
      }
    }
  }
  if (report.sentence_provable) return "the sentence reports as provable";
  if (report.overall != Tv3::N) {
    return "overall verdict " + tv(report.overall) + ", want N";
  }
  return std::nullopt;
}

Outcome equivalence_fails_under_gaps(const FixedPoint& fp,
                                     const ToySystem& sys) {
  InstanceReport k = eval_instance_K(fp.sentence_code, sys);
  if (k.verdict != Tv3::N || !k.prf_term_empty) {
    return "the sentence-code instance is " + tv(k.verdict) +
           " with prf_term_empty=" + (k.prf_term_empty ? "true" : "false");
  }
  EquivalenceReport eq = eval_J(sys);
  if (eq.h_gap != Tv3::T) return "H is " + tv(eq.h_gap) + ", want T";
  if (eq.g_gap != Tv3::N) return "G is " + tv(eq.g_gap) + ", want N";
  if (eq.j_gap != Tv3::N) return "J is " + tv(eq.j_gap) + ", want N";
  return std::nullopt;
}

Outcome property_suites() {
  Rng rng(0x5eed5eed);
  const std::vector<std::string>& alphabet = GodelCodec::alphabet();
  GodelCodec codec;
  for (int i = 0; i < 10000; ++i) {
    std::vector<std::string> tokens;
    std::size_t len = 1 + rng.below(40);
    for (std::size_t j = 0; j < len; ++j) {
      tokens.push_back(alphabet[rng.below(alphabet.size())]);
    }
    if (codec.decode(codec.encode(tokens)) != tokens) {
      return "token round trip failed at case " + std::to_string(i);
    }
  }
  for (int i = 0; i < 10000; ++i) {
    Nat n = 1;
    int chunks = 1 + static_cast<int>(rng.below(3));
    for (int c = 0; c < chunks; ++c) {
      n <<= 64;
      n += Nat(std::to_string(rng.bits64()));
    }
    if (codec.encode(codec.decode(n)) != n) {
      return "numeric round trip failed at case " + std::to_string(i);
    }
  }

  const std::vector<std::string> atoms = {"P", "Q", "R", "S"};
  for (int i = 0; i < 6000; ++i) {
    Formula f = testing::gen_prop(rng, 4, atoms);
    Valuation v = testing::gen_valuation(rng, atoms_of(f));
    Tv3 three = eval3(f, v);
    if (three != Tv3::N && (three == Tv3::T) != classical_eval(f, v)) {
      return "eval3 contradicts classical evaluation on " + render(f);
    }
  }
  const std::vector<std::string> preds = {"F", "G", "H"};
  for (int i = 0; i < 6000; ++i) {
    Formula f = testing::gen_sentence(rng, 4, preds);
    Interpretation m = testing::gen_model(rng, predicate_arities(f), 4);
    Tv3 three = eval3_fol(f, m);
    if (three != Tv3::N && (three == Tv3::T) != eval_classical_fol(f, m)) {
      return "eval3_fol contradicts classical evaluation on " + render(f);
    }
  }

  for (int i = 0; i < 1500; ++i) {
    Formula f = testing::gen_prop(rng, 4, atoms);
    Formula canon = canonicalize(f);
    std::vector<std::string> names = atoms_of(f);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << names.size());
         ++bits) {
      Valuation v;
      for (std::size_t j = 0; j < names.size(); ++j) {
        v[names[j]] = (bits >> j) & 1;
      }
      if (classical_eval(f, v) != classical_eval(canon, v)) {
        return "canonicalization changed the classical value of " + render(f);
      }
    }
  }
  for (int i = 0; i < 400; ++i) {
    Formula f = testing::gen_sentence(rng, 3, {"F", "G"});
    Formula canon = canonicalize(f);
    Signature sig = predicate_arities(f);
    if (sig.empty()) continue;
    for (std::size_t size = 1; size <= 3; ++size) {
      ModelEnumerator en(sig, size);
      while (std::optional<Interpretation> m = en.next()) {
        if (eval_classical_fol(f, *m) != eval_classical_fol(canon, *m)) {
          return "canonicalization changed the classical value of " +
                 render(f);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

int main() {
  std::string data_dir = GAPLOGIC_DATA_DIR;
  std::optional<FixedPoint> fp;
  ToySystem sys;
  try {
    fp = build_fixed_point();
    sys = load_system_file(data_dir + "/default_system.json");
  } catch (const std::exception& e) {
    std::printf("[FAIL] setup: %s\n", e.what());
    return 1;
  }

  struct Criterion {
    const char* what;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"classical tautologies with a contradictory conjunct gap on every row",
       vacuous_classical_tautologies},
      {"contentful tautologies stay true on every row",
       contentful_tautologies},
      {"universal affirmatives gap exactly on empty terms (domains 1..4)",
       universal_affirmative_gaps},
      {"square of opposition holds under table2/presup, breaks under table1",
       square_of_opposition},
      {"mood audit: 15 classical under table1, 24 traditional otherwise",
       mood_catalogs},
      {"diagonal fixed point closes and is classically an equivalence",
       [&] { return fixed_point_closes(*fp, sys); }},
      {"every sampled instance of the fixed point is vacuous",
       [&] { return every_instance_vacuous(*fp, sys); }},
      {"under gaps H is true, the G instance and J are undefined",
       [&] { return equivalence_fails_under_gaps(*fp, sys); }},
      {"property suites: codec bijection, gap-or-agree, canonical invariance",
       property_suites},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out = std::string("exception: ") + e.what();
    }
    if (out) {
      ++failures;
      std::printf("[FAIL] %zu: %s (%s)\n", i + 1, criteria[i].what,
                  out->c_str());
    } else {
      std::printf("[PASS] %zu: %s\n", i + 1, criteria[i].what);
    }
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
