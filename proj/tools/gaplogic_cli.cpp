// Command-line driver: propositional and first-order checks, syllogism
// audits, and the diagonal construction, with text or JSON output.
//
// Exit codes: 0 success or confirmed, 1 negative verdict, 2 usage or parse
// error, 3 enumeration cap exceeded, 4 construction self-check failure.

#include <cstddef>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gaplogic/fol3.hpp"
#include "gaplogic/godel.hpp"
#include "gaplogic/json_io.hpp"
#include "gaplogic/prop3.hpp"
#include "gaplogic/syllogistic.hpp"
#include "gaplogic/syntax.hpp"
#include "gaplogic/tv3.hpp"

namespace {

using namespace gaplogic;

struct Options {
  std::string formula;
  std::string model_path;
  std::string system_path;
  std::string semantics = "presup";
  std::string scheme = "presup";
  std::string format = "text";
  int max_domain = 8;
  unsigned max_n = 64;
};

bool json_output(const Options& opt) { return opt.format == "json"; }

int run_prop_taut(const Options& opt) {
  const Formula f = parse_formula(opt.formula);
  const bool classical = is_classical_tautology(f);
  const bool relevant = is_trt_tautology(f);
  const std::vector<TableRow3> rows = truth_table3(f);
  if (json_output(opt)) {
    std::cout << taut_report_to_json(f, classical, relevant, rows) << "\n";
    return relevant ? 0 : 1;
  }
  std::cout << "formula: " << render(f) << "\n";
  std::cout << "canonical: " << render(canonicalize(f)) << "\n";
  std::cout << "classical tautology: " << (classical ? "yes" : "no") << "\n";
  if (relevant) {
    std::cout << "truth-relevant tautology (all rows T)\n";
    return 0;
  }
  std::size_t false_rows = 0;
  std::size_t gap_rows = 0;
  for (const TableRow3& row : rows) {
    if (row.value == Tv3::F) ++false_rows;
    if (row.value == Tv3::N) ++gap_rows;
  }
  if (false_rows == 0 && gap_rows == rows.size()) {
    std::cout << "NOT a truth-relevant tautology (vacuous on all rows)\n";
  } else if (false_rows > 0) {
    std::cout << "NOT a truth-relevant tautology (false on " << false_rows
              << " of " << rows.size() << " rows)\n";
  } else {
    std::cout << "NOT a truth-relevant tautology (vacuous on " << gap_rows
              << " of " << rows.size() << " rows)\n";
  }
  return 1;
}

int run_prop_table(const Options& opt) {
  const Formula f = parse_formula(opt.formula);
  const std::vector<TableRow3> rows = truth_table3(f);
  if (json_output(opt)) {
    std::cout << truth_table_to_json(f, rows) << "\n";
    return 0;
  }
  std::cout << "formula: " << render(f) << "\n";
  std::cout << "canonical: " << render(canonicalize(f)) << "\n";
  const std::vector<std::string> atoms = atoms_of(f);
  for (const std::string& a : atoms) std::cout << a << " ";
  std::cout << "| value\n";
  for (const TableRow3& row : rows) {
    for (const std::string& a : atoms) {
      std::cout << (row.valuation.at(a) ? "T" : "F") << " ";
    }
    std::cout << "| " << to_string(row.value) << "\n";
  }
  return 0;
}

int run_fol(const Options& opt) {
  const Formula f = parse_formula(opt.formula);
  const Interpretation model = load_model_file(opt.model_path);
  const bool classical = opt.semantics == "classical";
  std::string gap_reason;
  const Tv3 value = classical ? tv3_of_bool(eval_classical_fol(f, model))
                              : eval3_fol(f, model, &gap_reason);
  if (json_output(opt)) {
    std::cout << fol_verdict_to_json(
                     f, classical ? Semantics::Classical : Semantics::Presup,
                     value, gap_reason)
              << "\n";
    return 0;
  }
  std::cout << "formula: " << render(f) << "\n";
  std::cout << "semantics: " << opt.semantics << "\n";
  std::cout << "value: " << to_string(value);
  if (value == Tv3::N && !gap_reason.empty()) {
    std::cout << " (presupposition failed: " << gap_reason << ")";
  }
  std::cout << "\n";
  return 0;
}

int run_square(const Options& opt) {
  const Scheme scheme = scheme_from_string(opt.scheme);
  const std::vector<LawReport> laws = audit_square(scheme, opt.max_domain);
  if (json_output(opt)) {
    std::cout << square_report_to_json(scheme, opt.max_domain, laws) << "\n";
  } else {
    std::cout << "scheme: " << opt.scheme << ", domains 1.." << opt.max_domain
              << "\n";
    std::size_t passed = 0;
    for (const LawReport& law : laws) {
      if (law.holds) {
        ++passed;
        std::cout << "[ OK ] " << law.law << "\n";
      } else {
        std::cout << "[FAIL] " << law.law << ": " << law.detail << "\n";
        if (law.countermodel) {
          std::cout << "       countermodel: "
                    << model_to_json(*law.countermodel) << "\n";
        }
      }
    }
    std::cout << "laws passed: " << passed << "/" << laws.size() << "\n";
  }
  for (const LawReport& law : laws) {
    if (!law.holds) return 1;
  }
  return 0;
}

int run_moods(const Options& opt) {
  const Scheme scheme = scheme_from_string(opt.scheme);
  const MoodAudit audit = audit_moods(scheme, opt.max_domain);
  const bool against_classical = scheme == Scheme::Table1;
  const std::string catalog = against_classical ? "classical" : "traditional";
  const bool matches =
      against_classical
          ? audit.missing_classical.empty() && audit.extra_classical.empty()
          : audit.missing_traditional.empty() &&
                audit.extra_traditional.empty();
  if (json_output(opt)) {
    std::cout << mood_audit_to_json(audit) << "\n";
    return matches ? 0 : 1;
  }
  std::cout << "scheme: " << opt.scheme << ", domains 1.." << opt.max_domain
            << "\n";
  for (const MoodVerdict& v : audit.verdicts) {
    if (!v.valid) continue;
    std::cout << v.mood.code();
    if (!v.name.empty()) std::cout << " " << v.name;
    std::cout << "\n";
  }
  std::cout << audit.valid.size() << "/" << audit.verdicts.size()
            << " valid; ";
  if (matches) {
    std::cout << "matches " << catalog << " catalog\n";
    return 0;
  }
  std::cout << "DEVIATES from " << catalog << " catalog\n";
  const auto& missing =
      against_classical ? audit.missing_classical : audit.missing_traditional;
  const auto& extra =
      against_classical ? audit.extra_classical : audit.extra_traditional;
  for (const std::string& code : missing) {
    std::cout << "  expected valid, found invalid: " << code << "\n";
  }
  for (const std::string& code : extra) {
    std::cout << "  valid but not in catalog: " << code << "\n";
  }
  return 1;
}

int run_godel_build(const Options& opt) {
  const ToySystem sys = load_system_file(opt.system_path);
  const FixedPoint fp = build_fixed_point();
  const Closure closure = compute_closure(sys);
  if (json_output(opt)) {
    std::cout << fixed_point_to_json(fp, closure.entries.size()) << "\n";
    return 0;
  }
  std::cout << "U = " << render(fp.template_formula) << "\n";
  std::cout << "k = " << fp.template_code.get_str() << "\n";
  std::cout << "G = " << render(fp.sentence) << "\n";
  std::cout << "<G> = " << fp.sentence_code.get_str() << "\n";
  std::cout << "H = " << render(fp.unprovability_claim) << "\n";
  std::cout << "self-check: diag(k) = <G> verified\n";
  std::cout << "closure size: " << closure.entries.size() << "\n";
  return 0;
}

int run_godel_unroll(const Options& opt) {
  const ToySystem sys = load_system_file(opt.system_path);
  const UnrollReport report =
      eval_G_unrolled(sys, default_sample(sys, opt.max_n));
  if (json_output(opt)) {
    std::cout << unroll_report_to_json(report) << "\n";
    return 0;
  }
  std::cout << "overall: " << to_string(report.overall)
            << (report.overall == Tv3::N
                    ? " (G is not true: every instance has an empty term)\n"
                    : "\n");
  std::cout << "as-written classical: "
            << to_string(report.as_written_classical) << "\n";
  for (const InstanceReport& r : report.instances) {
    std::cout << "n=" << r.n.get_str() << ": " << to_string(r.verdict);
    std::cout << " [empty:";
    if (r.prf_term_empty) std::cout << " Prf";
    if (r.diag_term_empty) std::cout << (r.prf_term_empty ? "," : "")
                                     << " Diag";
    if (!r.prf_term_empty && !r.diag_term_empty) std::cout << " none";
    std::cout << "]";
    if (!r.direction.empty()) std::cout << " " << r.direction;
    std::cout << "\n";
  }
  return 0;
}

int run_godel_report(const Options& opt) {
  const ToySystem sys = load_system_file(opt.system_path);
  const FixedPoint fp = build_fixed_point();
  const EquivalenceReport eq = eval_J(sys);
  const InstanceReport at_g = eval_instance_K(fp.sentence_code, sys);
  if (json_output(opt)) {
    std::cout << equivalence_report_to_json(eq) << "\n";
    return 0;
  }
  std::string empty_terms;
  if (at_g.prf_term_empty && at_g.diag_term_empty) {
    empty_terms = "Prf- and Diag-terms empty";
  } else if (at_g.prf_term_empty) {
    empty_terms = "Prf-term empty";
  } else if (at_g.diag_term_empty) {
    empty_terms = "Diag-term empty";
  } else {
    empty_terms = "no empty terms";
  }
  std::cout << "gap semantics: K: " << to_string(at_g.verdict) << " ("
            << empty_terms << ") / H: " << to_string(eq.h_gap)
            << " / J: " << to_string(eq.j_gap) << " - "
            << (eq.j_gap == Tv3::T ? "equivalence holds" : "equivalence fails")
            << "\n";
  std::cout << "classical: G: " << to_string(eq.g_classical)
            << " / H: " << to_string(eq.h_classical)
            << " / J: " << to_string(eq.j_classical) << " - "
            << (eq.j_classical == Tv3::T ? "equivalence holds"
                                         : "equivalence fails")
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"workbench for logic with truth-value gaps"};
  app.require_subcommand(1);

  CLI::App* prop = app.add_subcommand("prop", "propositional checks");
  prop->require_subcommand(1);
  CLI::App* taut =
      prop->add_subcommand("taut", "truth-relevant tautology check");
  taut->add_option("formula", opt.formula, "propositional formula")
      ->required();
  taut->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  CLI::App* table = prop->add_subcommand("table", "three-valued truth table");
  table->add_option("formula", opt.formula, "propositional formula")
      ->required();
  table->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* fol = app.add_subcommand("fol", "evaluate a sentence in a model");
  fol->add_option("model", opt.model_path, "model JSON file")->required();
  fol->add_option("formula", opt.formula, "first-order sentence")->required();
  fol->add_option("--semantics", opt.semantics, "presup or classical")
      ->check(CLI::IsMember({"presup", "classical"}));
  fol->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* syl = app.add_subcommand("syllogism", "categorical audits");
  syl->require_subcommand(1);
  CLI::App* square = syl->add_subcommand("square", "square of opposition");
  CLI::App* moods = syl->add_subcommand("moods", "all 256 moods");
  for (CLI::App* sub : {square, moods}) {
    sub->add_option("--scheme", opt.scheme, "table1, table2, or presup")
        ->check(CLI::IsMember({"table1", "table2", "presup"}));
    sub->add_option("--max-domain", opt.max_domain, "largest domain size")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  }

  CLI::App* godel = app.add_subcommand("godel", "diagonal construction");
  godel->require_subcommand(1);
  CLI::App* build = godel->add_subcommand("build", "construct the fixed point");
  CLI::App* unroll = godel->add_subcommand("unroll", "instance-wise reading");
  CLI::App* report = godel->add_subcommand("report", "verdicts for K, H, J");
  for (CLI::App* sub : {build, unroll, report}) {
    sub->add_option("system", opt.system_path, "system JSON file")->required();
    sub->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  }
  unroll->add_option("--max-n", opt.max_n, "sample 1..N plus special points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (taut->parsed()) return run_prop_taut(opt);
    if (table->parsed()) return run_prop_table(opt);
    if (fol->parsed()) return run_fol(opt);
    if (square->parsed()) return run_square(opt);
    if (moods->parsed()) return run_moods(opt);
    if (build->parsed()) return run_godel_build(opt);
    if (unroll->parsed()) return run_godel_unroll(opt);
    if (report->parsed()) return run_godel_report(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": "
              << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const SelfCheckError& e) {
    std::cerr << "self-check failure: " << e.what() << "\n";
    return 4;
  } catch (const EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
