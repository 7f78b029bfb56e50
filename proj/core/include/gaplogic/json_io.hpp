#ifndef GAPLOGIC_JSON_IO_HPP
#define GAPLOGIC_JSON_IO_HPP

#include <string>
#include <vector>

#include "gaplogic/fol3.hpp"
#include "gaplogic/godel.hpp"
#include "gaplogic/prop3.hpp"
#include "gaplogic/syllogistic.hpp"

// JSON loading and report serialization. All serializers emit compact
// single-line JSON with alphabetically sorted keys, so output for fixed
// inputs is byte-stable. Big naturals are emitted as decimal strings.

namespace gaplogic {

// Model files look like
//   {"domain": ["a","b"], "predicates": {"F": [["a"]], "G": [["a"],["b"]]}}
// with extension tuples as arrays (unary tuples are singleton arrays).
// Throws EvalError on malformed input: unknown keys are ignored, but the
// domain must be a nonempty list of distinct strings and every tuple must
// draw its elements from the domain.
Interpretation parse_model_json(const std::string& text);
Interpretation load_model_file(const std::string& path);

// System files look like {"axioms": ["Prf(1,1)", "Prf(1,1) -> Diag(1,1)"]}
// with each axiom in the formula grammar. Parse failures carry position
// info; axioms must be closed.
ToySystem parse_system_json(const std::string& text);
ToySystem load_system_file(const std::string& path);

std::string model_to_json(const Interpretation& I);

std::string taut_report_to_json(const Formula& f, bool classical_tautology,
                                bool truth_relevant,
                                const std::vector<TableRow3>& rows);
std::string truth_table_to_json(const Formula& f,
                                const std::vector<TableRow3>& rows);
std::string fol_verdict_to_json(const Formula& f, Semantics semantics,
                                Tv3 value, const std::string& gap_reason);
std::string square_report_to_json(Scheme scheme, int max_domain,
                                  const std::vector<LawReport>& laws);
std::string mood_audit_to_json(const MoodAudit& audit);
std::string fixed_point_to_json(const FixedPoint& fp,
                                std::size_t closure_size);
std::string unroll_report_to_json(const UnrollReport& report);
std::string equivalence_report_to_json(const EquivalenceReport& report);

}  // namespace gaplogic

#endif  // GAPLOGIC_JSON_IO_HPP
