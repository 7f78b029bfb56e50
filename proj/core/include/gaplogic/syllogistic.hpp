#ifndef GAPLOGIC_SYLLOGISTIC_HPP
#define GAPLOGIC_SYLLOGISTIC_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaplogic/fol3.hpp"
#include "gaplogic/syntax.hpp"
#include "gaplogic/tv3.hpp"

namespace gaplogic {

// One categorical sentence: "All/No/Some/Some-not subject are predicate".
// letter A = all, E = no, I = some, O = some are not. The terms are unary
// predicate names and must be distinct.
struct CategoricalForm {
  char letter = 'A';
  std::string subject;
  std::string predicate;
};

// How a categorical sentence is read as a first-order formula:
//   Table1: the bare classical reading, A = ~(exists x)(F(x) & ~G(x)).
//   Table2: Table1 plus explicit existence conjuncts (A and E) or escape
//           disjuncts (I and O), so the full square of opposition survives
//           classically.
//   Presup: Table1 cores, with emptiness of either term treated as a
//           presupposition failure instead of a truth value.
enum class Scheme { Table1, Table2, Presup };

std::string to_string(Scheme s);
// Inverse of to_string; throws EvalError on an unknown name.
Scheme scheme_from_string(const std::string& name);

// Maps a categorical sentence to its first-order reading. For Presup, A and
// E keep their Table1 form (the gap evaluator supplies the failure case) and
// I and O are their bare existential cores.
Formula translate(const CategoricalForm& form, Scheme scheme);

// Evaluates a categorical sentence in a model. Table1 and Table2 evaluate
// the translation classically and never return N. Presup returns N unless
// both of the sentence's terms are inhabited (A and O presuppose F and ~G,
// E and I presuppose F and G), and otherwise the classical core verdict.
Tv3 eval_categorical(const CategoricalForm& form, const Interpretation& I,
                     Scheme scheme);

// Verdict for one law of the square of opposition.
struct LawReport {
  std::string law;
  bool holds = false;
  // First model violating a "for all models" clause, in enumeration order.
  std::optional<Interpretation> countermodel;
  // Which clause failed, or a note on the witnessing model.
  std::string detail;
};

// Checks the traditional laws for the pair (F, G) over every model with
// domain size 1..max_domain. Reports, in order: contraries, subcontraries,
// contradictories (A,O), contradictories (E,I), subalternation A=>I,
// subalternation E=>O, and the conversion laws (E and I simple, A per
// accidens).
std::vector<LawReport> audit_square(Scheme scheme, int max_domain = 4,
                                    std::uint64_t model_cap = kDefaultModelCap);

// A syllogistic mood: a figure and the forms of major premise, minor
// premise, and conclusion. The terms are fixed as S (minor), P (major),
// M (middle); the figure places M in the premises:
//   figure 1: M-P, S-M    figure 2: P-M, S-M
//   figure 3: M-P, M-S    figure 4: P-M, M-S
// and the conclusion is always S-P.
struct Mood {
  int figure = 1;
  std::array<char, 3> letters = {'A', 'A', 'A'};  // major, minor, conclusion

  std::string code() const;  // e.g. "AAA-1"
  std::array<CategoricalForm, 2> premises() const;
  CategoricalForm conclusion() const;
};

// All 256 moods in report order: figures ascending, letters A,E,I,O with the
// major premise varying slowest.
std::vector<Mood> all_moods();

struct MoodVerdict {
  Mood mood;
  std::string name;  // traditional name, empty for the unnamed moods
  bool valid = false;
  bool traditional = false;  // one of the 24 moods of the traditional lists
  bool classical = false;    // one of the 15 moods valid without import
  std::optional<Interpretation> countermodel;
};

struct MoodAudit {
  Scheme scheme = Scheme::Table1;
  int max_domain = 0;
  std::vector<MoodVerdict> verdicts;  // all 256, in all_moods() order
  // Diff against the embedded catalogs, as mood codes.
  std::vector<std::string> valid;
  std::vector<std::string> missing_traditional;  // traditional but found invalid
  std::vector<std::string> extra_traditional;    // valid but not traditional
  std::vector<std::string> missing_classical;
  std::vector<std::string> extra_classical;
};

// Decides every mood under the scheme's reading via check_validity, using
// classical truth for Table1/Table2 and the gap semantics for Presup, and
// diffs the result against the 24-mood traditional catalog and the 15-mood
// classical catalog. A domain bound of 8 is decision complete for the three
// unary terms.
MoodAudit audit_moods(Scheme scheme, int max_domain = 8,
                      std::uint64_t model_cap = kDefaultModelCap);

// Embedded catalogs. Codes use the "AAA-1" shape.
bool is_traditional_mood(const std::string& code);
bool is_classical_mood(const std::string& code);
// Traditional name for a mood code ("Barbara" for "AAA-1"), or "" if the
// mood is not one of the named 24.
std::string mood_name(const std::string& code);

}  // namespace gaplogic

#endif  // GAPLOGIC_SYLLOGISTIC_HPP
