#include "gaplogic/fol3.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gaplogic/syntax.hpp"
#include "test_util.hpp"

namespace gaplogic {
namespace {

Interpretation model(std::vector<std::string> domain,
                     std::map<std::string, std::set<std::vector<std::string>>>
                         predicates) {
  Interpretation I;
  I.domain = std::move(domain);
  I.predicates = std::move(predicates);
  return I;
}

TEST(SatSet, BasicsEnvAndNumerals) {
  Interpretation I = model({"a", "b", "c"}, {{"F", {{"a"}, {"b"}}},
                                             {"G", {{"b"}, {"c"}}},
                                             {"R", {{"a", "c"}}}});
  Formula fx = parse_formula("F(x)");
  EXPECT_EQ(sat_set(fx, "x", I), (std::set<std::string>{"a", "b"}));
  EXPECT_EQ(sat_set(parse_formula("F(x) & G(x)"), "x", I),
            (std::set<std::string>{"b"}));
  EXPECT_EQ(sat_set(parse_formula("~F(x)"), "x", I),
            (std::set<std::string>{"c"}));
  // Other free variables come from the model environment.
  I.env["y"] = "c";
  EXPECT_EQ(sat_set(parse_formula("R(x,y)"), "x", I),
            (std::set<std::string>{"a"}));
  // Numerals denote elements by decimal name.
  Interpretation J = model({"1", "2"}, {{"F", {{"2"}}}});
  EXPECT_EQ(sat_set(parse_formula("F(x) & F(2)"), "x", J),
            (std::set<std::string>{"2"}));
  EXPECT_THROW(sat_set(parse_formula("F(x) & F(9)"), "x", J), EvalError);
}

TEST(ClassicalFol, MatchesReferenceOnRandomSentences) {
  testing::Rng rng(2025);
  Signature sig = {{"F", 1}, {"G", 1}, {"H", 1}};
  for (int i = 0; i < 3000; ++i) {
    Formula f = testing::gen_sentence(rng, 5, {"F", "G", "H"});
    Interpretation I = testing::gen_model(rng, sig, 4);
    EXPECT_EQ(eval_classical_fol(f, I), testing::ref_classical_fol(f, I))
        << render(f) << " on " << I.domain.size() << " elements";
  }
}

TEST(ClassicalFol, ErrorsAreEvalErrors) {
  Interpretation I = model({"a"}, {{"F", {{"a"}}}});
  EXPECT_THROW(eval_classical_fol(parse_formula("F(x)"), I), EvalError);
  EXPECT_THROW(eval_classical_fol(parse_formula("exists x. G(x)"), I),
               EvalError);
  // The arity check is witnessed by the stored tuples. An empty extension
  // has no tuples to conflict with, so only a populated one can mismatch.
  EXPECT_THROW(eval_classical_fol(parse_formula("exists x. F(x,x)"), I),
               EvalError);
  Interpretation empty;
  empty.predicates["F"] = {};
  EXPECT_THROW(eval_classical_fol(parse_formula("exists x. F(x)"), empty),
               EvalError);
}

// The three spellings of "All F are G" collapse to one canonical form and
// gap exactly when F or the complement of G is empty.
TEST(Eval3Fol, UniversalAffirmativeGapsOnEmptyTerms) {
  const char* spellings[] = {"forall x. (F(x) -> G(x))",
                             "forall x. (~F(x) | G(x))",
                             "~(exists x. (F(x) & ~G(x)))"};
  Formula canon = canonicalize(parse_formula(spellings[0]));
  for (const char* text : spellings) {
    EXPECT_EQ(canonicalize(parse_formula(text)), canon) << text;
  }
  Signature sig = {{"F", 1}, {"G", 1}};
  for (std::size_t size = 1; size <= 4; ++size) {
    ModelEnumerator en(sig, size);
    while (auto I = en.next()) {
      bool f_empty = I->predicates.at("F").empty();
      bool notg_empty = I->predicates.at("G").size() == size;
      for (const char* text : spellings) {
        Formula f = parse_formula(text);
        std::string reason;
        Tv3 v = eval3_fol(f, *I, &reason);
        if (f_empty || notg_empty) {
          EXPECT_EQ(v, Tv3::N) << text;
          EXPECT_FALSE(reason.empty());
        } else {
          EXPECT_EQ(v, tv3_of_bool(eval_classical_fol(f, *I))) << text;
          EXPECT_TRUE(reason.empty());
        }
        if (f_empty) {
          EXPECT_TRUE(eval_classical_fol(f, *I)) << text;
        }
      }
    }
  }
}

TEST(Eval3Fol, GapReasonNamesTheEmptySet) {
  Formula a = parse_formula("forall x. (F(x) -> G(x))");
  std::string reason;
  Interpretation I = model({"a"}, {{"F", {}}, {"G", {}}});
  EXPECT_EQ(eval3_fol(a, I, &reason), Tv3::N);
  EXPECT_EQ(reason, "term F(x) is empty");
  Interpretation J = model({"a"}, {{"F", {{"a"}}}, {"G", {{"a"}}}});
  EXPECT_EQ(eval3_fol(a, J, &reason), Tv3::N);
  EXPECT_EQ(reason, "term ~G(x) is empty");
  Interpretation B = model({"a"}, {{"F", {}}, {"G", {{"a"}}}});
  EXPECT_EQ(eval3_fol(a, B, &reason), Tv3::N);
  EXPECT_EQ(reason, "terms F(x) and ~G(x) are empty");
  // Reason resets when there is no gap.
  Interpretation K = model({"a", "b"}, {{"F", {{"a"}}}, {"G", {{"a"}}}});
  reason = "stale";
  EXPECT_EQ(eval3_fol(a, K, &reason), Tv3::T);
  EXPECT_TRUE(reason.empty());
}

TEST(Eval3Fol, SingleTermDenialStaysClassical) {
  Formula f = parse_formula("~(exists x. F(x))");
  Interpretation empty = model({"a"}, {{"F", {}}});
  Interpretation full = model({"a"}, {{"F", {{"a"}}}});
  EXPECT_EQ(eval3_fol(f, empty), Tv3::T);
  EXPECT_EQ(eval3_fol(f, full), Tv3::F);
}

TEST(Eval3Fol, NestedQuantifierDenialStaysClassical) {
  // Only a directly denied single-quantifier conjunction carries the
  // presupposition. With two quantifier layers the denial is read as
  // written and evaluates classically, even when the inner sets are empty.
  Formula f = parse_formula("~(exists x. exists z. (F(x) & G(z)))");
  Interpretation I = model({"a"}, {{"F", {}}, {"G", {{"a"}}}});
  EXPECT_EQ(eval3_fol(f, I), Tv3::T);
  Formula single = parse_formula("~(exists x. (F(x) & G(x)))");
  EXPECT_EQ(eval3_fol(single, I), Tv3::N);
}

TEST(Eval3Fol, ExistsIsKleeneDisjunction) {
  // The body gaps for every element, so the disjunction gaps.
  Formula f = parse_formula("exists x. ~(F(x) & (G(x) & ~G(x)))");
  Interpretation I = model({"a", "b"}, {{"F", {{"a"}}}, {"G", {{"b"}}}});
  EXPECT_EQ(eval3_fol(f, I), Tv3::N);
  EXPECT_TRUE(eval_classical_fol(f, I));
  // A body whose inner denial ranges over z gaps only where the R(x,-) slice
  // is empty; a true instance elsewhere wins, T = max(T, N).
  Formula g = parse_formula("exists x. ~(exists z. (R(x,z) & G(z)))");
  Interpretation J =
      model({"a", "b"}, {{"R", {{"a", "b"}}}, {"G", {{"a"}}}});
  EXPECT_EQ(eval3_fol(g, J), Tv3::T);
  // With R empty both instances gap and so does the whole sentence.
  Interpretation K = model({"a", "b"}, {{"R", {}}, {"G", {{"a"}}}});
  EXPECT_EQ(eval3_fol(g, K), Tv3::N);
}

TEST(Eval3Fol, ConnectiveLevelVacuityUsesOpaqueLetters) {
  // ~(F(1) & ~F(1)) denies a satisfiable pattern once the predications are
  // opaque letters, so no gap; the contradiction has to sit inside one
  // conjunct to trigger it.
  Interpretation I = model({"1"}, {{"F", {{"1"}}}, {"G", {}}});
  EXPECT_EQ(eval3_fol(parse_formula("~(F(1) & ~F(1))"), I), Tv3::T);
  std::string reason;
  EXPECT_EQ(eval3_fol(parse_formula("~((F(1) & ~F(1)) & G(1))"), I, &reason),
            Tv3::N);
  EXPECT_EQ(reason, "denied conjunct (F(1) & ~F(1)) is unsatisfiable");
}

TEST(Eval3Fol, InvariantUnderBoundVariableRenaming) {
  Signature sig = {{"F", 1}, {"G", 1}};
  Formula f = parse_formula("~(exists x. (F(x) & ~G(x)))");
  Formula g = parse_formula("~(exists y. (F(y) & ~G(y)))");
  ModelEnumerator en(sig, 3);
  while (auto I = en.next()) {
    EXPECT_EQ(eval3_fol(f, *I), eval3_fol(g, *I));
  }
}

TEST(Eval3Fol, MatchesReferenceOnRandomSentences) {
  testing::Rng rng(60902);
  Signature sig = {{"F", 1}, {"G", 1}};
  for (int i = 0; i < 2500; ++i) {
    Formula f = testing::gen_sentence(rng, 4, {"F", "G"});
    Interpretation I = testing::gen_model(rng, sig, 3);
    EXPECT_EQ(eval3_fol(f, I), testing::ref_eval3_fol(f, I)) << render(f);
  }
}

TEST(Eval3Fol, GapOrAgreeWithClassical) {
  testing::Rng rng(424242);
  Signature sig = {{"F", 1}, {"G", 1}, {"H", 1}};
  for (int i = 0; i < 3000; ++i) {
    Formula f = testing::gen_sentence(rng, 4, {"F", "G", "H"});
    Interpretation I = testing::gen_model(rng, sig, 3);
    Tv3 three = eval3_fol(f, I);
    if (three != Tv3::N) {
      EXPECT_EQ(three, tv3_of_bool(eval_classical_fol(f, I))) << render(f);
    }
  }
}

TEST(Enumerator, CountsAndOrder) {
  EXPECT_EQ(ModelEnumerator({{"P", 1}}, 1).total(), 2u);
  EXPECT_EQ(ModelEnumerator({{"F", 1}, {"G", 1}}, 2).total(), 16u);
  EXPECT_EQ(ModelEnumerator({{"F", 1}, {"G", 1}, {"H", 1}}, 2).total(), 64u);
  EXPECT_EQ(ModelEnumerator({{"R", 2}}, 2).total(), 16u);

  // All-empty model first; the last predicate's digit moves fastest.
  ModelEnumerator en({{"F", 1}, {"G", 1}}, 1);
  auto m0 = en.next();
  ASSERT_TRUE(m0);
  EXPECT_EQ(m0->domain, (std::vector<std::string>{"a"}));
  EXPECT_TRUE(m0->predicates.at("F").empty());
  EXPECT_TRUE(m0->predicates.at("G").empty());
  auto m1 = en.next();
  EXPECT_TRUE(m1->predicates.at("F").empty());
  EXPECT_EQ(m1->predicates.at("G").count({"a"}), 1u);
  auto m2 = en.next();
  EXPECT_EQ(m2->predicates.at("F").count({"a"}), 1u);
  EXPECT_TRUE(m2->predicates.at("G").empty());
  auto m3 = en.next();
  EXPECT_FALSE(en.next().has_value());
  EXPECT_EQ(m3->predicates.at("F").size() + m3->predicates.at("G").size(), 2u);
}

TEST(Enumerator, TupleBitsAreLexicographic) {
  // Arity 2, size 2: tuple order (a,a), (a,b), (b,a), (b,b).
  ModelEnumerator en({{"R", 2}}, 2);
  std::vector<Interpretation> ms;
  while (auto m = en.next()) ms.push_back(*m);
  ASSERT_EQ(ms.size(), 16u);
  EXPECT_EQ(ms[1].predicates.at("R"),
            (std::set<std::vector<std::string>>{{"a", "a"}}));
  EXPECT_EQ(ms[2].predicates.at("R"),
            (std::set<std::vector<std::string>>{{"a", "b"}}));
  EXPECT_EQ(ms[8].predicates.at("R"),
            (std::set<std::vector<std::string>>{{"b", "b"}}));
  EXPECT_EQ(ms[15].predicates.at("R").size(), 4u);
}

TEST(Enumerator, ElementNamesAndCaps) {
  EXPECT_EQ(ModelEnumerator::element_name(0), "a");
  EXPECT_EQ(ModelEnumerator::element_name(25), "z");
  EXPECT_EQ(ModelEnumerator::element_name(26), "e27");
  EXPECT_THROW(ModelEnumerator({{"F", 1}}, 0), EvalError);
  // 2^30 models at size 30 with one unary predicate: over the default cap.
  EXPECT_THROW(ModelEnumerator({{"F", 1}}, 30), CapError);
  EXPECT_THROW(ModelEnumerator({{"R", 2}}, 8), CapError);  // 2^64 overflows
  EXPECT_NO_THROW(ModelEnumerator({{"F", 1}}, 24));        // exactly the cap
}

TEST(Validity, ClassicalBasics) {
  Signature sig = {{"F", 1}};
  Verdict v = check_validity({parse_formula("exists x. F(x)")},
                             parse_formula("exists x. F(x)"), sig, 4,
                             Semantics::Classical);
  EXPECT_EQ(v.value, Tv3::T);
  EXPECT_FALSE(v.countermodel.has_value());
  EXPECT_EQ(v.explanation, "no countermodel with domain size 1..4");

  // Existence does not yield universality; smallest countermodel has two
  // elements with F holding of exactly the first.
  Verdict w = check_validity({parse_formula("exists x. F(x)")},
                             parse_formula("forall x. F(x)"), sig, 4,
                             Semantics::Classical);
  EXPECT_EQ(w.value, Tv3::F);
  ASSERT_TRUE(w.countermodel.has_value());
  EXPECT_EQ(w.countermodel->domain, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(w.countermodel->predicates.at("F"),
            (std::set<std::vector<std::string>>{{"a"}}));
  EXPECT_EQ(w.explanation, "premises are all true but the conclusion is F");
}

TEST(Validity, PresupGapRefutesAndDeactivates) {
  Signature sig = {{"F", 1}, {"G", 1}};
  // With no premises the A form itself must be T everywhere; the all-empty
  // model gaps it, so validity fails there first.
  Verdict v = check_validity({}, parse_formula("forall x. (F(x) -> G(x))"),
                             sig, 4, Semantics::Presup);
  EXPECT_EQ(v.value, Tv3::F);
  ASSERT_TRUE(v.countermodel.has_value());
  EXPECT_EQ(v.countermodel->domain.size(), 1u);
  EXPECT_TRUE(v.countermodel->predicates.at("F").empty());
  EXPECT_NE(v.explanation.find("conclusion is N"), std::string::npos);
  EXPECT_NE(v.explanation.find("term F(x) is empty"), std::string::npos);

  // An N premise deactivates the argument: the A form gaps wherever F is
  // empty, so those models never count against the inference, making
  // "All F are G, therefore some F exists" presup-valid...
  Verdict w = check_validity({parse_formula("forall x. (F(x) -> G(x))")},
                             parse_formula("exists x. F(x)"), sig, 4,
                             Semantics::Presup);
  EXPECT_EQ(w.value, Tv3::T);
  // ...while classically the empty-F model refutes it outright.
  Verdict c = check_validity({parse_formula("forall x. (F(x) -> G(x))")},
                             parse_formula("exists x. F(x)"), sig, 4,
                             Semantics::Classical);
  EXPECT_EQ(c.value, Tv3::F);
  ASSERT_TRUE(c.countermodel.has_value());
  EXPECT_TRUE(c.countermodel->predicates.at("F").empty());
  EXPECT_EQ(c.countermodel->domain.size(), 1u);
}

// The unary fast path and plain enumeration must agree exactly, including
// which countermodel is reported.
TEST(Validity, FastPathMatchesBruteForce) {
  testing::Rng rng(555);
  Signature sig = {{"F", 1}, {"G", 1}};
  std::vector<std::pair<std::string, std::size_t>> preds(sig.begin(),
                                                         sig.end());
  for (int i = 0; i < 120; ++i) {
    Formula premise = testing::gen_sentence(rng, 3, {"F", "G"});
    Formula conclusion = testing::gen_sentence(rng, 3, {"F", "G"});
    for (Semantics sem : {Semantics::Classical, Semantics::Presup}) {
      Verdict got = check_validity({premise}, conclusion, sig, 3, sem);
      // Reference: scan every model in enumeration order directly.
      std::optional<Interpretation> expect_cm;
      for (std::size_t size = 1; size <= 3 && !expect_cm; ++size) {
        ModelEnumerator en(sig, size);
        while (auto I = en.next()) {
          Tv3 p = sem == Semantics::Classical
                      ? tv3_of_bool(testing::ref_classical_fol(premise, *I))
                      : testing::ref_eval3_fol(premise, *I);
          if (p != Tv3::T) continue;
          Tv3 c = sem == Semantics::Classical
                      ? tv3_of_bool(testing::ref_classical_fol(conclusion, *I))
                      : testing::ref_eval3_fol(conclusion, *I);
          if (c != Tv3::T) {
            expect_cm = *I;
            break;
          }
        }
      }
      if (expect_cm) {
        ASSERT_TRUE(got.countermodel.has_value())
            << render(premise) << " |- " << render(conclusion);
        EXPECT_EQ(got.countermodel->domain, expect_cm->domain);
        EXPECT_EQ(got.countermodel->predicates, expect_cm->predicates);
        EXPECT_NE(got.value, Tv3::T);
      } else {
        EXPECT_EQ(got.value, Tv3::T)
            << render(premise) << " |- " << render(conclusion);
      }
    }
  }
}

TEST(Validity, ZeroArityAtomsTakeTheGeneralPath) {
  Signature sig = {{"P", 0}, {"Q", 0}};
  EXPECT_EQ(check_validity({parse_formula("P")}, parse_formula("P"), sig, 2,
                           Semantics::Classical)
                .value,
            Tv3::T);
  Verdict v = check_validity({parse_formula("P")}, parse_formula("Q"), sig, 2,
                             Semantics::Classical);
  EXPECT_EQ(v.value, Tv3::F);
  ASSERT_TRUE(v.countermodel.has_value());
  EXPECT_EQ(v.countermodel->predicates.at("P").count({}), 1u);
  EXPECT_TRUE(v.countermodel->predicates.at("Q").empty());
}

TEST(Validity, InputErrors) {
  Signature sig = {{"F", 1}};
  EXPECT_THROW(check_validity({}, parse_formula("F(x)"), sig, 2,
                              Semantics::Classical),
               EvalError);
  EXPECT_THROW(check_validity({}, parse_formula("exists x. G(x)"), sig, 2,
                              Semantics::Classical),
               EvalError);
  EXPECT_THROW(check_validity({}, parse_formula("exists x. F(x)"), sig, 0,
                              Semantics::Classical),
               EvalError);
  Signature wide = {{"R", 3}};
  EXPECT_THROW(check_validity({}, parse_formula("exists x. R(x,x,x)"), wide, 8,
                              Semantics::Classical),
               CapError);
}

TEST(Semantics, Names) {
  EXPECT_EQ(to_string(Semantics::Classical), "classical");
  EXPECT_EQ(to_string(Semantics::Presup), "presup");
}

}  // namespace
}  // namespace gaplogic
