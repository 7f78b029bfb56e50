#include "gaplogic/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace gaplogic {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw EvalError(std::string("invalid ") + what + " JSON: " + e.what());
  }
}

std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) {
    throw EvalError(std::string("cannot open ") + what + " file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json model_json(const Interpretation& I) {
  json j;
  j["domain"] = I.domain;
  json preds = json::object();
  for (const auto& [name, ext] : I.predicates) {
    json tuples = json::array();
    for (const auto& tuple : ext) tuples.push_back(tuple);
    preds[name] = std::move(tuples);
  }
  j["predicates"] = std::move(preds);
  return j;
}

json row_json(const TableRow3& row) {
  json j;
  j["valuation"] = row.valuation;
  j["value"] = to_string(row.value);
  return j;
}

}  // namespace

Interpretation parse_model_json(const std::string& text) {
  const json j = parse_or_throw(text, "model");
  if (!j.is_object()) throw EvalError("model JSON must be an object");
  if (!j.contains("domain") || !j["domain"].is_array()) {
    throw EvalError("model JSON needs a \"domain\" array");
  }
  Interpretation I;
  std::set<std::string> seen;
  for (const json& el : j["domain"]) {
    if (!el.is_string() || el.get<std::string>().empty()) {
      throw EvalError("domain elements must be nonempty strings");
    }
    const std::string name = el.get<std::string>();
    if (!seen.insert(name).second) {
      throw EvalError("domain element '" + name + "' appears twice");
    }
    I.domain.push_back(name);
  }
  if (I.domain.empty()) throw EvalError("the domain must be nonempty");

  if (j.contains("predicates")) {
    if (!j["predicates"].is_object()) {
      throw EvalError("\"predicates\" must map names to tuple lists");
    }
    for (const auto& [name, tuples] : j["predicates"].items()) {
      if (!tuples.is_array()) {
        throw EvalError("extension of '" + name + "' must be an array");
      }
      std::set<std::vector<std::string>> ext;
      std::size_t arity = 0;
      bool first = true;
      for (const json& tj : tuples) {
        if (!tj.is_array()) {
          throw EvalError("tuples of '" + name +
                          "' must be arrays of domain elements");
        }
        std::vector<std::string> tuple;
        for (const json& el : tj) {
          if (!el.is_string() || !seen.count(el.get<std::string>())) {
            throw EvalError("tuple element " + el.dump() + " of '" + name +
                            "' is not in the domain");
          }
          tuple.push_back(el.get<std::string>());
        }
        if (first) {
          arity = tuple.size();
          first = false;
        } else if (tuple.size() != arity) {
          throw EvalError("extension of '" + name + "' mixes tuple sizes");
        }
        ext.insert(std::move(tuple));
      }
      I.predicates[name] = std::move(ext);
    }
  }
  return I;
}

Interpretation load_model_file(const std::string& path) {
  return parse_model_json(read_file(path, "model"));
}

ToySystem parse_system_json(const std::string& text) {
  const json j = parse_or_throw(text, "system");
  if (!j.is_object() || !j.contains("axioms") || !j["axioms"].is_array()) {
    throw EvalError("system JSON needs an \"axioms\" array");
  }
  ToySystem sys;
  std::size_t index = 0;
  for (const json& aj : j["axioms"]) {
    ++index;
    if (!aj.is_string()) {
      throw EvalError("axioms must be formula strings");
    }
    Formula ax = [&] {
      try {
        return parse_formula(aj.get<std::string>());
      } catch (const ParseError& e) {
        throw ParseError("axiom " + std::to_string(index) + ": " + e.what(),
                         e.position());
      }
    }();
    if (!free_variables(ax).empty()) {
      throw EvalError("axiom " + std::to_string(index) + " must be closed: " +
                      render(ax));
    }
    sys.axioms.push_back(std::move(ax));
  }
  return sys;
}

ToySystem load_system_file(const std::string& path) {
  return parse_system_json(read_file(path, "system"));
}

std::string model_to_json(const Interpretation& I) {
  return model_json(I).dump();
}

std::string taut_report_to_json(const Formula& f, bool classical_tautology,
                                bool truth_relevant,
                                const std::vector<TableRow3>& rows) {
  json j;
  j["formula"] = render(f);
  j["canonical"] = render(canonicalize(f));
  j["classical_tautology"] = classical_tautology;
  j["truth_relevant_tautology"] = truth_relevant;
  json rj = json::array();
  for (const TableRow3& row : rows) rj.push_back(row_json(row));
  j["rows"] = std::move(rj);
  return j.dump();
}

std::string truth_table_to_json(const Formula& f,
                                const std::vector<TableRow3>& rows) {
  json j;
  j["formula"] = render(f);
  j["canonical"] = render(canonicalize(f));
  json rj = json::array();
  for (const TableRow3& row : rows) rj.push_back(row_json(row));
  j["rows"] = std::move(rj);
  return j.dump();
}

std::string fol_verdict_to_json(const Formula& f, Semantics semantics,
                                Tv3 value, const std::string& gap_reason) {
  json j;
  j["formula"] = render(f);
  j["semantics"] = to_string(semantics);
  j["value"] = to_string(value);
  j["gap_reason"] = gap_reason;
  return j.dump();
}

std::string square_report_to_json(Scheme scheme, int max_domain,
                                  const std::vector<LawReport>& laws) {
  json j;
  j["scheme"] = to_string(scheme);
  j["max_domain"] = max_domain;
  json lj = json::array();
  for (const LawReport& law : laws) {
    json e;
    e["law"] = law.law;
    e["holds"] = law.holds;
    e["detail"] = law.detail;
    e["countermodel"] =
        law.countermodel ? model_json(*law.countermodel) : json();
    lj.push_back(std::move(e));
  }
  j["laws"] = std::move(lj);
  return j.dump();
}

std::string mood_audit_to_json(const MoodAudit& audit) {
  json j;
  j["scheme"] = to_string(audit.scheme);
  j["max_domain"] = audit.max_domain;
  j["valid"] = audit.valid;
  j["valid_count"] = audit.valid.size();
  j["missing_traditional"] = audit.missing_traditional;
  j["extra_traditional"] = audit.extra_traditional;
  j["missing_classical"] = audit.missing_classical;
  j["extra_classical"] = audit.extra_classical;
  json mj = json::array();
  for (const MoodVerdict& v : audit.verdicts) {
    json e;
    e["code"] = v.mood.code();
    e["name"] = v.name;
    e["valid"] = v.valid;
    e["traditional"] = v.traditional;
    e["classical"] = v.classical;
    e["countermodel"] = v.countermodel ? model_json(*v.countermodel) : json();
    mj.push_back(std::move(e));
  }
  j["moods"] = std::move(mj);
  return j.dump();
}

std::string fixed_point_to_json(const FixedPoint& fp,
                                std::size_t closure_size) {
  json j;
  j["u"] = render(fp.template_formula);
  j["k"] = fp.template_code.get_str();
  j["g"] = render(fp.sentence);
  j["g_code"] = fp.sentence_code.get_str();
  j["h"] = render(fp.unprovability_claim);
  j["j"] = render(fp.equivalence);
  j["closure_size"] = closure_size;
  j["verified"] = true;  // build_fixed_point throws otherwise
  return j.dump();
}

std::string unroll_report_to_json(const UnrollReport& report) {
  json j;
  j["overall"] = to_string(report.overall);
  j["as_written_classical"] = to_string(report.as_written_classical);
  j["sentence_provable"] = report.sentence_provable;
  json ij = json::array();
  for (const InstanceReport& r : report.instances) {
    json e;
    e["n"] = r.n.get_str();
    e["verdict"] = to_string(r.verdict);
    e["prf_term_empty"] = r.prf_term_empty;
    e["diag_term_empty"] = r.diag_term_empty;
    e["direction"] = r.direction;
    ij.push_back(std::move(e));
  }
  j["instances"] = std::move(ij);
  return j.dump();
}

std::string equivalence_report_to_json(const EquivalenceReport& report) {
  json j;
  j["gap"] = {{"g", to_string(report.g_gap)},
              {"h", to_string(report.h_gap)},
              {"j", to_string(report.j_gap)}};
  j["classical"] = {{"g", to_string(report.g_classical)},
                    {"h", to_string(report.h_classical)},
                    {"j", to_string(report.j_classical)}};
  j["note"] = report.note;
  return j.dump();
}

}  // namespace gaplogic
