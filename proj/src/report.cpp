#include "kampen/report.hpp"

namespace kampen {

nlohmann::json model_report(const Model& m) {
  std::size_t equalities = 0;
  for (const auto& r : m.rows())
    if (r.rel == Relation::Equal) ++equalities;
  return {
      {"complex", m.info.complex},
      {"preset", m.info.preset},
      {"m", m.info.m},
      {"symmetry_reduction", m.info.symmetry_reduction},
      {"variables", m.variables().size()},
      {"rows", m.rows().size()},
      {"constraints", m.constraints()},
      {"equality_rows", equalities},
      {"lambda_cells", m.info.lambda_cells},
      {"lambda_variables", m.info.lambda_variables},
      {"auxiliary_variables", m.info.auxiliary_variables},
  };
}

nlohmann::json verdict_report(const Verdict& v) {
  nlohmann::json out;
  out["verdict"] = to_string(v.status);
  if (v.status == Status::Feasible) out["assignment"] = v.assignment;
  const auto& s = v.stats;
  out["stats"] = {
      {"nodes", s.nodes},
      {"seconds", s.seconds},
      {"reduced_variables", s.reduced_variables},
      {"reduced_rows", s.reduced_rows},
      {"presolve",
       {{"eliminated", s.presolve.eliminated},
        {"fixed", s.presolve.fixed},
        {"rows_dropped", s.presolve.rows_dropped},
        {"gcd_tightened", s.presolve.gcd_tightened}}},
  };
  if (!s.infeasibility_reason.empty()) out["stats"]["infeasibility_reason"] = s.infeasibility_reason;
  return out;
}

nlohmann::json oracle_report(const OracleReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations)
    violations.push_back(
        {{"check", v.check}, {"where", v.where}, {"expected", v.expected}, {"actual", v.actual}});
  return {
      {"suite", r.suite},
      {"seed", r.seed},
      {"trials", r.trials},
      {"resamples", r.resamples},
      {"checks", r.checks},
      {"ok", r.ok()},
      {"violations", violations},
  };
}

}  // namespace kampen
