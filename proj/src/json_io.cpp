#include "fockcalc/json_io.hpp"

namespace fockcalc {

nlohmann::json to_json(const Partition& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (int part : p.parts()) arr.push_back(part);
  return arr;
}

nlohmann::json to_json(const Laurent& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : p.terms()) {
    if (c > std::numeric_limits<std::int64_t>::max() ||
        c < std::numeric_limits<std::int64_t>::min())
      throw DomainError("coefficient too large for the JSON pair form");
    arr.push_back(nlohmann::json::array({k, static_cast<std::int64_t>(c)}));
  }
  return arr;
}

nlohmann::json to_json(const FockVector& x) {
  nlohmann::json arr = nlohmann::json::array();
  const auto& terms = x.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    nlohmann::json term;
    term["partition"] = to_json(it->first);
    term["coeff"] = to_json(it->second);
    arr.push_back(std::move(term));
  }
  return arr;
}

nlohmann::json to_json(const CoreData& data) {
  nlohmann::json j;
  j["core"] = to_json(data.core);
  j["weight"] = data.weight;
  j["sign"] = data.sign;
  return j;
}

nlohmann::json to_json(const LengthParityReport& report) {
  nlohmann::json j;
  j["lambda"] = to_json(report.lambda);
  j["e"] = report.e;
  j["n"] = report.n;
  j["lhsParity"] = report.lhs_parity;
  j["rhsParity"] = report.rhs_parity;
  j["weight"] = report.weight;
  j["coreLength"] = report.core_length;
  j["sign"] = report.sign;
  j["pass"] = report.pass;
  return j;
}

nlohmann::json to_json(const ParityBlockReport& report) {
  nlohmann::json j;
  j["e"] = report.e;
  j["core"] = to_json(report.core);
  j["weight"] = report.weight;
  j["entriesChecked"] = report.entries_checked;
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& violation : report.violations) {
    nlohmann::json item;
    item["row"] = to_json(violation.row);
    item["col"] = to_json(violation.col);
    item["value"] = violation.value.to_string();
    item["rowSign"] = violation.row_sign;
    item["colSign"] = violation.col_sign;
    violations.push_back(std::move(item));
  }
  j["violations"] = violations;
  j["pass"] = report.pass();
  return j;
}

nlohmann::json to_json(const PairDescriptor& pair) {
  nlohmann::json j;
  j["e"] = pair.block_b.e;
  j["weight"] = pair.block_b.weight;
  j["coreB"] = to_json(pair.block_b.core);
  j["coreC"] = to_json(pair.block_c.core);
  j["runner"] = pair.runner;
  j["beadCount"] = pair.bead_count;
  j["k"] = pair.k;
  return j;
}

nlohmann::json to_json(const PairTableReport& report) {
  nlohmann::json j;
  j["pair"] = to_json(report.pair);
  nlohmann::json exceptionals;
  exceptionals["alpha"] = to_json(report.exceptionals.upstairs.alpha);
  exceptionals["beta"] = to_json(report.exceptionals.upstairs.beta);
  exceptionals["gamma"] = to_json(report.exceptionals.upstairs.gamma);
  exceptionals["delta"] = to_json(report.exceptionals.upstairs.delta);
  exceptionals["alphaTilde"] = to_json(report.exceptionals.downstairs.alpha);
  exceptionals["betaTilde"] = to_json(report.exceptionals.downstairs.beta);
  exceptionals["gammaTilde"] = to_json(report.exceptionals.downstairs.gamma);
  exceptionals["deltaTilde"] = to_json(report.exceptionals.downstairs.delta);
  exceptionals["alphaCheck"] = to_json(report.exceptionals.alpha_check);
  j["exceptionals"] = exceptionals;
  nlohmann::json table = nlohmann::json::array();
  for (const auto& row : report.table) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const auto& value : row) jrow.push_back(value.to_string());
    table.push_back(std::move(jrow));
  }
  j["table"] = table;
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& mismatch : report.mismatches) {
    nlohmann::json item;
    item["row"] = mismatch.row;
    item["col"] = mismatch.col;
    item["expected"] = mismatch.expected.to_string();
    item["computed"] = mismatch.computed.to_string();
    mismatches.push_back(std::move(item));
  }
  j["mismatches"] = mismatches;
  j["pass"] = report.pass();
  return j;
}

nlohmann::json to_json(const CaseTableReport& report) {
  nlohmann::json j;
  j["pair"] = to_json(report.pair);
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& check : report.checks) {
    nlohmann::json item;
    item["lambda"] = to_json(check.lambda);
    item["lambdaTilde"] = to_json(check.lambda_tilde);
    nlohmann::json tuple = nlohmann::json::array();
    for (const auto& value : check.tuple) tuple.push_back(value.to_string());
    item["tuple"] = tuple;
    item["matchedRow"] =
        check.matched_row ? nlohmann::json(*check.matched_row) : nlohmann::json();
    if (check.induction_ok) item["inductionOk"] = *check.induction_ok;
    item["relevant"] = check.relevant;
    checks.push_back(std::move(item));
  }
  j["caseChecks"] = checks;
  j["pass"] = report.pass();
  return j;
}

}  // namespace fockcalc
