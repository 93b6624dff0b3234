#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fockcalc/json_io.hpp"
#include "fockcalc/verify.hpp"
#include "fockcalc/weyl.hpp"

namespace {

using namespace fockcalc;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long long millis() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::vector<int> parse_e_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const int e = std::stoi(item);
    if (e < 2) throw DomainError("e must be at least 2");
    out.push_back(e);
  }
  if (out.empty()) throw DomainError("empty e list");
  return out;
}

nlohmann::json command_report(const std::string& command, nlohmann::json inputs,
                              nlohmann::json result, bool pass, long long millis) {
  nlohmann::json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["result"] = std::move(result);
  j["pass"] = pass;
  j["millis"] = millis;
  return j;
}

int run_verify_parity(const std::string& format, const std::string& e_list, int max_n) {
  Timer timer;
  const auto es = parse_e_list(e_list);
  const ParitySweepResult result = sweep_parity(es, max_n);
  if (format == "json") {
    nlohmann::json detail;
    detail["blocks"] = result.blocks;
    detail["entries"] = result.entries;
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& report : result.failures) failures.push_back(to_json(report));
    detail["failures"] = failures;
    std::cout << command_report("verify parity",
                                {{"e", e_list}, {"maxN", max_n}}, detail,
                                result.pass(), timer.millis())
              << "\n";
  } else {
    std::cout << "parity: e=" << e_list << " |lambda|<=" << max_n << " blocks="
              << result.blocks << " entries=" << result.entries
              << " violations=" << (result.pass() ? 0 : result.failures.size())
              << (result.pass() ? " [PASS]" : " [FAIL]") << "\n";
  }
  return result.pass() ? kExitPass : kExitFail;
}

int run_verify_weyl(const std::string& format, const std::string& e_list, int max_n) {
  Timer timer;
  const auto es = parse_e_list(e_list);
  const WeylSweepResult identity = sweep_length_parity(es, max_n);
  const WeylSweepResult hooks = sweep_hook_moves(es, max_n);
  const bool pass = identity.pass() && hooks.pass();
  if (format == "json") {
    nlohmann::json detail;
    detail["identityChecks"] = identity.identity_checks;
    detail["hookChecks"] = hooks.hook_checks;
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : identity.violations) violations.push_back(v);
    for (const auto& v : hooks.violations) violations.push_back(v);
    detail["violations"] = violations;
    std::cout << command_report("verify weyl", {{"e", e_list}, {"maxN", max_n}},
                                detail, pass, timer.millis())
              << "\n";
  } else {
    std::cout << "weyl: e=" << e_list << " |lambda|<=" << max_n
              << " identity-checks=" << identity.identity_checks
              << " hook-checks=" << hooks.hook_checks << " violations="
              << identity.violations.size() + hooks.violations.size()
              << (pass ? " [PASS]" : " [FAIL]") << "\n";
  }
  return pass ? kExitPass : kExitFail;
}

int run_verify_mullineux(const std::string& format, const std::string& e_list,
                         int max_n) {
  Timer timer;
  const auto es = parse_e_list(e_list);
  const MullineuxSweepResult result = sweep_mullineux(es, max_n);
  if (format == "json") {
    nlohmann::json detail;
    detail["checks"] = result.checks;
    detail["violations"] = result.violations;
    std::cout << command_report("verify mullineux",
                                {{"e", e_list}, {"maxN", max_n}}, detail,
                                result.pass(), timer.millis())
              << "\n";
  } else {
    std::cout << "mullineux: e=" << e_list << " |lambda|<=" << max_n
              << " checks=" << result.checks
              << " violations=" << result.violations.size()
              << (result.pass() ? " [PASS]" : " [FAIL]") << "\n";
  }
  return result.pass() ? kExitPass : kExitFail;
}

int run_verify_monomials(const std::string& format, int e,
                         const std::vector<std::string>& core_texts) {
  Timer timer;
  std::vector<Partition> cores;
  for (const auto& text : core_texts) cores.push_back(Partition::parse(text));
  if (cores.empty())
    cores = {Partition{}, Partition({1}), Partition({2})};
  const MonomialSweepResult result = sweep_weight3_monomials(e, cores);
  if (format == "json") {
    nlohmann::json detail;
    detail["entries"] = result.entries;
    detail["violations"] = result.violations;
    nlohmann::json inputs;
    inputs["e"] = e;
    nlohmann::json jcores = nlohmann::json::array();
    for (const auto& core : cores) jcores.push_back(to_json(core));
    inputs["cores"] = jcores;
    std::cout << command_report("verify monomials3", inputs, detail, result.pass(),
                                timer.millis())
              << "\n";
  } else {
    std::cout << "monomials3: e=" << e << " cores=" << cores.size()
              << " entries=" << result.entries
              << " violations=" << result.violations.size()
              << (result.pass() ? " [PASS]" : " [FAIL]") << "\n";
  }
  return result.pass() ? kExitPass : kExitFail;
}

int run_verify_pair(const std::string& format, int e, const std::string& core_text,
                    int w, int k) {
  Timer timer;
  const Partition core = Partition::parse(core_text);
  const BlockId block{e, core, w};
  std::vector<PairDescriptor> pairs;
  for (const auto& pair : detect_pairs(block))
    if (pair.k == k) pairs.push_back(pair);
  if (pairs.empty()) throw DomainError("block admits no pair with this k");
  bool pass = true;
  nlohmann::json detail = nlohmann::json::array();
  for (const auto& pair : pairs) {
    const PairChecksResult result = run_pair_checks(pair);
    pass = pass && result.pass();
    if (format == "json") {
      nlohmann::json item;
      item["table"] = to_json(result.table);
      item["caseChecks"] = to_json(result.cases);
      item["alphaColumnOk"] = result.alpha_column_ok;
      item["alphaTildeColumnOk"] = result.alpha_tilde_column_ok;
      item["vacuumInductionOk"] = result.vacuum_induction_ok;
      item["movableBeadsOk"] = result.movable_beads_ok;
      detail.push_back(std::move(item));
    } else {
      std::cout << "pair: e=" << e << " coreB=" << core.to_text() << " coreC="
                << pair.block_c.core.to_text() << " runner=" << pair.runner
                << " table=" << (result.table.pass() ? "ok" : "MISMATCH")
                << " cases=" << (result.cases.pass() ? "ok" : "MISMATCH")
                << " columns="
                << (result.alpha_column_ok && result.alpha_tilde_column_ok
                        ? "ok"
                        : "MISMATCH")
                << " induction=" << (result.vacuum_induction_ok ? "ok" : "MISMATCH")
                << " beads=" << (result.movable_beads_ok ? "ok" : "MISMATCH")
                << (result.pass() ? " [PASS]" : " [FAIL]") << "\n";
    }
  }
  if (format == "json")
    std::cout << command_report(
                     "verify pair",
                     {{"e", e}, {"core", core_text}, {"w", w}, {"k", k}},
                     detail, pass, timer.millis())
              << "\n";
  return pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Fock space combinatorics calculator"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --format after the subcommand
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string lambda_text;
  int e_value = 2;

  auto* cmd_core = app.add_subcommand("core", "e-core, e-weight and relative sign");
  cmd_core->add_option("--e", e_value, "modulus")->required();
  cmd_core->add_option("--lambda", lambda_text, "partition, e.g. 4,2,1 or -")
      ->required();

  auto* cmd_sign = app.add_subcommand("sign", "relative e-sign");
  cmd_sign->add_option("--e", e_value, "modulus")->required();
  cmd_sign->add_option("--lambda", lambda_text, "partition")->required();

  auto* cmd_mull = app.add_subcommand("mullineux", "Mullineux image");
  cmd_mull->add_option("--e", e_value, "modulus")->required();
  cmd_mull->add_option("--lambda", lambda_text, "partition")->required();

  auto* cmd_conj = app.add_subcommand("conjugate", "conjugate partition");
  cmd_conj->add_option("--lambda", lambda_text, "partition")->required();

  std::string core_text = "-";
  int weight = 0;
  std::string out_path;
  auto* cmd_decomp = app.add_subcommand("decomp", "block decomposition matrix");
  cmd_decomp->add_option("--e", e_value, "modulus")->required();
  cmd_decomp->add_option("--core", core_text, "block core")->required();
  cmd_decomp->add_option("--weight", weight, "block weight")->required();
  cmd_decomp->add_option("--out", out_path, "write to file instead of stdout");

  auto* cmd_verify = app.add_subcommand("verify", "verification sweeps");
  cmd_verify->require_subcommand(1);
  std::string e_list = "2,3,4,5";
  int max_n = 12;
  auto* verify_parity = cmd_verify->add_subcommand("parity", "entry parity sweep");
  verify_parity->add_option("--e", e_list, "comma separated moduli");
  verify_parity->add_option("--max-n", max_n, "partition size bound");
  auto* verify_weyl =
      cmd_verify->add_subcommand("weyl", "length identities and hook moves");
  std::string weyl_e_list = "2,3,5";
  int weyl_max_n = 10;
  verify_weyl->add_option("--e", weyl_e_list, "comma separated moduli");
  verify_weyl->add_option("--max-n", weyl_max_n, "partition size bound");
  auto* verify_mull =
      cmd_verify->add_subcommand("mullineux", "involution and column identities");
  verify_mull->add_option("--e", e_list, "comma separated moduli");
  verify_mull->add_option("--max-n", max_n, "partition size bound");
  auto* verify_monomials =
      cmd_verify->add_subcommand("monomials3", "weight-3 monomial classification");
  int monomial_e = 5;
  std::vector<std::string> monomial_cores;
  verify_monomials->add_option("--e", monomial_e, "modulus");
  verify_monomials->add_option("--core", monomial_cores,
                               "block core (repeatable)");
  auto* verify_pair = cmd_verify->add_subcommand("pair", "[w:k]-pair tables");
  int pair_e = 5, pair_w = 3, pair_k = 2;
  std::string pair_core;
  verify_pair->add_option("--e", pair_e, "modulus");
  verify_pair->add_option("--w", pair_w, "block weight");
  verify_pair->add_option("--k", pair_k, "bead surplus");
  verify_pair->add_option("--core", pair_core, "upstairs block core")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_core->parsed() || cmd_sign->parsed()) {
      const Partition lambda = Partition::parse(lambda_text);
      const CoreData data = core_weight_sign(lambda, e_value);
      if (cmd_sign->parsed()) {
        if (format == "json") {
          nlohmann::json j;
          j["lambda"] = to_json(lambda);
          j["e"] = e_value;
          j["sign"] = data.sign;
          std::cout << j << "\n";
        } else {
          std::cout << (data.sign > 0 ? "+1" : "-1") << "\n";
        }
      } else if (format == "json") {
        std::cout << to_json(data) << "\n";
      } else {
        std::cout << "core: " << data.core.to_text() << "\nweight: " << data.weight
                  << "\nsign: " << (data.sign > 0 ? "+1" : "-1") << "\n";
      }
      return kExitPass;
    }
    if (cmd_mull->parsed()) {
      const Partition lambda = Partition::parse(lambda_text);
      const Partition image = mullineux(lambda, e_value);
      std::cout << (format == "json" ? to_json(image).dump() : image.to_text())
                << "\n";
      return kExitPass;
    }
    if (cmd_conj->parsed()) {
      const Partition lambda = Partition::parse(lambda_text);
      const Partition image = conjugate(lambda);
      std::cout << (format == "json" ? to_json(image).dump() : image.to_text())
                << "\n";
      return kExitPass;
    }
    if (cmd_decomp->parsed()) {
      const Partition core = Partition::parse(core_text);
      const auto matrix = block_matrix(e_value, core, weight);
      std::string payload;
      if (format == "json") {
        payload = matrix->to_json();
      } else {
        std::ostringstream table;
        for (const auto& row : matrix->rows) {
          table << row.to_text() << " :";
          for (std::size_t c = 0; c < matrix->cols.size(); ++c)
            table << " " << matrix->columns[c].coefficient(row).to_string();
          table << "\n";
        }
        payload = table.str();
      }
      if (out_path.empty()) {
        std::cout << payload;
        if (format == "json") std::cout << "\n";
      } else {
        std::ofstream out(out_path);
        if (!out) throw DomainError("cannot open output file");
        out << payload;
      }
      return kExitPass;
    }
    if (verify_parity->parsed()) return run_verify_parity(format, e_list, max_n);
    if (verify_weyl->parsed())
      return run_verify_weyl(format, weyl_e_list, weyl_max_n);
    if (verify_mull->parsed()) return run_verify_mullineux(format, e_list, max_n);
    if (verify_monomials->parsed())
      return run_verify_monomials(format, monomial_e, monomial_cores);
    if (verify_pair->parsed())
      return run_verify_pair(format, pair_e, pair_core, pair_w, pair_k);
  } catch (const DomainError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& error) {
    std::cerr << "internal error: " << error.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
