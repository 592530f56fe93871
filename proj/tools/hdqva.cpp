#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hdqva/engine.hpp"
#include "hdqva/report.hpp"
#include "hdqva/verifier.hpp"
#include "hdqva/xpoly.hpp"

using namespace hdqva;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxHlWeight = 8;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int run_hl(const std::vector<std::string>& inputs, const std::string& basis, std::optional<int> nvars, bool json) {
  std::vector<Partition> lambdas;
  for (const auto& s : inputs) {
    const auto lam = parse_partition(s);
    if (!lam) throw Usage("malformed partition '" + s + "' (expected weakly decreasing positive parts, e.g. 2,1)");
    if (weight(*lam) > kMaxHlWeight)
      throw Usage("partition " + to_string(*lam) + " has size " + std::to_string(weight(*lam)) + "; the size limit is " +
                  std::to_string(kMaxHlWeight));
    lambdas.push_back(*lam);
  }
  for (const auto& lam : lambdas) {
    const SymFuncP q = jing_Q(lam);
    if (basis == "p") {
      std::cout << (json ? hl_json_power_sums(lam, q) + "\n" : hl_text_power_sums(lam, q));
      continue;
    }
    const int n = nvars.value_or(std::max(weight(lam), 1));
    if (n < length(lam) || n > XPolynomial::kMaxVars)
      throw Usage("--nvars must be between the length of " + to_string(lam) + " and " + std::to_string(XPolynomial::kMaxVars));
    const auto coeffs = monomial_coefficients(p_to_x(q, n));
    std::cout << (json ? hl_json_monomials(lam, n, coeffs) + "\n" : hl_text_monomials(lam, n, coeffs));
  }
  return kExitPass;
}

std::pair<int, int> parse_charges(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    size_t used_a = 0, used_b = 0;
    const int a = std::stoi(s.substr(0, comma), &used_a);
    const int b = std::stoi(s.substr(comma + 1), &used_b);
    if (used_a != comma || used_b != s.size() - comma - 1) throw std::invalid_argument(s);
    if (a < 0 || b < 0 || a > kMaxCharge || b > kMaxCharge) throw std::invalid_argument(s);
    return {a, b};
  } catch (const std::logic_error&) {
    throw Usage("--charges expects a,b with 0 <= a,b <= " + std::to_string(kMaxCharge) + ", got '" + s + "'");
  }
}

int run_verify(const std::vector<std::string>& ids, CheckParams params, int hl_weight, bool json) {
  for (const auto& id : ids)
    if (id != "all" && std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end())
      throw Usage("unknown check '" + id + "'");
  const bool wants_hl = std::find(ids.begin(), ids.end(), "hl-oracle") != ids.end() ||
                        std::find(ids.begin(), ids.end(), "all") != ids.end();
  if (wants_hl && params.t_order < kOracleTOrder)
    std::cerr << "notice: hl-oracle runs at t order " << kOracleTOrder << "\n";
  const auto reports = run_checks(ids, params, hl_weight);
  bool all_passed = true;
  for (const auto& r : reports) all_passed &= r.passed;
  if (json) {
    for (const auto& r : reports) std::cout << report_json(r) << "\n";
  } else {
    std::cout << report_table(reports);
  }
  return all_passed ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall-Littlewood vertex operators and verification of braided vertex algebra identities"};
  app.require_subcommand(1);

  std::string format = "text";
  int t_order = 8, gamma_order = 3, max_degree = 9, window = 5, hl_weight = 6;
  std::string charges = "1,1";
  std::string basis = "p";
  std::optional<int> nvars;
  std::vector<std::string> mutations;
  std::vector<std::string> partitions, checks;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  };

  CLI::App* hl = app.add_subcommand("hl", "Print Hall-Littlewood Q functions from vertex operator mode products");
  hl->add_option("partitions", partitions, "Partitions such as 2,1 or \"3 1\"")->required();
  hl->add_option("--basis", basis, "p: power sums, m: monomial symmetric functions")
      ->check(CLI::IsMember({"p", "m"}))
      ->capture_default_str();
  hl->add_option("--nvars", nvars, "Number of variables for --basis m (default |lambda|)");
  add_format(hl);

  CLI::App* verify = app.add_subcommand("verify", "Run verification checks");
  verify->add_option("checks", checks, "Checks: all, " + [] {
    std::string s;
    for (const auto& id : check_ids()) s += (s.empty() ? "" : ", ") + id;
    return s;
  }())->required();
  verify->add_option("--t-order", t_order, "Truncation order in t")->check(CLI::NonNegativeNumber)->capture_default_str();
  verify->add_option("--gamma-order", gamma_order, "Truncation order in the translation parameter")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_option("--max-degree", max_degree, "Weight cap for symmetric-function coefficients")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_option("--window", window, "Exponent bound per variable")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--charges", charges, "Lattice charges a,b")->capture_default_str();
  verify->add_option("--hl-weight", hl_weight, "Largest partition size in the oracle sweep")
      ->check(CLI::Range(1, 7))
      ->capture_default_str();
  verify->add_option("--mutate", mutations, "Inject a defect (for testing the checks)")
      ->check(CLI::IsMember({"flip_braiding_sign", "drop_translation_map_in_jacobi", "perturb_D"}));
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (hl->parsed()) return run_hl(partitions, basis, nvars, format == "json");
    CheckParams p;
    p.t_order = t_order;
    p.gamma_order = gamma_order;
    p.degree_cap = max_degree;
    p.window = window;
    std::tie(p.charge_a, p.charge_b) = parse_charges(charges);
    for (const auto& m : mutations) {
      if (m == "flip_braiding_sign") p.mutations.flip_braiding_sign = true;
      if (m == "drop_translation_map_in_jacobi") p.mutations.drop_translation_map_in_jacobi = true;
      if (m == "perturb_D") p.mutations.perturb_D = true;
    }
    return run_verify(checks, p, hl_weight, format == "json");
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
