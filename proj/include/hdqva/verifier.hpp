#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hdqva/engine.hpp"

namespace hdqva {

/// Deliberate defects used to show the checks are not vacuous.
struct Mutations {
  bool flip_braiding_sign = false;
  bool drop_translation_map_in_jacobi = false;
  bool perturb_D = false;
};

struct CheckParams {
  int t_order = 8;
  int gamma_order = 3;
  int degree_cap = 9;
  int window = 5;
  int charge_a = 1;
  int charge_b = 1;
  Mutations mutations;

  EngineOptions engine() const { return {t_order, degree_cap}; }
  DOptions d_options() const { return {t_order, mutations.perturb_D}; }
};

struct Mismatch {
  std::string where;  // comparison stage and monomial
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string check_id;
  CheckParams params;
  long long compared = 0;
  /// Compared monomials where at least one side is nonzero.
  long long nonzero = 0;
  bool passed = false;
  std::optional<Mismatch> first_mismatch;
  /// Set when the check could not run (window, cap or input errors).
  std::optional<std::string> error;
  double elapsed_seconds = 0;
};

CheckReport check_vacuum(const CheckParams& p);
CheckReport check_braided_commutativity(const CheckParams& p);
CheckReport check_translation_covariance(const CheckParams& p);
CheckReport check_expansion_consistency(const CheckParams& p);
CheckReport check_braided_jacobi(const CheckParams& p);
CheckReport check_classical_limit(const CheckParams& p);
/// Partitions of weight 1..max_weight against the polynomial oracle (t order raised to >= 24).
CheckReport check_hl_against_oracle(int max_weight, const CheckParams& p);

/// Smallest t order used for oracle comparisons.
inline constexpr int kOracleTOrder = 24;

/// Check ids accepted by run_checks, in report order.
const std::vector<std::string>& check_ids();
/// Run the named checks (or all for "all"); reports sorted by check_id.
std::vector<CheckReport> run_checks(const std::vector<std::string>& ids, const CheckParams& p, int hl_max_weight = 6);

// Pieces of the checks exposed for tests.

/// Left side of braided commutativity: X(a,b) expanded for |z1| > |z2|.
FockChunk commutativity_lhs(const CheckParams& p, const Window& w);
/// Right side: braiding scalar times the swapped two-point function.
FockChunk commutativity_rhs(const CheckParams& p, const Window& w);
/// Comparison window |e| <= p.window in the listed variables with the weight slab for `prefactor_degree`.
Window comparison_window(const CheckParams& p, std::initializer_list<Var> vars, int prefactor_degree);

}  // namespace hdqva
