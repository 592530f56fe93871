// Acceptance suite: one PASS/FAIL line per criterion; exit status 0 iff all pass.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "hdqva/report.hpp"
#include "hdqva/verifier.hpp"
#include "hdqva/xpoly.hpp"

using namespace hdqva;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (passed) detail << "first failure: " << what << "; ";
      passed = false;
    }
  }
  void require_report(const CheckReport& r, long long min_compared, double max_seconds) {
    require(r.passed, r.check_id + " " + report_json(r));
    require(r.compared >= min_compared, r.check_id + " compared " + std::to_string(r.compared));
    require(r.elapsed_seconds < max_seconds, r.check_id + " too slow");
    detail << r.check_id << " T=" << r.params.t_order << " compared=" << r.compared << " nonzero=" << r.nonzero << " "
           << r.elapsed_seconds << "s; ";
  }
};

const Form z1 = Form::var(Var::z1), z2 = Form::var(Var::z2), g = Form::var(Var::g);

std::vector<Partition> partitions_up_to(int max_weight) {
  std::vector<Partition> out;
  for (int w = 1; w <= max_weight; ++w)
    for (auto& lam : partitions_of(w)) out.push_back(lam);
  return out;
}

CheckParams params(int t_order, int window, int cap, int gamma = 3) {
  CheckParams p;
  p.t_order = t_order;
  p.window = window;
  p.degree_cap = cap;
  p.gamma_order = gamma;
  return p;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  int count = 0;
  for (const auto& lam : partitions_up_to(6)) {
    const int n = weight(lam);
    o.require(p_to_x(jing_Q(lam), n).truncated(kOracleTOrder) == hl_Q_oracle(lam, n).truncated(kOracleTOrder), to_string(lam));
    ++count;
  }
  o.require(p_to_x(jing_Q({}), 1) == hl_Q_oracle({}, 1), "empty partition");
  ++count;
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(s < 60, "runtime");
  o.detail << count << " partitions (29 nonempty + empty) at t^" << kOracleTOrder << ", " << s << "s";
  return o;
}

Outcome schur_degeneration() {
  Outcome o;
  int count = 0;
  for (const auto& lam : partitions_up_to(5)) {
    const int n = weight(lam);
    o.require(p_to_x(jing_Q(lam).at_t(0), n) == schur_bialternant(lam, n), to_string(lam));
    ++count;
  }
  o.detail << count << " partitions";
  return o;
}

Outcome vanishing_at_one() {
  Outcome o;
  int count = 0;
  for (const auto& lam : partitions_up_to(6)) {
    o.require(jing_Q(lam).at_t(1).is_zero(), to_string(lam));
    ++count;
  }
  o.detail << count << " partitions";
  return o;
}

Outcome braided_commutativity() {
  Outcome o;
  o.require_report(check_braided_commutativity(params(4, 6, 8)), 100, 60);
  return o;
}

Outcome translation_covariance() {
  Outcome o;
  o.require_report(check_translation_covariance(params(3, 5, 9, 3)), 1, 120);
  // S^gamma * r(z1,z2) = r(z1+g, z2+g) as expanded series at T = G = 6
  const int T = 6;
  const RegionOrder region{Var::z1, Var::z2, Var::g};
  const FactorProduct s = S_gamma(1, 1).scalar;
  const FactorProduct r = two_point(z1, z2);
  const FactorProduct shifted = two_point(z1 + g, z2 + g);
  Window w = Window::symmetric_box({Var::z1, Var::z2}, 6);
  w.set(Var::g, 0, 6);
  const ScalarChunk lhs = laurent_mul(expand(s, region, required_window(w, expansion_support(r, region, T)), T),
                                      expand(r, region, required_window(w, expansion_support(s, region, T)), T), w);
  const ScalarChunk rhs = expand(shifted, region, w, T);
  long long compared = 0;
  w.for_each([&](const Monomial& m) {
    const auto value = [&](const ScalarChunk& c) { return c.support().contains(m) ? c.coefficient(m) : TSeries(); };
    o.require(value(lhs) == value(rhs), "scalar identity at " + m.to_string());
    ++compared;
  });
  o.require(s == shifted * r.inverse(), "scalar identity as factor products");
  o.detail << "scalar identity compared=" << compared << " nonzero=" << rhs.size();
  return o;
}

Outcome braided_jacobi() {
  Outcome o;
  o.require_report(check_braided_jacobi(params(3, 5, 9)), 200, 300);
  o.require_report(check_braided_jacobi(params(0, 5, 9)), 200, 300);
  return o;
}

Outcome vacuum_dictionary() {
  Outcome o;
  o.require_report(check_vacuum(params(4, 6, 9)), 7, 60);
  return o;
}

Outcome expansion_dictionary() {
  Outcome o;
  o.require_report(check_expansion_consistency(params(3, 5, 9)), 1, 120);
  return o;
}

Outcome infrastructure() {
  Outcome o;
  // delta(z1, z2) is the difference of the two expansions of 1/(z1 - z2)
  const Window w = Window::symmetric_box({Var::z1, Var::z2}, 6);
  const FactorProduct pole(z1 - z2, -1);
  const ScalarChunk d = formal_delta(z1, z2, RegionOrder{Var::z1, Var::z2}, w, 0);
  const ScalarChunk big = expand(pole, RegionOrder{Var::z1, Var::z2}, w, 0);
  const ScalarChunk small = expand(pole, RegionOrder{Var::z2, Var::z1}, w, 0);
  int nonzero = 0;
  w.for_each([&](const Monomial& m) {
    const auto value = [&](const ScalarChunk& c) { return c.support().contains(m) ? c.coefficient(m) : TSeries(); };
    o.require(value(d) == value(big) - value(small), "delta at " + m.to_string());
    nonzero += !value(d).is_zero();
  });
  o.require(nonzero == 12, "delta support size");

  // polynomials expand identically in every region
  const FactorProduct poly =
      FactorProduct(z1 - z2, 3) * FactorProduct(z1 + TSeries::monomial(1, 1) * z2, 2) * FactorProduct(z2, 1);
  const Window box = Window::symmetric_box({Var::z1, Var::z2}, 8);
  const ScalarChunk p12 = expand(poly, RegionOrder{Var::z1, Var::z2}, box, 5);
  const ScalarChunk p21 = expand(poly, RegionOrder{Var::z2, Var::z1}, box, 5);
  box.for_each([&](const Monomial& m) { o.require(p12.coefficient(m) == p21.coefficient(m), "region at " + m.to_string()); });

  // ts_invert multiplies back to 1
  std::mt19937 rng(20261015);
  std::uniform_int_distribution<int> coef(-9, 9), den(1, 7);
  for (int trial = 0; trial < 100; ++trial) {
    const int order = 1 + trial % 12;
    std::vector<Rational> cs{Rational(coef(rng) == 0 ? 1 : coef(rng), static_cast<unsigned long>(den(rng)))};
    if (cs[0] == 0) cs[0] = 1;
    for (int k = 1; k <= order; ++k) cs.push_back(Rational(coef(rng), static_cast<unsigned long>(den(rng))));
    const TSeries u = TSeries::from_coeffs(cs, order);
    o.require(u * ts_invert(u, order) == TSeries(1).truncated(order), "ts_invert trial " + std::to_string(trial));
  }

  // lowering T gives the t-prefix of the higher-order result
  const CheckParams hi = params(4, 6, 8), lo = params(2, 6, 8);
  const Window cw = comparison_window(hi, {Var::z1, Var::z2}, 1);
  const FockChunk lhs_hi = commutativity_lhs(hi, cw), lhs_lo = commutativity_lhs(lo, cw);
  const FockChunk rhs_hi = commutativity_rhs(hi, cw), rhs_lo = commutativity_rhs(lo, cw);
  long long prefix_checked = 0;
  cw.for_each([&](const Monomial& m) {
    const auto value = [&](const FockChunk& c) { return c.support().contains(m) ? c.coefficient(m) : FockVector(); };
    o.require(value(lhs_hi).truncated(2) == value(lhs_lo), "prefix lhs at " + m.to_string());
    o.require(value(rhs_hi).truncated(2) == value(rhs_lo), "prefix rhs at " + m.to_string());
    ++prefix_checked;
  });
  o.require(check_braided_commutativity(lo).passed, "commutativity at T=2");
  o.detail << "delta nonzero=" << nonzero << ", 100 inversions, prefix monomials=" << prefix_checked;
  return o;
}

Outcome mutation_sensitivity() {
  Outcome o;
  auto expect_failure = [&](const std::string& name, const CheckReport& r) {
    o.require(!r.passed && r.first_mismatch.has_value() && !r.error.has_value(), name + " " + report_json(r));
    if (r.first_mismatch) o.detail << name << " -> " << r.check_id << " fails at " << r.first_mismatch->where << "; ";
  };
  CheckParams p = params(4, 6, 8);
  p.mutations.flip_braiding_sign = true;
  expect_failure("flip_braiding_sign", check_braided_commutativity(p));
  p = params(3, 5, 9);
  p.mutations.drop_translation_map_in_jacobi = true;
  expect_failure("drop_translation_map_in_jacobi", check_braided_jacobi(p));
  p = params(4, 6, 9);
  p.mutations.perturb_D = true;
  expect_failure("perturb_D", check_vacuum(p));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC-1", oracle_equivalence},       {"AC-2", schur_degeneration},      {"AC-3", vanishing_at_one},
      {"AC-4", braided_commutativity},    {"AC-5", translation_covariance},  {"AC-6", braided_jacobi},
      {"AC-7", vacuum_dictionary},        {"AC-8", expansion_dictionary},    {"AC-9", infrastructure},
      {"AC-10", mutation_sensitivity},
  };
  bool all = true;
  for (const auto& [id, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail << "exception: " << e.what();
    }
    all &= o.passed;
    std::cout << id << " " << (o.passed ? "PASS" : "FAIL") << " " << o.detail.str() << std::endl;
  }
  return all ? 0 : 1;
}
