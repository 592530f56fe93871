#include "doctest.h"
#include "hdqva/engine.hpp"
#include "hdqva/errors.hpp"
#include "hdqva/xpoly.hpp"

using namespace hdqva;

namespace {

const TSeries t = TSeries::monomial(1, 1);
const Form z1 = Form::var(Var::z1), z2 = Form::var(Var::z2), g = Form::var(Var::g);

FockVector fv(int charge, const SymFuncP& f) { return FockVector::of(charge, f); }

Window box2(int w, int deg_hi) {
  Window b = Window::symmetric_box({Var::z1, Var::z2}, w);
  b.set_degree(-kInf, deg_hi);
  return b;
}

size_t compare_on(const FockChunk& lhs, const FockChunk& rhs, const Window& w) {
  size_t compared = 0;
  w.for_each([&](const Monomial& m) {
    INFO(m.to_string());
    CHECK(lhs.coefficient(m) == rhs.coefficient(m));
    ++compared;
  });
  return compared;
}

}  // namespace

TEST_CASE("creation coefficients") {
  CHECK(eplus_coefficient(1, 0) == SymFuncP::constant(TSeries(1)));
  CHECK(eplus_coefficient(1, 1) == TSeries::one_minus(1) * SymFuncP::p(1));
  const auto q2 = eplus_coefficient(1, 2);
  const TSeries half(Rational(1, 2));
  CHECK(q2.coefficient({1, 1}) == half * TSeries::one_minus(1) * TSeries::one_minus(1));
  CHECK(q2.coefficient({2}) == half * TSeries::one_minus(2));
  CHECK(eplus_coefficient(2, 1) == TSeries(2) * TSeries::one_minus(1) * SymFuncP::p(1));
  // at t = 0 with a = 1 these are complete homogeneous functions: h2 = (p1^2 + p2)/2
  CHECK(q2.at_t(0).coefficient({2}) == half);
}

TEST_CASE("annihilation shifts power sums") {
  const auto p1 = SymFuncP::p(1);
  const FockChunk r = Eminus_apply(1, Var::z1, fv(0, p1 * p1));
  CHECK(r.coefficient(Monomial::of(Var::z1, 0)) == fv(0, p1 * p1));
  CHECK(r.coefficient(Monomial::of(Var::z1, -1)) == fv(0, TSeries(-2) * p1));
  CHECK(r.coefficient(Monomial::of(Var::z1, -2)) == FockVector::vacuum());
  CHECK(r.size() == 3);
  const FockChunk r2 = Eminus_apply(2, Var::z2, fv(1, SymFuncP::p(2)));
  CHECK(r2.coefficient(Monomial::of(Var::z2, -2)) == fv(1, SymFuncP::constant(TSeries(-2))));
  CHECK(Eminus_apply(1, Var::z1, FockVector::vacuum()).size() == 1);
}

TEST_CASE("vertex operator on lattice vectors") {
  const EngineOptions opt{6, 8};
  Window w = Window::zero();
  w.set(Var::z1, -3, 4);
  const auto y0 = Y_apply(1, Var::z1, FockVector::vacuum(), w, opt);
  CHECK(y0.support().lo_of(Var::z1) == 0);
  CHECK(y0.coefficient(Monomial::of(Var::z1, -1)).is_zero());
  CHECK(y0.coefficient(Monomial{}) == FockVector::lattice(1));
  CHECK(y0.coefficient(Monomial::of(Var::z1, 1)) == fv(1, TSeries::one_minus(1) * SymFuncP::p(1)));

  const auto y1 = Y_apply(1, Var::z1, FockVector::lattice(1), w, opt);
  CHECK(y1.coefficient(Monomial{}).is_zero());
  CHECK(y1.coefficient(Monomial::of(Var::z1, 1)) == FockVector::lattice(2));

  // p1 e^alpha: annihilation gives p1 - z^{-1}
  const auto y2 = Y_apply(1, Var::z1, fv(1, SymFuncP::p(1)), w, opt);
  CHECK(y2.coefficient(Monomial{}) == -FockVector::lattice(2));
  CHECK(y2.coefficient(Monomial::of(Var::z1, 1)) == fv(2, t * SymFuncP::p(1)));

  CHECK_THROWS_AS(Y_apply(4, Var::z1, FockVector::vacuum(), w, opt), UnsupportedCharge);
  Window deep = Window::zero();
  deep.set(Var::z1, 0, 12);
  CHECK_THROWS_AS(Y_apply(1, Var::z1, FockVector::vacuum(), deep, opt), DegreeCapExceeded);
}

TEST_CASE("creation series") {
  const EngineOptions opt{6, 8};
  const auto e = Eplus_apply(1, Var::z2, FockVector::lattice(1), 3, opt);
  CHECK(e.coefficient(Monomial::of(Var::z2, 1)) == fv(1, TSeries::one_minus(1) * SymFuncP::p(1)));
  CHECK_THROWS_AS(e.coefficient(Monomial::of(Var::z2, 4)), OutsideWindow);
}

TEST_CASE("mode products reproduce Hall-Littlewood Q") {
  for (int w = 1; w <= 6; ++w)
    for (const auto& lam : partitions_of(w)) {
      INFO(to_string(lam));
      const int n = std::min(w, 6);
      CHECK(p_to_x(jing_Q(lam), n) == hl_Q_oracle(lam, n));
    }
  CHECK(jing_Q({}) == SymFuncP::constant(TSeries(1)));
}

TEST_CASE("braiding and translation scalars are ratios of two-point prefactors") {
  const auto swap = Substitution::swap(Var::z1, Var::z2);
  for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 3}}) {
    INFO(a << "," << b);
    const FactorProduct r12 = two_point(z1, z2).pow(a * b), r21 = two_point(z2, z1).pow(a * b);
    CHECK(S_tau(a, b).scalar.substitute(swap) == r12 * r21.inverse());
    CHECK(S_tau(a, b).scalar * S_tau(b, a).scalar.substitute(swap) == FactorProduct());
    CHECK(S_gamma(a, b).scalar == two_point(z1 + g, z2 + g).pow(a * b) * r12.inverse());
  }
  CHECK_THROWS_AS(S_tau(4, 1), UnsupportedCharge);
}

TEST_CASE("closed two-point function matches the operator product") {
  const EngineOptions opt{4, 8};
  const RegionOrder region{Var::z1, Var::z2};
  const Window w = box2(4, opt.degree_cap + 1);
  const auto closed = X2_closed(1, 1, region, w, opt);
  const auto product = operator_product(1, Var::z1, 1, Var::z2, 0, w, opt);
  CHECK(compare_on(closed.chunk, product.chunk, w) > 40);
  CHECK(closed.chunk.coefficient(Monomial::of(1, 0)) == FockVector::lattice(2));
  CHECK(closed.chunk.coefficient(Monomial::of(0, 1)) == -(TSeries::one_minus(1) * FockVector::lattice(2)));
  CHECK(closed.provenance == Provenance::closed_form);
}

TEST_CASE("three-point closed form matches the operator product on a lattice vector") {
  const EngineOptions opt{3, 7};
  const RegionOrder region{Var::z1, Var::z2};
  const Window w = box2(3, opt.degree_cap + 3);
  const auto closed = expand_closed(X3_form(1, 1, 1).substitute(Substitution{{Var::z3, Form()}}), region, w, opt);
  const auto product = operator_product(1, Var::z1, 1, Var::z2, 1, w, opt);
  CHECK(compare_on(closed, product.chunk, w) > 30);
}

TEST_CASE("substitution requires a closed form") {
  const EngineOptions opt{3, 6};
  const RegionOrder region{Var::z1, Var::z2};
  const Window w = box2(2, opt.degree_cap + 1);
  const auto product = operator_product(1, Var::z1, 1, Var::z2, 0, w, opt);
  CHECK_THROWS_AS(shift_substitute(product, Substitution::swap(Var::z1, Var::z2), region, w, opt), NotClosedForm);
  const auto closed = X2_closed(1, 1, region, w, opt);
  const auto swapped = shift_substitute(closed, Substitution::swap(Var::z1, Var::z2), RegionOrder{Var::z2, Var::z1}, w, opt);
  CHECK(swapped.provenance == Provenance::substitution);
  CHECK(swapped.chunk.coefficient(Monomial::of(0, 1)) == FockVector::lattice(2));
}

TEST_CASE("projection of windows") {
  Window w = box2(3, 5);
  const Window p = project_out(w, Var::z1);
  CHECK(p.lo_of(Var::z1) == 0);
  CHECK(p.hi_of(Var::z1) == 0);
  CHECK(p.deg_hi == 8);
}
