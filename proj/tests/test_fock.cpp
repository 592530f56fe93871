#include <random>

#include "doctest.h"
#include "hdqva/errors.hpp"
#include "hdqva/fock.hpp"

using namespace hdqva;

namespace {

const TSeries t = TSeries::monomial(1, 1);

FockVector random_vector(std::mt19937& rng) {
  std::uniform_int_distribution<int> charge(0, 2), coeff(-3, 3), nterms(1, 3), part(1, 3), len(0, 2);
  FockVector v;
  for (int i = nterms(rng); i > 0; --i) {
    Partition lam;
    for (int k = len(rng); k > 0; --k) lam.push_back(part(rng));
    TSeries c = TSeries::from_coeffs({Rational(coeff(rng)), Rational(coeff(rng))});
    v.add(charge(rng), SymFuncP::term(normalized(lam), c));
  }
  return v;
}

}  // namespace

TEST_CASE("D kills the vacuum") {
  CHECK(apply_D(FockVector::vacuum(), {4, false}).is_zero());
}

TEST_CASE("D p_1 = (1 + t) p_2") {
  const auto v = FockVector::of(0, SymFuncP::p(1));
  const auto d = apply_D(v, {3, false});
  CHECK(d == FockVector::of(0, SymFuncP::term({2}, TSeries::from_coeffs({Rational(1), Rational(1)}))));
}

TEST_CASE("D e^alpha = (1 - t) p_1 e^alpha, and the perturbed variant drops (1 - t)") {
  CHECK(apply_D(FockVector::lattice(1), {4, false}) == FockVector::of(1, SymFuncP::term({1}, TSeries::one_minus(1))));
  CHECK(apply_D(FockVector::lattice(1), {4, true}) == FockVector::of(1, SymFuncP::p(1)));
}

TEST_CASE("D at t = 0 is n p_{n+1}") {
  for (int n = 1; n <= 5; ++n)
    CHECK(apply_D(FockVector::of(0, SymFuncP::p(n)), {0, false}) == FockVector::of(0, SymFuncP::term({n + 1}, TSeries(n))));
}

TEST_CASE("D respects the degree cap") {
  CHECK_THROWS_AS(apply_D(FockVector::of(0, SymFuncP::p(2, 2)), {3, false}), DegreeCapExceeded);
  CHECK(apply_D(FockVector::vacuum(0), {3, false}).is_zero());
}

TEST_CASE("Leibniz rule and charge conservation on 100 random pairs") {
  std::mt19937 rng(11);
  const DOptions opt{5, false};
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = random_vector(rng), w = random_vector(rng);
    CHECK(apply_D(u * w, opt) == apply_D(u, opt) * w + u * apply_D(w, opt));
    const auto du = apply_D(u, opt);
    for (const auto& [m, f] : du.components()) CHECK_FALSE(u.component(m).is_zero());
  }
}

TEST_CASE("exp_D of the vacuum is constant") {
  const auto e = exp_D(FockVector::vacuum(), Var::g, 5, {3, false});
  CHECK(e.terms().size() == 1);
  CHECK(e.coefficient(Monomial{}) == FockVector::vacuum());
}

TEST_CASE("exp_D of e^alpha at t = 0 is the classical exponential") {
  const auto e = exp_D(FockVector::lattice(1), Var::z1, 3, {0, false});
  CHECK(e.coefficient(Monomial::of(Var::z1, 1)) == FockVector::of(1, SymFuncP::p(1)));
  const SymFuncP h2 = TSeries(Rational(1, 2)) * (SymFuncP::p(1) * SymFuncP::p(1) + SymFuncP::p(2));
  CHECK(e.coefficient(Monomial::of(Var::z1, 2)) == FockVector::of(1, h2));
  const SymFuncP p1 = SymFuncP::p(1), p2 = SymFuncP::p(2), p3 = SymFuncP::p(3);
  const SymFuncP h3 = TSeries(Rational(1, 6)) * (p1 * p1 * p1) + TSeries(Rational(1, 2)) * (p1 * p2) + TSeries(Rational(1, 3)) * p3;
  CHECK(e.coefficient(Monomial::of(Var::z1, 3)) == FockVector::of(1, h3));
}

TEST_CASE("exp_D truncation is prefix-consistent and charge preserving") {
  const DOptions opt{4, false};
  const auto a = exp_D(FockVector::lattice(2), Var::z1, 4, opt);
  const auto b = exp_D(FockVector::lattice(2), Var::z1, 5, opt);
  for (int k = 0; k <= 4; ++k) CHECK(a.coefficient(Monomial::of(Var::z1, k)) == b.coefficient(Monomial::of(Var::z1, k)));
  for (const auto& [m, v] : b.terms()) {
    CHECK(v.components().size() == 1);
    CHECK(v.components().begin()->first == 2);
  }
}

TEST_CASE("exp_D on a series agrees with exp_D on a vector") {
  const DOptions opt{3, false};
  const auto direct = exp_D(FockVector::lattice(1), Var::g, 4, opt);
  Window w = Window::zero();
  w.set(Var::g, 0, 4);
  const auto series = exp_D(FockChunk::constant(FockVector::lattice(1)), Var::g, w, opt);
  for (int k = 0; k <= 4; ++k) CHECK(series.coefficient(Monomial::of(Var::g, k)) == direct.coefficient(Monomial::of(Var::g, k)));
}
