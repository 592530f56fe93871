#include <algorithm>

#include "doctest.h"
#include "hdqva/errors.hpp"
#include "hdqva/xpoly.hpp"

using namespace hdqva;

namespace {

const TSeries t = TSeries::monomial(1, 1);
TSeries one_minus_t(int k) { return TSeries::one_minus(k); }

XPolynomial x(int n, int i) { return XPolynomial::variable(n, i); }
XPolynomial c(int n, const TSeries& v) { return XPolynomial::constant(n, v); }

// Monomial symmetric polynomial m_mu(x_1..x_n) by brute force over distinct rearrangements.
XPolynomial monomial_symmetric(const Partition& mu, int n) {
  std::vector<int> e(static_cast<size_t>(n), 0);
  for (size_t i = 0; i < mu.size(); ++i) e[i] = mu[i];
  std::sort(e.begin(), e.end());
  XPolynomial out(n);
  do {
    XPolynomial::Exponents ex{};
    for (int i = 0; i < n; ++i) ex[static_cast<size_t>(i)] = static_cast<std::uint8_t>(e[static_cast<size_t>(i)]);
    out.add_term(ex, TSeries(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

}  // namespace

TEST_CASE("partition enumeration and helpers") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(4).front() == Partition{4});
  CHECK(partitions_of(4).back() == Partition{1, 1, 1, 1});
  CHECK(dominates({3, 1}, {2, 2}));
  CHECK_FALSE(dominates({2, 2}, {3, 1}));
  CHECK_FALSE(dominates({3, 1, 1, 1}, {2, 2, 2}));
  CHECK_FALSE(dominates({2, 2, 2}, {3, 1, 1, 1}));
  CHECK(parse_partition("2,1") == Partition{2, 1});
  CHECK(parse_partition("(3 3 1)") == Partition{3, 3, 1});
  CHECK_FALSE(parse_partition("1,2").has_value());
  CHECK_FALSE(parse_partition("a").has_value());
  CHECK_FALSE(parse_partition("").has_value());
  CHECK(multiplicities({2, 2, 1})[2] == 2);
}

TEST_CASE("power-sum algebra") {
  const auto p1 = SymFuncP::p(1), p2 = SymFuncP::p(2);
  const auto sq = p1 * p1;
  CHECK(sq.coefficient({1, 1}) == TSeries(1));
  CHECK((p1 * p2).coefficient({2, 1}) == TSeries(1));
  CHECK((sq * p2).derivative(1).coefficient({2, 1}) == TSeries(2));
  const auto capped = SymFuncP::p(1, 2) * SymFuncP::p(2, 2);
  CHECK(capped.is_zero());
  CHECK((sq - sq).is_zero());
}

TEST_CASE("p_to_x examples") {
  CHECK(p_to_x(SymFuncP::p(1), 2) == x(2, 0) + x(2, 1));
  const auto e2 = SymFuncP::p(1) * SymFuncP::p(1) - SymFuncP::p(2);
  CHECK(p_to_x(e2, 2) == c(2, TSeries(2)) * x(2, 0) * x(2, 1));
  CHECK(p_to_x(one_minus_t(1) * SymFuncP::p(1), 3) == c(3, one_minus_t(1)) * (x(3, 0) + x(3, 1) + x(3, 2)));
}

TEST_CASE("Hall-Littlewood P small cases") {
  CHECK(hl_P_oracle({1}, 2) == x(2, 0) + x(2, 1));
  CHECK(hl_P_oracle({1, 1}, 2) == x(2, 0) * x(2, 1));
  const auto m = monomial_coefficients(hl_P_oracle({2, 1}, 3));
  CHECK(m.at({2, 1}) == TSeries(1));
  // P_(2,1) = m_(2,1) + (2 - t - t^2) m_(1,1,1)
  CHECK(m.at({1, 1, 1}) == TSeries::from_coeffs({2, -1, -1}));
  CHECK_THROWS_AS(hl_P_oracle({1, 1, 1}, 2), TooFewVariables);
}

TEST_CASE("b_lambda examples") {
  CHECK(b_lambda({1}).identical(one_minus_t(1)));
  CHECK(b_lambda({1, 1}).identical(one_minus_t(1) * one_minus_t(2)));
  CHECK(b_lambda({2, 1}).identical(one_minus_t(1) * one_minus_t(1)));
  CHECK(b_lambda({}).identical(TSeries(1)));
}

TEST_CASE("Hall-Littlewood Q small cases") {
  CHECK(hl_Q_oracle({1}, 2) == c(2, one_minus_t(1)) * (x(2, 0) + x(2, 1)));
  CHECK(hl_Q_oracle({1, 1}, 2) == c(2, one_minus_t(1) * one_minus_t(2)) * x(2, 0) * x(2, 1));
  const auto h2 = x(2, 0) * x(2, 0) + x(2, 1) * x(2, 1) + x(2, 0) * x(2, 1);
  CHECK(hl_Q_oracle({2}, 2).at_t(0) == h2);
}

TEST_CASE("Schur bialternant small cases") {
  CHECK(schur_bialternant({2}, 2) == x(2, 0) * x(2, 0) + x(2, 1) * x(2, 1) + x(2, 0) * x(2, 1));
  CHECK(schur_bialternant({1, 1}, 3) == x(3, 0) * x(3, 1) + x(3, 0) * x(3, 2) + x(3, 1) * x(3, 2));
  CHECK(schur_bialternant({1, 1, 1}, 2).is_zero());
}

TEST_CASE("triangularity in the monomial basis for |lambda| <= 5") {
  for (int w = 1; w <= 5; ++w)
    for (const auto& lam : partitions_of(w)) {
      INFO(to_string(lam));
      const auto m = monomial_coefficients(hl_P_oracle(lam, w));
      CHECK(m.at(lam) == TSeries(1));
      for (const auto& [mu, coeff] : m) CHECK(dominates(lam, mu));
    }
}

TEST_CASE("t = 0 gives Schur, t = 1 gives monomial symmetric functions") {
  for (int w = 1; w <= 5; ++w)
    for (const auto& lam : partitions_of(w)) {
      const int n = std::max(length(lam), std::min(w, 4));
      if (n > 4) continue;
      INFO(to_string(lam));
      const auto p = hl_P_oracle(lam, n);
      CHECK(p.at_t(0) == schur_bialternant(lam, n));
      CHECK(p.at_t(1) == monomial_symmetric(lam, n));
    }
}

TEST_CASE("Q vanishes at t = 1") {
  for (int w = 1; w <= 5; ++w)
    for (const auto& lam : partitions_of(w)) CHECK(hl_Q_oracle(lam, w).at_t(1).is_zero());
}

TEST_CASE("stability under x_{n+1} = 0") {
  for (int w = 1; w <= 5; ++w)
    for (const auto& lam : partitions_of(w)) {
      const int n = std::max(length(lam), 2);
      if (n + 1 > 6) continue;
      INFO(to_string(lam));
      CHECK(hl_P_oracle(lam, n + 1).drop_last_variable() == hl_P_oracle(lam, n));
    }
}
