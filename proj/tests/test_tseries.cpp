#include <random>

#include "doctest.h"
#include "hdqva/errors.hpp"
#include "hdqva/tseries.hpp"

using namespace hdqva;

namespace {

TSeries poly(std::initializer_list<long> cs, int order = TSeries::kExact) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return TSeries::from_coeffs(std::move(v), order);
}

}  // namespace

TEST_CASE("ts_invert of one is one") {
  CHECK(ts_invert(TSeries(1), 5).identical(TSeries(1).truncated(5)));
}

TEST_CASE("ts_invert of 1-t is the geometric series") {
  const TSeries inv = ts_invert(poly({1, -1}), 3);
  CHECK(inv.identical(poly({1, 1, 1, 1}, 3)));
}

TEST_CASE("ts_invert multiply-back for (1-t)(1-t^2)") {
  const TSeries u = poly({1, -1}) * poly({1, 0, -1});
  const TSeries inv = ts_invert(u, 4);
  CHECK((u * inv).identical(TSeries(1).truncated(4)));
}

TEST_CASE("ts_invert rejects a vanishing constant term") {
  CHECK_THROWS_AS(ts_invert(poly({0, 1}), 3), ZeroConstantTerm);
}

TEST_CASE("ts_invert multiply-back on 200 random units") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<long> coeff(-9, 9), len(1, 6), order(0, 10);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> cs;
    const long n = len(rng);
    for (long k = 0; k < n; ++k) cs.emplace_back(coeff(rng));
    if (cs[0] == 0) cs[0] = 1;
    const int T = static_cast<int>(order(rng));
    const TSeries u = TSeries::from_coeffs(cs, T);
    CHECK((u * ts_invert(u)).identical(TSeries(1).truncated(T)));
  }
}

TEST_CASE("truncation drops high degrees and equality is modulo the smaller order") {
  const TSeries a = poly({1, 2, 3, 4});
  CHECK(a.truncated(1).identical(poly({1, 2}, 1)));
  CHECK(a.truncated(2) == a);
  CHECK_FALSE(a.truncated(2).identical(a));
  CHECK((a.truncated(1) * a.truncated(3)).order() == 1);
}

TEST_CASE("divide_exact recovers the quotient and rejects remainders") {
  const TSeries q = poly({1, 1, 1});
  CHECK(divide_exact(q * poly({1, -1}), poly({1, -1})).identical(q));
  CHECK_THROWS(divide_exact(poly({1, 1}), poly({1, -1})));
}

TEST_CASE("rendering") {
  CHECK(poly({1, -1}).to_string() == "1 - t");
  CHECK(poly({0, 0, 3}, 4).to_string() == "3*t^2 + O(t^5)");
  CHECK(TSeries().to_string() == "0");
}
