#pragma once

#include <climits>
#include <compare>
#include <string>
#include <vector>

#include "hdqva/rational.hpp"

namespace hdqva {

/// Power series in the deformation variable t over the rationals, known
/// modulo t^(order+1).  An order of kExact marks an exact polynomial.
///
/// Storage is trimmed: no coefficient above the order and no trailing zeros,
/// so two values with equal order and equal coefficients compare identical.
class TSeries {
 public:
  static constexpr int kExact = INT_MAX;

  TSeries() = default;
  TSeries(const Rational& c);  // NOLINT: constants convert implicitly
  TSeries(long c) : TSeries(Rational(c)) {}  // NOLINT

  static TSeries from_coeffs(std::vector<Rational> coeffs, int order = kExact);
  static TSeries monomial(const Rational& c, int degree, int order = kExact);
  /// 1 - c * t^k
  static TSeries one_minus(int k, const Rational& c = 1);

  int order() const { return order_; }
  bool is_exact() const { return order_ == kExact; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Index of the lowest nonzero coefficient, -1 for zero.
  int valuation() const;
  /// Highest stored degree, -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational operator[](int k) const;

  TSeries truncated(int order) const;
  /// Value at t = x; only meaningful for exact polynomials.
  Rational evaluate(const Rational& x) const;

  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  TSeries& operator*=(const TSeries& o);
  TSeries& operator*=(const Rational& c);
  TSeries operator-() const;

  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend TSeries operator*(TSeries a, const Rational& c) { return a *= c; }
  friend TSeries operator*(const Rational& c, TSeries a) { return a *= c; }

  /// Equality modulo t^(min(order)+1).
  friend bool operator==(const TSeries& a, const TSeries& b);
  /// Strict identity including order; used for ordering containers.
  bool identical(const TSeries& o) const { return order_ == o.order_ && coeffs_ == o.coeffs_; }
  friend std::strong_ordering structural_compare(const TSeries& a, const TSeries& b);

  std::string to_string() const;
  /// Coefficients as exact "p/q" strings, degrees 0..degree().
  std::vector<std::string> coeff_strings() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
  int order_ = kExact;
};

inline bool is_zero(const TSeries& s) { return s.is_zero(); }

/// Multiplicative inverse modulo t^(order+1).  Throws ZeroConstantTerm.
TSeries ts_invert(const TSeries& u, int order);
/// Uses u.order(); u must not be exact unless it is a constant.
TSeries ts_invert(const TSeries& u);

/// Exact quotient of exact polynomials; throws std::domain_error when the
/// division leaves a remainder or the divisor has zero constant term.
TSeries divide_exact(const TSeries& num, const TSeries& den);

}  // namespace hdqva
