#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hdqva/partition.hpp"
#include "hdqva/symfunc.hpp"

namespace hdqva {

/// Polynomial in x_1..x_n (n <= 8) with t-polynomial coefficients.
class XPolynomial {
 public:
  static constexpr int kMaxVars = 8;
  using Exponents = std::array<std::uint8_t, kMaxVars>;
  using Terms = std::map<Exponents, TSeries>;

  explicit XPolynomial(int nvars = 0);
  static XPolynomial constant(int nvars, const TSeries& c);
  /// x_{i+1}, zero-based i.
  static XPolynomial variable(int nvars, int i);
  static XPolynomial monomial(int nvars, const Exponents& e, const TSeries& c);

  int nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  TSeries coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const TSeries& c);

  XPolynomial& operator+=(const XPolynomial& o);
  XPolynomial& operator-=(const XPolynomial& o);
  friend XPolynomial operator+(XPolynomial a, const XPolynomial& b) { return a += b; }
  friend XPolynomial operator-(XPolynomial a, const XPolynomial& b) { return a -= b; }
  friend XPolynomial operator*(const XPolynomial& a, const XPolynomial& b);
  friend XPolynomial operator*(const TSeries& c, const XPolynomial& a);

  /// Substitute t := x in every coefficient.
  XPolynomial at_t(const Rational& x) const;
  XPolynomial truncated(int t_order) const;
  /// Set the last variable to zero and drop it.
  XPolynomial drop_last_variable() const;
  /// Exact quotient by (x_i - x_j); throws std::domain_error on a remainder.
  XPolynomial divided_by_difference(int i, int j) const;
  /// Exact quotient of every coefficient by the t-polynomial d.
  XPolynomial divided_by(const TSeries& d) const;

  friend bool operator==(const XPolynomial& a, const XPolynomial& b);
  std::string to_string() const;

 private:
  int n_;
  Terms terms_;
};

/// Exponent vector of a partition padded with zeros.
XPolynomial::Exponents exponents_of(const Partition& p);

/// Substitution p_k -> x_1^k + ... + x_n^k.
XPolynomial p_to_x(const SymFuncP& f, int nvars);
/// Coefficients of the monomial symmetric functions m_mu, read off x^mu.
std::map<Partition, TSeries> monomial_coefficients(const XPolynomial& f);

/// Schur polynomial as the bialternant a_{lambda+delta} / a_delta.
XPolynomial schur_bialternant(const Partition& lambda, int nvars);
/// Hall-Littlewood P by the symmetrization formula, exact in t.
XPolynomial hl_P_oracle(const Partition& lambda, int nvars);
/// prod_i phi_{m_i}(t) with phi_r = (1-t)...(1-t^r).
TSeries b_lambda(const Partition& lambda);
XPolynomial hl_Q_oracle(const Partition& lambda, int nvars);

}  // namespace hdqva
