#pragma once

#include <climits>
#include <map>
#include <string>

#include "hdqva/partition.hpp"
#include "hdqva/tseries.hpp"

namespace hdqva {

/// Symmetric function in the power-sum basis: sum_lambda c_lambda p_lambda.
/// Terms of weight above degree_cap are dropped by every ring operation.
class SymFuncP {
 public:
  using Terms = std::map<Partition, TSeries>;
  static constexpr int kNoCap = INT_MAX;

  explicit SymFuncP(int degree_cap = kNoCap) : cap_(degree_cap) {}
  static SymFuncP constant(const TSeries& c, int degree_cap = kNoCap);
  /// p_n (p_0 is 1).
  static SymFuncP p(int n, int degree_cap = kNoCap);
  static SymFuncP term(const Partition& lambda, const TSeries& c, int degree_cap = kNoCap);

  int degree_cap() const { return cap_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  TSeries coefficient(const Partition& lambda) const;
  /// Largest weight carrying a nonzero term, -1 for zero.
  int max_degree() const;

  /// Adds c p_lambda; terms above the cap are dropped.
  void add_term(const Partition& lambda, const TSeries& c);

  SymFuncP& operator+=(const SymFuncP& o);
  SymFuncP& operator-=(const SymFuncP& o);
  friend SymFuncP operator+(SymFuncP a, const SymFuncP& b) { return a += b; }
  friend SymFuncP operator-(SymFuncP a, const SymFuncP& b) { return a -= b; }
  friend SymFuncP operator*(const SymFuncP& a, const SymFuncP& b);
  friend SymFuncP operator*(const TSeries& c, const SymFuncP& a);
  friend SymFuncP operator*(const SymFuncP& a, const TSeries& c) { return c * a; }
  SymFuncP operator-() const;

  /// Partial derivative with respect to p_n.
  SymFuncP derivative(int n) const;
  SymFuncP homogeneous_part(int degree) const;
  SymFuncP truncated(int t_order) const;
  SymFuncP with_cap(int degree_cap) const;
  /// Exact t-polynomial coefficients evaluated at t = x (constants remain).
  SymFuncP at_t(const Rational& x) const;

  /// Coefficientwise equality modulo the smaller t-order of each pair.
  friend bool operator==(const SymFuncP& a, const SymFuncP& b);
  std::string to_string() const;

 private:
  int cap_;
  Terms terms_;
};

inline bool is_zero(const SymFuncP& f) { return f.is_zero(); }

}  // namespace hdqva
