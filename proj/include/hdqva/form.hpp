#pragma once

#include <array>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hdqva/monomial.hpp"
#include "hdqva/tseries.hpp"

namespace hdqva {

/// Laurent polynomial in z1, z2, z3, g with t-series coefficients.  The
/// building block of FactorProduct factors ("linear forms" in the wide sense).
class Form {
 public:
  using Terms = std::map<Monomial, TSeries>;

  Form() = default;
  explicit Form(Terms terms);
  static Form var(Var v) { return Form(Terms{{Monomial::of(v), TSeries(1)}}); }
  static Form constant(const TSeries& c) { return Form(Terms{{Monomial{}, c}}); }
  static Form monomial(const Monomial& m, const TSeries& c = TSeries(1)) { return Form(Terms{{m, c}}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  /// Common homogeneous degree of all terms, if any.
  std::optional<int> homogeneous_degree() const;
  /// Single term with coefficient exactly 1 in exactly one variable.
  std::optional<Var> as_single_variable() const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Form& a, const Form& b);
  friend Form operator*(const TSeries& c, const Form& a);
  Form operator-() const;
  Form pow(int k) const;

  /// Structural comparison, used to merge equal factors.
  friend bool operator<(const Form& a, const Form& b);
  friend bool operator==(const Form& a, const Form& b);

  std::string to_string() const;

 private:
  Terms terms_;
};

inline Form operator*(const Form& a, const TSeries& c) { return c * a; }

/// Simultaneous substitution of variables by forms; unset entries are kept.
struct Substitution {
  std::array<std::optional<Form>, kNumVars> image{};

  Substitution() = default;
  Substitution(std::initializer_list<std::pair<Var, Form>> rules);
  Substitution& set(Var v, Form f) {
    image[static_cast<size_t>(index(v))] = std::move(f);
    return *this;
  }
  /// z1 <-> z2.
  static Substitution swap(Var a, Var b);
  /// zi -> zi + g for every listed variable.
  static Substitution shift_by_gamma(std::initializer_list<Var> vars);

  Form apply(const Form& f) const;
};

/// Variable ordering for region expansions, largest modulus first.  The
/// deformation variable t is always smaller than all of them; g, if present,
/// must come last (gamma is a power-series variable).
class RegionOrder {
 public:
  RegionOrder() = default;
  RegionOrder(std::initializer_list<Var> vars);
  explicit RegionOrder(std::vector<Var> vars);

  const std::vector<Var>& vars() const { return vars_; }
  bool contains(Var v) const;
  /// Position in the order, or -1.
  int rank(Var v) const;
  std::string to_string() const;
  friend bool operator==(const RegionOrder&, const RegionOrder&) = default;

 private:
  void validate() const;
  std::vector<Var> vars_;
};

/// Symbolic product  c * prod_k form_k ^ e_k  in normal form: each form is a
/// polynomial with no monomial content and leading rational coefficient 1,
/// monomial content is split into single-variable factors, rational constants
/// are folded into c, equal forms are merged.
class FactorProduct {
 public:
  FactorProduct() : prefactor_(1) {}
  explicit FactorProduct(const Rational& c) : prefactor_(c) {}
  FactorProduct(const Form& f, int exponent);

  static FactorProduct zero() { return FactorProduct(Rational(0)); }

  const Rational& prefactor() const { return prefactor_; }
  const std::vector<std::pair<Form, int>>& factors() const { return factors_; }
  bool is_zero() const { return prefactor_ == 0; }
  /// Homogeneous total degree in (z1, z2, z3, g), if every factor is homogeneous.
  std::optional<int> homogeneous_degree() const;

  FactorProduct& operator*=(const FactorProduct& o);
  friend FactorProduct operator*(FactorProduct a, const FactorProduct& b) { return a *= b; }
  FactorProduct inverse() const;
  FactorProduct pow(int k) const;
  FactorProduct operator-() const;

  /// Apply a substitution to every factor and renormalize.  Throws
  /// std::domain_error if a negative-power factor becomes zero.
  FactorProduct substitute(const Substitution& s) const;

  friend bool operator==(const FactorProduct& a, const FactorProduct& b);
  std::string to_string() const;

 private:
  void absorb(const Form& f, int exponent);
  void merge();

  Rational prefactor_;
  std::vector<std::pair<Form, int>> factors_;
};

}  // namespace hdqva
