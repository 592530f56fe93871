#pragma once

#include <map>
#include <string>

#include "hdqva/laurent.hpp"
#include "hdqva/monomial.hpp"
#include "hdqva/symfunc.hpp"

namespace hdqva {

/// Element of Sym (x) C[Z alpha]: sum over charges m >= 0 of f_m e^{m alpha}.
class FockVector {
 public:
  using Components = std::map<int, SymFuncP>;

  FockVector() = default;
  static FockVector vacuum(int degree_cap = SymFuncP::kNoCap);
  /// e^{m alpha} (charge m, symmetric-function part 1).
  static FockVector lattice(int charge, int degree_cap = SymFuncP::kNoCap);
  static FockVector of(int charge, const SymFuncP& f);

  const Components& components() const { return comps_; }
  SymFuncP component(int charge) const;
  bool is_zero() const { return comps_.empty(); }
  /// Largest symmetric-function weight present, -1 for zero.
  int max_degree() const;

  void add(int charge, const SymFuncP& f);
  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  FockVector operator-() const;
  friend FockVector operator*(const TSeries& c, const FockVector& v);
  friend FockVector operator*(const FockVector& v, const TSeries& c) { return c * v; }
  /// Product in the commutative Fock algebra (charges add).
  friend FockVector operator*(const FockVector& a, const FockVector& b);

  FockVector truncated(int t_order) const;
  FockVector with_cap(int degree_cap) const;
  /// Charge m component moved to charge m + shift.
  FockVector charge_shifted(int shift) const;

  friend bool operator==(const FockVector& a, const FockVector& b);
  std::string to_string() const;

 private:
  Components comps_;
};

inline bool is_zero(const FockVector& v) { return v.is_zero(); }

using FockChunk = LaurentChunk<FockVector>;

/// Options for the translation operator.  `perturbed` drops the (1-t)
/// factor in D e^{m alpha}; used only for mutation testing.
struct DOptions {
  int t_order = 8;
  bool perturbed = false;
};

/// D as a derivation: D p_n = n (1-t^{n+1})/(1-t^n) p_{n+1},
/// D e^{m alpha} = m (1-t) p_1 e^{m alpha}.  Throws DegreeCapExceeded when the
/// image needs a weight above the component's cap.
FockVector apply_D(const FockVector& v, const DOptions& opt);

/// sum_{k=0}^{order} var^k / k! D^k v.
FockChunk exp_D(const FockVector& v, Var var, int order, const DOptions& opt);

/// e^{var D} applied to a series: out[m] = sum_k D^k s[m - k var] / k!,
/// computed on `window`.  Throws WindowUnderflow if an input coefficient
/// outside the series window is needed.
FockChunk exp_D(const FockChunk& series, Var var, const Window& window, const DOptions& opt);

}  // namespace hdqva
