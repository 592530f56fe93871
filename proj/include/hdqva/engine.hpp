#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hdqva/expand.hpp"
#include "hdqva/fock.hpp"

namespace hdqva {

struct EngineOptions {
  int t_order = 8;
  int degree_cap = 9;
};

/// Charges supported by the shipped operators.
inline constexpr int kMaxCharge = 3;
void check_charge(int a);

/// Scalar part of an S-map on e^{a alpha} (x) e^{b alpha}; the tensor part is unchanged.
struct SMapValue {
  FactorProduct scalar;
  int a = 0;
  int b = 0;
};

/// (-(1 - t z2/z1) / (1 - t z1/z2))^{ab} in the variables z1, z2.
SMapValue S_tau(int a, int b);
/// ((1 - t z2/z1) / (1 - t (z2+g)/(z1+g)))^{ab}.
SMapValue S_gamma(int a, int b);
/// Two-point prefactor (x - y) / (1 - t y/x) = (x - y) x (x - t y)^{-1}.
FactorProduct two_point(const Form& x, const Form& y);

/// Coefficient of z^k in exp(a sum_n (1-t^n)/n p_n z^n), exact in t.
const SymFuncP& eplus_coefficient(int a, int k);

/// sum_{k <= max_power} var^k e_k(a) v.
FockChunk Eplus_apply(int a, Var var, const FockVector& v, int max_power, const EngineOptions& opt);
/// v with p_n -> p_n - a var^{-n}: a finite series in var^{-1}.
FockChunk Eminus_apply(int a, Var var, const FockVector& v);
/// Y(e^{a alpha}, var) v = E+ E- (charge m -> m+a) var^{a m} v on `window`
/// (other variables pinned to 0).
FockChunk Y_apply(int a, Var var, const FockVector& v, const Window& window, const EngineOptions& opt);
/// Y(e^{a alpha}, var) applied coefficientwise to a series not involving var.
FockChunk Y_apply(int a, Var var, const FockChunk& series, const Window& window, const EngineOptions& opt);

/// Coefficient of z_1^{l_1}..z_n^{l_n} in B(z_1)..B(z_n) 1 with B = E+ E- at charge 1.
SymFuncP jing_Q(const Partition& lambda);

/// prefactor * prod_i E+(charge_i, argument_i) e^{charge alpha}.
struct ClosedForm {
  FactorProduct prefactor;
  std::vector<std::pair<int, Form>> exponentials;
  int charge = 0;

  ClosedForm substitute(const Substitution& s) const;
  std::string to_string() const;
};

ClosedForm X2_form(int a, int b);
ClosedForm X3_form(int a, int b, int c);
/// z3^{ab} (z2+z3)^{ac} z2^{bc} E+(a, z2+z3) E+(b, z2) e^{(a+b+c) alpha}:
/// the iterated product Y(Y(a,z3)b,z2)c with the translation-map scalar removed.
ClosedForm iterated_form(int a, int b, int c);

Window closed_support(const ClosedForm& cf, const RegionOrder& region, int t_order);
FockChunk expand_closed(const ClosedForm& cf, const RegionOrder& region, const Window& window, const EngineOptions& opt);

enum class Provenance { operator_product, closed_form, substitution };
std::string to_string(Provenance p);

struct VertexSeries {
  FockChunk chunk;
  RegionOrder region;
  Provenance provenance = Provenance::closed_form;
  std::optional<ClosedForm> closed;
};

VertexSeries X2_closed(int a, int b, const RegionOrder& region, const Window& window, const EngineOptions& opt);
VertexSeries X3_closed(int a, int b, int c, const RegionOrder& region, const Window& window, const EngineOptions& opt);
/// Substitute into the closed form behind vs and re-expand; NotClosedForm otherwise.
VertexSeries shift_substitute(const VertexSeries& vs, const Substitution& rule, const RegionOrder& region,
                              const Window& window, const EngineOptions& opt);

/// Y(e^{a alpha}, z1) Y(e^{b alpha}, z2) e^{c alpha} with operators applied right to left,
/// computed on `window` in variables (outer, inner).
VertexSeries operator_product(int a, Var outer, int b, Var inner, int c, const Window& window, const EngineOptions& opt);

/// Window with `v` pinned to 0 and the degree slab shifted accordingly.
Window project_out(const Window& w, Var v);

}  // namespace hdqva
