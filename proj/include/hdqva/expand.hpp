#pragma once

#include "hdqva/form.hpp"
#include "hdqva/laurent.hpp"

namespace hdqva {

using ScalarChunk = LaurentChunk<TSeries>;

/// Superset of the monomials carried by the region expansion of fp.
Window expansion_support(const FactorProduct& fp, const RegionOrder& region, int t_order);

/// Region expansion of fp, exact on `window` modulo t^(t_order+1).
///
/// Every negative-power factor is written as  c0*M0*(1 + R)  where c0*M0 is
/// its dominant term (lowest t-valuation, then largest in the region order)
/// and expanded as a binomial series in R.  Throws NonExpandableFactor when
/// no dominant term exists, WindowUnderflow when the window does not bound
/// the leading variables from below.
ScalarChunk expand(const FactorProduct& fp, const RegionOrder& region, const Window& window, int t_order);

/// Support of  sum_n a^(-n-1) b^n  with powers expanded in `region`.
Window delta_support(const Form& a, const Form& b, const RegionOrder& region);

/// delta(a, b) = sum_{n in Z} a^(-n-1) b^n on a finite window.  One of a, b
/// must be a single variable; its exponent pins n.
ScalarChunk formal_delta(const Form& a, const Form& b, const RegionOrder& region, const Window& window, int t_order);

}  // namespace hdqva
