#pragma once

#include <map>
#include <string>
#include <utility>

#include "hdqva/errors.hpp"
#include "hdqva/monomial.hpp"

namespace hdqva {

/// Finite piece of a multivariate Laurent series with coefficients in C.
///
/// `window` is the set of monomials whose coefficients are known exactly;
/// `support` is a superset of the monomials where the underlying (possibly
/// infinite) series can be nonzero.  Only nonzero terms inside the window are
/// stored.  C must provide operator+=, operator-, is_zero(C) and operator==.
template <class C>
class LaurentChunk {
 public:
  using Coefficient = C;
  using Terms = std::map<Monomial, C>;

  LaurentChunk() : window_(Window::everything()), support_(Window::everything()) {}
  LaurentChunk(Window window, Window support) : window_(window), support_(support) {}

  /// A finite Laurent polynomial, exact everywhere.
  static LaurentChunk polynomial(Terms terms) {
    LaurentChunk c(Window::everything(), Window::everything());
    Window supp;
    bool first = true;
    for (auto& [m, v] : terms) {
      if (is_zero(v)) continue;
      supp = first ? Window::point(m) : supp.hull(Window::point(m));
      first = false;
      c.terms_.emplace(m, std::move(v));
    }
    c.support_ = first ? Window::none() : supp;
    return c;
  }
  static LaurentChunk constant(C value) { return polynomial(Terms{{Monomial{}, std::move(value)}}); }

  const Window& window() const { return window_; }
  const Window& support() const { return support_; }
  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  /// Exact coefficient; throws OutsideWindow if m is outside the window.
  C coefficient(const Monomial& m) const {
    if (!window_.contains(m)) throw OutsideWindow("coefficient: " + m.to_string() + " outside window " + window_.to_string());
    auto it = terms_.find(m);
    return it == terms_.end() ? C{} : it->second;
  }

  /// Accumulate a term; silently ignores monomials outside window or support.
  void accumulate(const Monomial& m, const C& value) {
    if (!window_.contains(m) || !support_.contains(m)) return;
    auto [it, inserted] = terms_.try_emplace(m, value);
    if (!inserted) it->second += value;
    if (is_zero(it->second)) terms_.erase(it);
  }

  /// Same data restricted to a sub-window.
  LaurentChunk restricted(const Window& w) const {
    LaurentChunk r(window_.intersect(w), support_);
    for (const auto& [m, v] : terms_)
      if (r.window_.contains(m)) r.terms_.emplace(m, v);
    return r;
  }

  /// Replace the support descriptor by a tighter one the caller can justify.
  void set_support(const Window& s) {
    support_ = s;
    for (auto it = terms_.begin(); it != terms_.end();) it = support_.contains(it->first) ? std::next(it) : terms_.erase(it);
  }

  template <class F>
  auto map(F&& f) const -> LaurentChunk<decltype(f(std::declval<const C&>()))> {
    using D = decltype(f(std::declval<const C&>()));
    LaurentChunk<D> r(window_, support_);
    for (const auto& [m, v] : terms_) r.accumulate(m, f(v));
    return r;
  }

  LaurentChunk operator-() const {
    LaurentChunk r(window_, support_);
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, -v);
    return r;
  }

  /// Sum on the common window; support is the hull of both supports.
  friend LaurentChunk operator+(const LaurentChunk& a, const LaurentChunk& b) {
    LaurentChunk r(a.window_.intersect(b.window_), a.support_.hull(b.support_));
    for (const auto& [m, v] : a.terms_) r.accumulate(m, v);
    for (const auto& [m, v] : b.terms_) r.accumulate(m, v);
    return r;
  }
  friend LaurentChunk operator-(const LaurentChunk& a, const LaurentChunk& b) { return a + (-b); }

 private:
  Window window_;
  Window support_;
  Terms terms_;
};

namespace detail {

/// Set of exponents m1 of the left factor that can contribute to output m.
inline Window contributing(const Monomial& m, const Window& left_support, const Window& right_support) {
  return Window::point(m).minus(right_support).intersect(left_support);
}

}  // namespace detail

/// True iff the coefficient of m in a*b is fully determined by the stored
/// windows of a and b (every contributing pair lies in both windows).
template <class A, class B>
bool product_is_sound_at(const LaurentChunk<A>& a, const LaurentChunk<B>& b, const Monomial& m) {
  const Window left = detail::contributing(m, a.support(), b.support()).tightened();
  if (left.empty()) return true;
  if (!a.window().covers(left)) return false;
  return b.window().covers(Window::point(m).minus(left));
}

/// Product restricted to `requested`.  Every monomial of `requested` inside
/// the product support is checked for soundness; WindowUnderflow otherwise.
template <class A, class B>
auto laurent_mul(const LaurentChunk<A>& a, const LaurentChunk<B>& b, const Window& requested)
    -> LaurentChunk<decltype(std::declval<const A&>() * std::declval<const B&>())> {
  using R = decltype(std::declval<const A&>() * std::declval<const B&>());
  const Window support = a.support().plus(b.support());
  const bool both_exact = a.window().is_everything() && b.window().is_everything();
  if (!both_exact) {
    const Window domain = requested.intersect(support);
    if (!domain.finite()) throw WindowUnderflow("laurent_mul: requested window is unbounded on the product support " + domain.tightened().to_string());
    domain.for_each([&](const Monomial& m) {
      if (!product_is_sound_at(a, b, m))
        throw WindowUnderflow("laurent_mul: coefficient of " + m.to_string() + " depends on data outside the input windows");
    });
  }
  LaurentChunk<R> r(requested, support);
  for (const auto& [ma, va] : a.terms())
    for (const auto& [mb, vb] : b.terms()) {
      const Monomial m = ma * mb;
      if (requested.contains(m)) r.accumulate(m, va * vb);
    }
  return r;
}

/// Product on the tightest window the inputs determine: the box+slab hull
/// of all sound output monomials.  Throws WindowUnderflow if that hull also
/// contains unsound monomials (pass an explicit window in that case).
template <class A, class B>
auto laurent_mul(const LaurentChunk<A>& a, const LaurentChunk<B>& b) {
  if (a.window().is_everything() && b.window().is_everything()) return laurent_mul(a, b, Window::everything());
  const Window support = a.support().plus(b.support());
  const Window candidate =
      a.window().intersect(a.support()).plus(b.window().intersect(b.support())).intersect(support);
  if (!candidate.finite()) throw WindowUnderflow("laurent_mul: no finite default window; pass one explicitly");
  Window hull;
  bool any = false;
  candidate.for_each([&](const Monomial& m) {
    if (!product_is_sound_at(a, b, m)) return;
    hull = any ? hull.hull(Window::point(m)) : Window::point(m);
    any = true;
  });
  if (!any) throw WindowUnderflow("laurent_mul: no output coefficient is determined by the inputs");
  return laurent_mul(a, b, hull);
}

/// Window on which `factor` must be exact so that factor * other is sound on `target`.
inline Window required_window(const Window& target, const Window& other_support) { return target.minus(other_support); }

}  // namespace hdqva
