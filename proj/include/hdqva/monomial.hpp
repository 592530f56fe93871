#pragma once

#include <array>
#include <compare>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hdqva {

/// Formal variables.  `g` carries the translation parameter gamma.
enum class Var : int { z1 = 0, z2 = 1, z3 = 2, g = 3 };
inline constexpr int kNumVars = 4;
inline constexpr std::array<Var, kNumVars> kAllVars{Var::z1, Var::z2, Var::z3, Var::g};

std::string_view var_name(Var v);
std::optional<Var> parse_var(std::string_view name);
constexpr int index(Var v) { return static_cast<int>(v); }

/// Laurent monomial z1^a z2^b z3^c g^d.  Ordered lexicographically in the
/// fixed variable order (z1, z2, z3, g).
struct Monomial {
  std::array<int, kNumVars> exp{};

  static Monomial of(Var v, int e = 1) {
    Monomial m;
    m.exp[static_cast<size_t>(index(v))] = e;
    return m;
  }
  static Monomial of(int e1, int e2, int e3 = 0, int eg = 0) { return Monomial{{e1, e2, e3, eg}}; }

  int operator[](Var v) const { return exp[static_cast<size_t>(index(v))]; }
  int& operator[](Var v) { return exp[static_cast<size_t>(index(v))]; }
  int degree() const { return exp[0] + exp[1] + exp[2] + exp[3]; }
  bool is_one() const { return exp == std::array<int, kNumVars>{}; }

  Monomial& operator*=(const Monomial& o) {
    for (int i = 0; i < kNumVars; ++i) exp[static_cast<size_t>(i)] += o.exp[static_cast<size_t>(i)];
    return *this;
  }
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  friend Monomial operator/(Monomial a, const Monomial& b) {
    for (int i = 0; i < kNumVars; ++i) a.exp[static_cast<size_t>(i)] -= b.exp[static_cast<size_t>(i)];
    return a;
  }
  Monomial pow(int k) const {
    Monomial m = *this;
    for (auto& e : m.exp) e *= k;
    return m;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// "1", "z1^-2*z2", ...
  std::string to_string() const;
};

using Bound = long long;
inline constexpr Bound kInf = Bound{1} << 40;

/// Set of monomials {m : lo <= m <= hi per variable, deg_lo <= deg(m) <= deg_hi}.
/// Bounds of magnitude kInf mean unbounded.  Used both for the exactness
/// window of a chunk and for support descriptors (supersets of the nonzero
/// coefficients of the underlying infinite series).
struct Window {
  std::array<Bound, kNumVars> lo{-kInf, -kInf, -kInf, -kInf};
  std::array<Bound, kNumVars> hi{kInf, kInf, kInf, kInf};
  Bound deg_lo = -kInf;
  Bound deg_hi = kInf;

  static Window everything() { return Window{}; }
  /// Canonical empty window.
  static Window none();
  /// Every variable pinned to 0 except those explicitly opened later.
  static Window zero();
  static Window point(const Monomial& m);
  /// |exponent| <= w for the listed variables, other variables pinned to 0.
  static Window symmetric_box(std::initializer_list<Var> vars, Bound w);

  Bound lo_of(Var v) const { return lo[static_cast<size_t>(index(v))]; }
  Bound hi_of(Var v) const { return hi[static_cast<size_t>(index(v))]; }
  Window& set(Var v, Bound l, Bound h) {
    lo[static_cast<size_t>(index(v))] = l;
    hi[static_cast<size_t>(index(v))] = h;
    return *this;
  }
  Window& set_degree(Bound l, Bound h) {
    deg_lo = l;
    deg_hi = h;
    return *this;
  }

  bool contains(const Monomial& m) const;
  /// Box tightened against the degree slab; an empty window becomes canonical empty.
  Window tightened() const;
  bool empty() const;
  bool is_everything() const;
  /// All bounds of the tightened window finite (enumerable).
  bool finite() const;
  Window intersect(const Window& o) const;
  /// Minkowski sum {a + b}.
  Window plus(const Window& o) const;
  /// {a - b : a in this, b in o}.
  Window minus(const Window& o) const;
  /// Smallest box+slab containing both.
  Window hull(const Window& o) const;
  /// needed (tightened) is a subset of this window.
  bool covers(const Window& needed) const;

  /// Number of monomials in a finite window.
  long long count() const;
  /// Visit every monomial of a finite window in increasing monomial order.
  template <class F>
  void for_each(F&& f) const;

  friend bool operator==(const Window&, const Window&) = default;
  std::string to_string() const;
};

Bound sat_add(Bound a, Bound b);
inline Bound sat_neg(Bound a) { return -a; }

template <class F>
void Window::for_each(F&& f) const {
  const Window w = tightened();
  if (w.empty()) return;
  if (!w.finite()) throw std::invalid_argument("Window::for_each: unbounded window " + w.to_string());
  Monomial m;
  for (Bound a = w.lo[0]; a <= w.hi[0]; ++a)
    for (Bound b = w.lo[1]; b <= w.hi[1]; ++b)
      for (Bound c = w.lo[2]; c <= w.hi[2]; ++c)
        for (Bound d = w.lo[3]; d <= w.hi[3]; ++d) {
          const Bound deg = a + b + c + d;
          if (deg < w.deg_lo || deg > w.deg_hi) continue;
          m.exp = {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c), static_cast<int>(d)};
          f(m);
        }
}

}  // namespace hdqva
