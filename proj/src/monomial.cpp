#include "hdqva/monomial.hpp"

#include <algorithm>
#include <sstream>

namespace hdqva {

std::string_view var_name(Var v) {
  switch (v) {
    case Var::z1: return "z1";
    case Var::z2: return "z2";
    case Var::z3: return "z3";
    case Var::g: return "g";
  }
  return "?";
}

std::optional<Var> parse_var(std::string_view name) {
  for (Var v : kAllVars)
    if (var_name(v) == name) return v;
  return std::nullopt;
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (Var v : kAllVars) {
    const int e = (*this)[v];
    if (e == 0) continue;
    if (!first) os << "*";
    first = false;
    os << var_name(v);
    if (e != 1) os << "^" << e;
  }
  if (first) os << "1";
  return os.str();
}

Bound sat_add(Bound a, Bound b) {
  const bool a_pos = a >= kInf, a_neg = a <= -kInf;
  const bool b_pos = b >= kInf, b_neg = b <= -kInf;
  if ((a_pos && b_neg) || (a_neg && b_pos)) throw std::logic_error("sat_add: opposite infinities");
  if (a_pos || b_pos) return kInf;
  if (a_neg || b_neg) return -kInf;
  return std::clamp<Bound>(a + b, -kInf, kInf);
}

namespace {

Bound sum(const std::array<Bound, kNumVars>& xs, int skip = -1) {
  Bound s = 0;
  for (int i = 0; i < kNumVars; ++i)
    if (i != skip) s = sat_add(s, xs[static_cast<size_t>(i)]);
  return s;
}

Window canonical_empty() {
  Window w;
  w.lo[0] = 1;
  w.hi[0] = 0;
  return w;
}

}  // namespace

Window Window::none() { return canonical_empty(); }

Window Window::zero() {
  Window w;
  w.lo = {0, 0, 0, 0};
  w.hi = {0, 0, 0, 0};
  return w;
}

Window Window::point(const Monomial& m) {
  Window w;
  for (int i = 0; i < kNumVars; ++i) {
    w.lo[static_cast<size_t>(i)] = m.exp[static_cast<size_t>(i)];
    w.hi[static_cast<size_t>(i)] = m.exp[static_cast<size_t>(i)];
  }
  return w;
}

Window Window::symmetric_box(std::initializer_list<Var> vars, Bound width) {
  Window w = zero();
  for (Var v : vars) w.set(v, -width, width);
  return w;
}

bool Window::contains(const Monomial& m) const {
  for (int i = 0; i < kNumVars; ++i) {
    const Bound e = m.exp[static_cast<size_t>(i)];
    if (e < lo[static_cast<size_t>(i)] || e > hi[static_cast<size_t>(i)]) return false;
  }
  const Bound d = m.degree();
  return d >= deg_lo && d <= deg_hi;
}

Window Window::tightened() const {
  for (int i = 0; i < kNumVars; ++i)
    if (lo[static_cast<size_t>(i)] > hi[static_cast<size_t>(i)]) return canonical_empty();
  Window w = *this;
  w.deg_lo = std::max(deg_lo, sum(lo));
  w.deg_hi = std::min(deg_hi, sum(hi));
  if (w.deg_lo > w.deg_hi) return canonical_empty();
  for (int i = 0; i < kNumVars; ++i) {
    const auto k = static_cast<size_t>(i);
    w.lo[k] = std::max(lo[k], sat_add(w.deg_lo, -sum(hi, i)));
    w.hi[k] = std::min(hi[k], sat_add(w.deg_hi, -sum(lo, i)));
    if (w.lo[k] > w.hi[k]) return canonical_empty();
  }
  w.deg_lo = std::max(w.deg_lo, sum(w.lo));
  w.deg_hi = std::min(w.deg_hi, sum(w.hi));
  if (w.deg_lo > w.deg_hi) return canonical_empty();
  return w;
}

bool Window::empty() const {
  const Window w = tightened();
  return w.lo[0] > w.hi[0];
}

bool Window::is_everything() const { return *this == Window{}; }

bool Window::finite() const {
  const Window w = tightened();
  if (w.lo[0] > w.hi[0]) return true;
  for (int i = 0; i < kNumVars; ++i) {
    const auto k = static_cast<size_t>(i);
    if (w.lo[k] <= -kInf || w.hi[k] >= kInf) return false;
  }
  return true;
}

Window Window::intersect(const Window& o) const {
  Window w;
  for (size_t k = 0; k < kNumVars; ++k) {
    w.lo[k] = std::max(lo[k], o.lo[k]);
    w.hi[k] = std::min(hi[k], o.hi[k]);
  }
  w.deg_lo = std::max(deg_lo, o.deg_lo);
  w.deg_hi = std::min(deg_hi, o.deg_hi);
  return w;
}

Window Window::plus(const Window& o) const {
  if (empty() || o.empty()) return canonical_empty();
  // tightened operands carry the degree bounds implied by their boxes
  const Window a = tightened(), b = o.tightened();
  Window w;
  for (size_t k = 0; k < kNumVars; ++k) {
    w.lo[k] = sat_add(a.lo[k], b.lo[k]);
    w.hi[k] = sat_add(a.hi[k], b.hi[k]);
  }
  w.deg_lo = sat_add(a.deg_lo, b.deg_lo);
  w.deg_hi = sat_add(a.deg_hi, b.deg_hi);
  return w;
}

Window Window::minus(const Window& o) const {
  if (empty() || o.empty()) return canonical_empty();
  const Window a = tightened(), b = o.tightened();
  Window w;
  for (size_t k = 0; k < kNumVars; ++k) {
    w.lo[k] = sat_add(a.lo[k], -b.hi[k]);
    w.hi[k] = sat_add(a.hi[k], -b.lo[k]);
  }
  w.deg_lo = sat_add(a.deg_lo, -b.deg_hi);
  w.deg_hi = sat_add(a.deg_hi, -b.deg_lo);
  return w;
}

Window Window::hull(const Window& o) const {
  if (empty()) return o;
  if (o.empty()) return *this;
  Window w;
  for (size_t k = 0; k < kNumVars; ++k) {
    w.lo[k] = std::min(lo[k], o.lo[k]);
    w.hi[k] = std::max(hi[k], o.hi[k]);
  }
  w.deg_lo = std::min(deg_lo, o.deg_lo);
  w.deg_hi = std::max(deg_hi, o.deg_hi);
  return w;
}

bool Window::covers(const Window& needed) const {
  const Window n = needed.tightened();
  if (n.lo[0] > n.hi[0]) return true;
  for (size_t k = 0; k < kNumVars; ++k)
    if (n.lo[k] < lo[k] || n.hi[k] > hi[k]) return false;
  return n.deg_lo >= deg_lo && n.deg_hi <= deg_hi;
}

long long Window::count() const {
  long long n = 0;
  for_each([&](const Monomial&) { ++n; });
  return n;
}

std::string Window::to_string() const {
  auto b = [](Bound x) -> std::string {
    if (x >= kInf) return "inf";
    if (x <= -kInf) return "-inf";
    return std::to_string(x);
  };
  std::ostringstream os;
  os << "{";
  for (Var v : kAllVars) os << var_name(v) << ":[" << b(lo_of(v)) << "," << b(hi_of(v)) << "] ";
  os << "deg:[" << b(deg_lo) << "," << b(deg_hi) << "]}";
  return os.str();
}

}  // namespace hdqva
