#include "hdqva/fock.hpp"

#include <algorithm>
#include <sstream>

#include "hdqva/errors.hpp"

namespace hdqva {

FockVector FockVector::vacuum(int degree_cap) { return lattice(0, degree_cap); }

FockVector FockVector::lattice(int charge, int degree_cap) {
  return of(charge, SymFuncP::constant(TSeries(1), degree_cap));
}

FockVector FockVector::of(int charge, const SymFuncP& f) {
  FockVector v;
  v.add(charge, f);
  return v;
}

SymFuncP FockVector::component(int charge) const {
  auto it = comps_.find(charge);
  return it == comps_.end() ? SymFuncP() : it->second;
}

int FockVector::max_degree() const {
  int d = -1;
  for (const auto& [m, f] : comps_) d = std::max(d, f.max_degree());
  return d;
}

void FockVector::add(int charge, const SymFuncP& f) {
  if (charge < 0) throw UnsupportedCharge("FockVector: negative charge");
  if (f.is_zero()) return;
  auto [it, inserted] = comps_.try_emplace(charge, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [m, f] : o.comps_) add(m, f);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [m, f] : o.comps_) add(m, -f);
  return *this;
}

FockVector FockVector::operator-() const {
  FockVector r;
  for (const auto& [m, f] : comps_) r.comps_.emplace(m, -f);
  return r;
}

FockVector operator*(const TSeries& c, const FockVector& v) {
  FockVector r;
  for (const auto& [m, f] : v.comps_) r.add(m, c * f);
  return r;
}

FockVector operator*(const FockVector& a, const FockVector& b) {
  FockVector r;
  for (const auto& [ma, fa] : a.comps_)
    for (const auto& [mb, fb] : b.comps_) r.add(ma + mb, fa * fb);
  return r;
}

FockVector FockVector::truncated(int t_order) const {
  FockVector r;
  for (const auto& [m, f] : comps_) r.add(m, f.truncated(t_order));
  return r;
}

FockVector FockVector::with_cap(int degree_cap) const {
  FockVector r;
  for (const auto& [m, f] : comps_) r.add(m, f.with_cap(degree_cap));
  return r;
}

FockVector FockVector::charge_shifted(int shift) const {
  FockVector r;
  for (const auto& [m, f] : comps_) r.add(m + shift, f);
  return r;
}

bool operator==(const FockVector& a, const FockVector& b) {
  for (const auto& [m, f] : a.comps_)
    if (!(f == b.component(m))) return false;
  for (const auto& [m, f] : b.comps_)
    if (!(f == a.component(m))) return false;
  return true;
}

std::string FockVector::to_string() const {
  if (comps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, f] : comps_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << f.to_string() << "] e^" << m << "a";
  }
  return os.str();
}

namespace {

// n (1 - t^{n+1}) / (1 - t^n), t-adically.
TSeries d_coefficient(int n, int t_order) {
  const TSeries num = TSeries::one_minus(n + 1).truncated(t_order);
  return (Rational(n) * num * ts_invert(TSeries::one_minus(n).truncated(t_order), t_order)).truncated(t_order);
}

SymFuncP apply_D_sym(const SymFuncP& f, int charge, const DOptions& opt) {
  SymFuncP out(f.degree_cap());
  for (const auto& [lam, c] : f.terms()) {
    if ((!lam.empty() || charge != 0) && weight(lam) + 1 > f.degree_cap()) throw DegreeCapExceeded("apply_D: image exceeds degree cap " + std::to_string(f.degree_cap()));
    // Leibniz over the parts of p_lambda; each distinct part n contributes m_n times
    for (size_t i = 0; i < lam.size(); ++i) {
      if (i && lam[i] == lam[i - 1]) continue;
      const int n = lam[i];
      const auto mult = std::count(lam.begin(), lam.end(), n);
      Partition rest = lam;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      rest.push_back(n + 1);
      out.add_term(normalized(rest), c * d_coefficient(n, opt.t_order) * Rational(static_cast<long>(mult)));
    }
    if (charge != 0) {
      TSeries zero_mode = opt.perturbed ? TSeries(charge) : TSeries::one_minus(1) * Rational(charge);
      out.add_term(merged(lam, {1}), (c * zero_mode).truncated(opt.t_order));
    }
  }
  return out;
}

}  // namespace

FockVector apply_D(const FockVector& v, const DOptions& opt) {
  FockVector out;
  for (const auto& [m, f] : v.components()) out.add(m, apply_D_sym(f, m, opt));
  return out;
}

FockChunk exp_D(const FockVector& v, Var var, int order, const DOptions& opt) {
  Window w = Window::zero();
  w.set(var, 0, order);
  FockChunk out(w, Window::zero().set(var, 0, kInf));
  FockVector cur = v;
  Rational fact = 1;
  for (int k = 0; k <= order; ++k) {
    if (k) {
      cur = apply_D(cur, opt);
      fact *= k;
    }
    if (cur.is_zero()) break;
    out.accumulate(Monomial::of(var, k), TSeries(Rational(1) / fact) * cur);
  }
  return out;
}

FockChunk exp_D(const FockChunk& series, Var var, const Window& window, const DOptions& opt) {
  Window support = series.support();
  support.set(var, support.lo_of(var), kInf);
  support.set_degree(support.deg_lo, kInf);
  if (series.support().lo_of(var) <= -kInf) throw WindowUnderflow("exp_D: series is unbounded below in the shift variable");
  FockChunk out(window, support);
  const Window domain = window.intersect(support);
  if (!domain.finite()) throw WindowUnderflow("exp_D: requested window is unbounded");
  std::map<Monomial, std::vector<FockVector>> powers;  // D^k of each input coefficient, memoized
  auto power = [&](const Monomial& m, int k) -> const FockVector& {
    auto& seq = powers[m];
    if (seq.empty()) seq.push_back(series.coefficient(m));
    while (static_cast<int>(seq.size()) <= k) seq.push_back(apply_D(seq.back(), opt));
    return seq[static_cast<size_t>(k)];
  };
  domain.for_each([&](const Monomial& m) {
    FockVector acc;
    Rational fact = 1;
    for (int k = 0;; ++k) {
      if (k) fact *= k;
      const Monomial src = m / Monomial::of(var, k);
      if (src[var] < series.support().lo_of(var)) break;
      if (!series.support().contains(src)) continue;
      if (!series.window().contains(src))
        throw WindowUnderflow("exp_D: coefficient of " + src.to_string() + " is outside the series window");
      acc += TSeries(Rational(1) / fact) * power(src, k);
    }
    out.accumulate(m, acc);
  });
  return out;
}

}  // namespace hdqva
