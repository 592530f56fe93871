#include "hdqva/engine.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "hdqva/errors.hpp"

namespace hdqva {

void check_charge(int a) {
  if (a < 0 || a > kMaxCharge)
    throw UnsupportedCharge("charge " + std::to_string(a) + " outside 0.." + std::to_string(kMaxCharge));
}

namespace {

const TSeries kT = TSeries::monomial(1, 1);

Form z(Var v) { return Form::var(v); }

}  // namespace

FactorProduct two_point(const Form& x, const Form& y) {
  return FactorProduct(x - y, 1) * FactorProduct(x, 1) * FactorProduct(x - kT * y, -1);
}

SMapValue S_tau(int a, int b) {
  check_charge(a);
  check_charge(b);
  const Form z1 = z(Var::z1), z2 = z(Var::z2);
  FactorProduct base = -(FactorProduct(z1 - kT * z2, 1) * FactorProduct(z1, -1) * FactorProduct(z2, 1) *
                         FactorProduct(z2 - kT * z1, -1));
  return {base.pow(a * b), a, b};
}

SMapValue S_gamma(int a, int b) {
  check_charge(a);
  check_charge(b);
  const Form z1 = z(Var::z1), z2 = z(Var::z2), g = z(Var::g);
  FactorProduct base = FactorProduct(z1 - kT * z2, 1) * FactorProduct(z1, -1) * FactorProduct(z1 + g, 1) *
                       FactorProduct(z1 + TSeries::one_minus(1) * g - kT * z2, -1);
  return {base.pow(a * b), a, b};
}

const SymFuncP& eplus_coefficient(int a, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, SymFuncP> memo;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = memo.find({a, k}); it != memo.end()) return it->second;
  for (int j = 0; j <= k; ++j) {
    if (memo.count({a, j})) continue;
    SymFuncP e;
    if (j == 0) {
      e = SymFuncP::constant(TSeries(1));
    } else {
      for (int n = 1; n <= j; ++n)
        e += (Rational(a) * TSeries::one_minus(n)) * SymFuncP::p(n) * memo.at({a, j - n});
      e = TSeries(Rational(1, static_cast<unsigned long>(j))) * e;
    }
    memo.emplace(std::make_pair(a, j), std::move(e));
  }
  return memo.at({a, k});
}

namespace {

// p_n -> p_n - a w^n applied to f, returned as coefficients of w^d.
std::vector<SymFuncP> shifted_power_sums(int a, const SymFuncP& f) {
  std::vector<SymFuncP> out(static_cast<size_t>(std::max(f.max_degree(), 0) + 1), SymFuncP(f.degree_cap()));
  for (const auto& [lam, c] : f.terms()) {
    std::map<int, SymFuncP> cur{{0, SymFuncP::constant(c, f.degree_cap())}};
    for (int n : lam) {
      std::map<int, SymFuncP> next;
      for (const auto& [d, g] : cur) {
        next[d] += g * SymFuncP::p(n, f.degree_cap());
        next[d + n] += TSeries(Rational(-a)) * g;
      }
      cur = std::move(next);
    }
    for (auto& [d, g] : cur) out[static_cast<size_t>(d)] += g;
  }
  return out;
}

// Per-charge data needed to read off coefficients of Y(e^{a alpha}, w) v.
struct YPlan {
  struct Part {
    int charge;
    int max_degree;
    std::vector<SymFuncP> shifted;  // E- applied, by power of w^{-1}
  };
  int a = 0;
  std::vector<Part> parts;

  YPlan(int a_, const FockVector& v, int t_order) : a(a_) {
    for (const auto& [m, f] : v.components()) {
      auto sh = shifted_power_sums(a, f);
      for (auto& g : sh) g = g.truncated(t_order);
      parts.push_back({m, f.max_degree(), std::move(sh)});
    }
  }

  int lowest_power() const {
    int lo = static_cast<int>(kInf);
    for (const auto& p : parts) lo = std::min(lo, a * p.charge - p.max_degree);
    return lo;
  }

  FockVector coefficient(int j, const EngineOptions& opt) const {
    FockVector out;
    for (const auto& p : parts) {
      if (p.max_degree + j - a * p.charge > opt.degree_cap)
        throw DegreeCapExceeded("Y: coefficient of w^" + std::to_string(j) + " needs weight " +
                                std::to_string(p.max_degree + j - a * p.charge) + " above cap " +
                                std::to_string(opt.degree_cap));
      SymFuncP acc;
      for (size_t d = 0; d < p.shifted.size(); ++d) {
        const int k = j - a * p.charge + static_cast<int>(d);
        if (k < 0 || p.shifted[d].is_zero()) continue;
        acc += eplus_coefficient(a, k).truncated(opt.t_order) * p.shifted[d];
      }
      out.add(p.charge + a, acc.truncated(opt.t_order));
    }
    return out;
  }
};

}  // namespace

FockChunk Eplus_apply(int a, Var var, const FockVector& v, int max_power, const EngineOptions& opt) {
  Window w = Window::zero();
  w.set(var, 0, max_power);
  FockChunk out(w, Window::zero().set(var, 0, kInf).set_degree(0, kInf));
  for (int k = 0; k <= max_power; ++k)
    out.accumulate(Monomial::of(var, k),
                   (FockVector::of(0, eplus_coefficient(a, k).truncated(opt.t_order)) * v).truncated(opt.t_order));
  return out;
}

FockChunk Eminus_apply(int a, Var var, const FockVector& v) {
  FockChunk::Terms terms;
  for (const auto& [m, f] : v.components()) {
    const auto sh = shifted_power_sums(a, f);
    for (size_t d = 0; d < sh.size(); ++d) {
      auto& slot = terms[Monomial::of(var, -static_cast<int>(d))];
      slot += FockVector::of(m, sh[d]);
    }
  }
  return FockChunk::polynomial(std::move(terms));
}

FockChunk Y_apply(int a, Var var, const FockVector& v, const Window& window, const EngineOptions& opt) {
  check_charge(a);
  const YPlan plan(a, v, opt.t_order);
  const Bound lo = v.is_zero() ? 0 : plan.lowest_power();
  Window support = Window::zero();
  support.set(var, lo, kInf).set_degree(lo, kInf);
  FockChunk out(window, support);
  const Window domain = window.intersect(support);
  if (!domain.finite()) throw WindowUnderflow("Y_apply: requested window is unbounded above");
  domain.for_each([&](const Monomial& m) { out.accumulate(m, plan.coefficient(m[var], opt)); });
  return out;
}

FockChunk Y_apply(int a, Var var, const FockChunk& series, const Window& window, const EngineOptions& opt) {
  check_charge(a);
  const Window& in_support = series.support();
  if (in_support.lo_of(var) != 0 || in_support.hi_of(var) != 0)
    throw std::invalid_argument("Y_apply: input series already involves " + std::string(var_name(var)));
  Window support = in_support;
  support.set(var, -kInf, kInf).set_degree(-kInf, kInf);
  FockChunk out(window, support);
  const Window domain = window.intersect(support);
  if (!domain.finite()) throw WindowUnderflow("Y_apply: requested window is unbounded");
  std::map<Monomial, YPlan> plans;
  domain.for_each([&](const Monomial& m) {
    Monomial base = m;
    base[var] = 0;
    if (!in_support.contains(base)) return;
    if (!series.window().contains(base))
      throw WindowUnderflow("Y_apply: input coefficient of " + base.to_string() + " is outside the series window");
    auto it = plans.find(base);
    if (it == plans.end()) it = plans.emplace(base, YPlan(a, series.coefficient(base), opt.t_order)).first;
    out.accumulate(m, it->second.coefficient(m[var], opt));
  });
  return out;
}

SymFuncP jing_Q(const Partition& lambda) {
  if (!is_partition(lambda)) throw std::invalid_argument("jing_Q: not a partition");
  SymFuncP v = SymFuncP::constant(TSeries(1));
  for (auto it = lambda.rbegin(); it != lambda.rend(); ++it) {
    const auto sh = shifted_power_sums(1, v);
    SymFuncP next;
    for (size_t k = 0; k < sh.size(); ++k)
      if (!sh[k].is_zero()) next += eplus_coefficient(1, *it + static_cast<int>(k)) * sh[k];
    v = std::move(next);
  }
  return v;
}

ClosedForm ClosedForm::substitute(const Substitution& s) const {
  ClosedForm r;
  r.prefactor = prefactor.substitute(s);
  for (const auto& [a, arg] : exponentials) {
    Form image = s.apply(arg);
    if (!image.is_zero()) r.exponentials.emplace_back(a, std::move(image));
  }
  r.charge = charge;
  return r;
}

std::string ClosedForm::to_string() const {
  std::ostringstream os;
  os << prefactor.to_string();
  for (const auto& [a, arg] : exponentials) os << " * E+(" << a << ", " << arg.to_string() << ")";
  os << " * e^" << charge << "a";
  return os.str();
}

ClosedForm X2_form(int a, int b) {
  check_charge(a);
  check_charge(b);
  ClosedForm cf;
  cf.prefactor = two_point(z(Var::z1), z(Var::z2)).pow(a * b);
  cf.exponentials = {{a, z(Var::z1)}, {b, z(Var::z2)}};
  cf.charge = a + b;
  return cf;
}

ClosedForm X3_form(int a, int b, int c) {
  check_charge(a);
  check_charge(b);
  check_charge(c);
  const Form z1 = z(Var::z1), z2 = z(Var::z2), z3 = z(Var::z3);
  ClosedForm cf;
  cf.prefactor = two_point(z1, z2).pow(a * b) * two_point(z1, z3).pow(a * c) * two_point(z2, z3).pow(b * c);
  cf.exponentials = {{a, z1}, {b, z2}, {c, z3}};
  cf.charge = a + b + c;
  return cf;
}

ClosedForm iterated_form(int a, int b, int c) {
  check_charge(a);
  check_charge(b);
  check_charge(c);
  const Form z2 = z(Var::z2), z3 = z(Var::z3);
  ClosedForm cf;
  cf.prefactor = FactorProduct(z3, a * b) * FactorProduct(z2 + z3, a * c) * FactorProduct(z2, b * c);
  cf.exponentials = {{a, z2 + z3}, {b, z2}};
  cf.charge = a + b + c;
  return cf;
}

namespace {

Window eplus_support(const Form& arg) {
  if (arg.homogeneous_degree() != 1) throw std::invalid_argument("E+ argument must be homogeneous of degree 1: " + arg.to_string());
  Window s = Window::zero();
  for (const auto& [m, c] : arg.terms())
    for (Var v : kAllVars) {
      if (m[v] < 0) throw std::invalid_argument("E+ argument must be a polynomial: " + arg.to_string());
      if (m[v] > 0) s.set(v, 0, kInf);
    }
  return s.set_degree(0, kInf);
}

FockChunk eplus_series(int a, const Form& arg, const Window& window, const EngineOptions& opt) {
  const Window support = eplus_support(arg);
  FockChunk out(window, support);
  const Window domain = window.intersect(support).tightened();
  if (domain.empty()) return out;
  if (!domain.finite()) throw WindowUnderflow("E+ expansion: window " + window.to_string() + " is unbounded on the support");
  const int top = static_cast<int>(domain.deg_hi);
  if (top > opt.degree_cap)
    throw DegreeCapExceeded("E+ expansion needs weight " + std::to_string(top) + " above cap " + std::to_string(opt.degree_cap));
  Form power = Form::constant(TSeries(1));
  for (int k = 0; k <= top; ++k) {
    if (k) power = power * arg;
    if (k < domain.deg_lo) continue;
    const FockVector ek = FockVector::of(0, eplus_coefficient(a, k).truncated(opt.t_order));
    for (const auto& [m, c] : power.terms())
      if (domain.contains(m)) out.accumulate(m, (c.truncated(opt.t_order) * ek).truncated(opt.t_order));
  }
  return out;
}

}  // namespace

Window closed_support(const ClosedForm& cf, const RegionOrder& region, int t_order) {
  Window s = expansion_support(cf.prefactor, region, t_order);
  for (const auto& [a, arg] : cf.exponentials) s = s.plus(eplus_support(arg));
  return s;
}

FockChunk expand_closed(const ClosedForm& cf, const RegionOrder& region, const Window& window, const EngineOptions& opt) {
  const size_t n = cf.exponentials.size();
  std::vector<Window> supports;
  for (const auto& [a, arg] : cf.exponentials) supports.push_back(eplus_support(arg));
  const Window prefactor_support = expansion_support(cf.prefactor, region, opt.t_order);

  // suffix[i]: support of the prefactor times the exponentials from i on
  std::vector<Window> suffix(n + 1, prefactor_support);
  for (size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1].plus(supports[i]);

  FockChunk product = FockChunk::constant(FockVector::vacuum());
  for (size_t i = 0; i < n; ++i) {
    const auto& [a, arg] = cf.exponentials[i];
    const Window others = i + 1 < n ? suffix[i + 1] : prefactor_support;
    Window before = Window::zero();
    for (size_t j = 0; j < i; ++j) before = before.plus(supports[j]);
    const FockChunk factor = eplus_series(a, arg, required_window(window, before.plus(others)), opt);
    product = i == 0 ? factor : laurent_mul(product, factor, required_window(window, others));
  }
  Window exps_support = Window::zero();
  for (const auto& s : supports) exps_support = exps_support.plus(s);
  const ScalarChunk scalar = expand(cf.prefactor, region, required_window(window, exps_support), opt.t_order);
  const FockChunk full = laurent_mul(scalar, product, window);
  const int charge = cf.charge;
  const int T = opt.t_order;
  return full.map([&](const FockVector& v) { return v.charge_shifted(charge).truncated(T); });
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::operator_product: return "operator_product";
    case Provenance::closed_form: return "closed_form";
    case Provenance::substitution: return "substitution";
  }
  return "?";
}

VertexSeries X2_closed(int a, int b, const RegionOrder& region, const Window& window, const EngineOptions& opt) {
  ClosedForm cf = X2_form(a, b);
  return {expand_closed(cf, region, window, opt), region, Provenance::closed_form, std::move(cf)};
}

VertexSeries X3_closed(int a, int b, int c, const RegionOrder& region, const Window& window, const EngineOptions& opt) {
  ClosedForm cf = X3_form(a, b, c);
  return {expand_closed(cf, region, window, opt), region, Provenance::closed_form, std::move(cf)};
}

VertexSeries shift_substitute(const VertexSeries& vs, const Substitution& rule, const RegionOrder& region,
                              const Window& window, const EngineOptions& opt) {
  if (!vs.closed) throw NotClosedForm("shift_substitute: series has no closed form (" + to_string(vs.provenance) + ")");
  ClosedForm cf = vs.closed->substitute(rule);
  return {expand_closed(cf, region, window, opt), region, Provenance::substitution, std::move(cf)};
}

Window project_out(const Window& w, Var v) {
  Window r = w;
  r.set(v, 0, 0);
  r.set_degree(sat_add(w.deg_lo, sat_neg(w.hi_of(v))), sat_add(w.deg_hi, sat_neg(w.lo_of(v))));
  return r;
}

VertexSeries operator_product(int a, Var outer, int b, Var inner, int c, const Window& window, const EngineOptions& opt) {
  check_charge(c);
  // the weight slab of `window` bounds the output; intermediate states may be heavier
  EngineOptions inner_opt = opt;
  inner_opt.degree_cap = SymFuncP::kNoCap;
  const FockChunk right = Y_apply(b, inner, FockVector::lattice(c), project_out(window, outer), inner_opt);
  return {Y_apply(a, outer, right, window, opt), RegionOrder{outer, inner}, Provenance::operator_product, std::nullopt};
}

}  // namespace hdqva
