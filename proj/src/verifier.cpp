#include "hdqva/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "hdqva/errors.hpp"
#include "hdqva/xpoly.hpp"

namespace hdqva {

namespace {

const Form z1 = Form::var(Var::z1), z2 = Form::var(Var::z2), z3 = Form::var(Var::z3);

std::string to_text(const TSeries& c) { return c.to_string(); }
std::string to_text(const FockVector& v) { return v.to_string(); }

// Records comparisons into a report; keeps the first mismatch.
class Comparer {
 public:
  explicit Comparer(CheckReport& r) : r_(r) {}

  template <class C>
  void chunks(const std::string& stage, const LaurentChunk<C>& lhs, const LaurentChunk<C>& rhs, const Window& w) {
    w.for_each([&](const Monomial& m) { values(stage + " at " + m.to_string(), value(lhs, m), value(rhs, m)); });
  }

  template <class C>
  void values(const std::string& where, const C& lhs, const C& rhs) {
    ++r_.compared;
    if (!is_zero(lhs) || !is_zero(rhs)) ++r_.nonzero;
    if (!r_.first_mismatch && !(lhs == rhs)) r_.first_mismatch = Mismatch{where, to_text(lhs), to_text(rhs)};
  }

 private:
  template <class C>
  static C value(const LaurentChunk<C>& c, const Monomial& m) {
    if (!c.support().contains(m)) return C{};
    if (!c.window().contains(m))
      throw WindowUnderflow("comparison needs " + m.to_string() + " outside the computed window " + c.window().to_string());
    return c.coefficient(m);
  }

  CheckReport& r_;
};

CheckReport run_check(const std::string& id, const CheckParams& p, const std::function<void(Comparer&)>& body) {
  CheckReport r;
  r.check_id = id;
  r.params = p;
  const auto start = std::chrono::steady_clock::now();
  try {
    Comparer cmp(r);
    body(cmp);
    if (r.compared == 0) r.error = "no monomials compared";
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.passed = !r.error && !r.first_mismatch;
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// factor * (closed form) on w, each side computed on the window the other requires.
FockChunk scalar_times_closed(const FactorProduct& scalar, const ClosedForm& cf, const RegionOrder& region,
                              const Window& w, const EngineOptions& opt) {
  const Window s_support = expansion_support(scalar, region, opt.t_order);
  const Window c_support = closed_support(cf, region, opt.t_order);
  const ScalarChunk s = expand(scalar, region, required_window(w, c_support), opt.t_order);
  const FockChunk c = expand_closed(cf, region, required_window(w, s_support), opt);
  return laurent_mul(s, c, w);
}

// delta(x, y) times a series given by its support and a builder for any window.
FockChunk delta_times(const Form& x, const Form& y, const RegionOrder& region, const Window& other_support,
                      const std::function<FockChunk(const Window&)>& other, const Window& w, int t_order) {
  const Window d_support = delta_support(x, y, region);
  const FockChunk rest = other(required_window(w, d_support));
  const ScalarChunk d = formal_delta(x, y, region, required_window(w, other_support), t_order);
  return laurent_mul(d, rest, w);
}

FactorProduct braiding_scalar(int a, int b, const Mutations& mut) {
  // S^{tau}_{z2,z1} acting on b (x) a
  FactorProduct s = S_tau(b, a).scalar.substitute(Substitution::swap(Var::z1, Var::z2));
  return mut.flip_braiding_sign ? -s : s;
}

// S^{(z2)}_{z3,0}: the translation scalar with (z1, z2, gamma) -> (z3, 0, z2).
FactorProduct translation_scalar_at_origin(int a, int b) {
  return S_gamma(a, b).scalar.substitute(Substitution{{Var::z1, z3}, {Var::z2, Form()}, {Var::g, z2}});
}

}  // namespace

Window comparison_window(const CheckParams& p, std::initializer_list<Var> vars, int prefactor_degree) {
  Window w = Window::symmetric_box(vars, p.window);
  w.set_degree(-kInf, p.degree_cap + prefactor_degree);
  return w;
}

CheckReport check_vacuum(const CheckParams& p) {
  return run_check("vacuum", p, [&](Comparer& cmp) {
    const EngineOptions opt = p.engine();
    const DOptions dopt = p.d_options();
    const RegionOrder region{Var::z1, Var::z2};
    const Window w = comparison_window(p, {Var::z1, Var::z2}, 0);
    const int order = std::min(p.window, p.degree_cap);

    cmp.chunks("X(e^a (x) 1)", X2_closed(1, 0, region, w, opt).chunk, exp_D(FockVector::lattice(1), Var::z1, order, dopt), w);
    cmp.chunks("X(1 (x) e^a)", X2_closed(0, 1, region, w, opt).chunk, exp_D(FockVector::lattice(1), Var::z2, order, dopt), w);
    cmp.chunks("X(1 (x) 1)", X2_closed(0, 0, region, w, opt).chunk, FockChunk::constant(FockVector::vacuum()), w);

    const int top = std::min(std::max(6, p.window), p.degree_cap);
    Window wy = Window::zero();
    wy.set(Var::z1, -p.window, top);
    cmp.chunks("Y(e^a,z)1", Y_apply(1, Var::z1, FockVector::vacuum(), wy, opt), exp_D(FockVector::lattice(1), Var::z1, top, dopt), wy);
  });
}

FockChunk commutativity_lhs(const CheckParams& p, const Window& w) {
  return X2_closed(p.charge_a, p.charge_b, RegionOrder{Var::z1, Var::z2}, w, p.engine()).chunk;
}

FockChunk commutativity_rhs(const CheckParams& p, const Window& w) {
  const int a = p.charge_a, b = p.charge_b;
  const ClosedForm swapped = X2_form(b, a).substitute(Substitution::swap(Var::z1, Var::z2));
  return scalar_times_closed(braiding_scalar(a, b, p.mutations), swapped, RegionOrder{Var::z1, Var::z2}, w, p.engine());
}

CheckReport check_braided_commutativity(const CheckParams& p) {
  return run_check("braided-commutativity", p, [&](Comparer& cmp) {
    if (p.charge_a > 2 || p.charge_b > 2) throw UnsupportedCharge("braided commutativity is shipped for charges <= 2");
    const Window w = comparison_window(p, {Var::z1, Var::z2}, p.charge_a * p.charge_b);
    cmp.chunks("X(a,b) vs S X(b,a)", commutativity_lhs(p, w), commutativity_rhs(p, w), w);
  });
}

CheckReport check_translation_covariance(const CheckParams& p) {
  return run_check("translation", p, [&](Comparer& cmp) {
    if (p.gamma_order < 1) throw std::invalid_argument("translation covariance needs gamma order >= 1");
    const int a = p.charge_a, b = p.charge_b;
    const EngineOptions opt = p.engine();
    const RegionOrder region{Var::z1, Var::z2, Var::g};
    Window w = comparison_window(p, {Var::z1, Var::z2}, a * b);
    w.set(Var::g, 0, p.gamma_order);

    const ClosedForm x2 = X2_form(a, b);
    const FockChunk inner = scalar_times_closed(S_gamma(a, b).scalar, x2, region, w, opt);
    const FockChunk lhs = exp_D(inner, Var::g, w, p.d_options());
    const FockChunk rhs = expand_closed(x2.substitute(Substitution::shift_by_gamma({Var::z1, Var::z2})), region, w, opt);
    cmp.chunks("e^{gD} X S^g vs X(z+g)", lhs, rhs, w);
  });
}

CheckReport check_expansion_consistency(const CheckParams& p) {
  return run_check("expansion", p, [&](Comparer& cmp) {
    const int a = p.charge_a, b = p.charge_b, c = 1;
    const EngineOptions opt = p.engine();
    const ClosedForm x3 = X3_form(a, b, c).substitute(Substitution{{Var::z3, Form()}});
    const Window w = comparison_window(p, {Var::z1, Var::z2}, a * b + a * c + b * c);

    // Y(a,z1) Y(b,z2) c against |z1| > |z2|
    const RegionOrder r12{Var::z1, Var::z2};
    cmp.chunks("line 1", operator_product(a, Var::z1, b, Var::z2, c, w, opt).chunk, expand_closed(x3, r12, w, opt), w);

    // Y(b,z2) Y(a,z1) c times the braiding scalar against |z2| > |z1|
    const RegionOrder r21{Var::z2, Var::z1};
    const FactorProduct s = braiding_scalar(a, b, p.mutations);
    const Window s_support = expansion_support(s, r21, opt.t_order);
    const FockChunk swapped = operator_product(b, Var::z2, a, Var::z1, c, required_window(w, s_support), opt).chunk;
    const ScalarChunk s_chunk = expand(s, r21, required_window(w, swapped.support()), opt.t_order);
    cmp.chunks("line 2", laurent_mul(s_chunk, swapped, w), expand_closed(x3, r21, w, opt), w);

    // third slot the vacuum: e^{z2 D} Y(a,z3) b times S^{(z2)}_{z3,0} against |z2| > |z3|
    const RegionOrder r23{Var::z2, Var::z3};
    const Window w3 = comparison_window(p, {Var::z2, Var::z3}, a * b);
    const ClosedForm shifted = X2_form(a, b).substitute(Substitution{{Var::z1, z2 + z3}, {Var::z2, z2}});
    const FactorProduct t_scalar = translation_scalar_at_origin(a, b);
    const Window t_support = expansion_support(t_scalar, r23, opt.t_order);
    const Window translated_window = required_window(w3, t_support);
    Window translated_domain = translated_window.intersect(Window::everything().set(Var::z2, 0, kInf)).tightened();
    Window y_window = Window::zero();
    y_window.set(Var::z3, -kInf, translated_domain.hi_of(Var::z3)).set_degree(-kInf, translated_domain.deg_hi);
    const FockChunk y = Y_apply(a, Var::z3, FockVector::lattice(b), y_window, opt);
    const FockChunk translated = exp_D(y, Var::z2, translated_window, p.d_options());
    const ScalarChunk t_chunk = expand(t_scalar, r23, required_window(w3, translated.support()), opt.t_order);
    cmp.chunks("line 3", expand_closed(shifted, r23, w3, opt), laurent_mul(t_chunk, translated, w3), w3);
  });
}

CheckReport check_braided_jacobi(const CheckParams& p) {
  return run_check("jacobi", p, [&](Comparer& cmp) {
    const int a = p.charge_a, b = p.charge_b, c = 1;
    const EngineOptions opt = p.engine();
    const int T = opt.t_order;
    const Window w = comparison_window(p, {Var::z1, Var::z2, Var::z3}, a * b + a * c + b * c - 1);
    const ClosedForm x3 = X3_form(a, b, c).substitute(Substitution{{Var::z3, Form()}});

    auto closed_term = [&](const RegionOrder& region) {
      return delta_times(z1 - z2, z3, region, closed_support(x3, region, T),
                         [&](const Window& win) { return expand_closed(x3, region, win, opt); }, w, T);
    };
    const FockChunk t1 = closed_term(RegionOrder{Var::z1, Var::z2});
    const FockChunk t2 = closed_term(RegionOrder{Var::z2, Var::z1});

    const RegionOrder r23{Var::z2, Var::z3};
    const ClosedForm iterated = iterated_form(a, b, c);
    const bool drop = p.mutations.drop_translation_map_in_jacobi;
    const FactorProduct scalar = drop ? FactorProduct() : translation_scalar_at_origin(a, b);
    const Window g_support = expansion_support(scalar, r23, T).plus(closed_support(iterated, r23, T));
    const FockChunk t3 = delta_times(z1, z2 + z3, r23, g_support,
                                     [&](const Window& win) { return scalar_times_closed(scalar, iterated, r23, win, opt); }, w, T);
    cmp.chunks("jacobi", t1 - t2, t3, w);
  });
}

CheckReport check_classical_limit(const CheckParams& p) {
  CheckParams q = p;
  q.t_order = 0;
  return run_check("classical", q, [&](Comparer& cmp) {
    const EngineOptions opt = q.engine();
    const DOptions dopt = q.d_options();
    const int w = q.window;

    // [D, Y(e^a, z)] v = d/dz Y(e^a, z) v
    Window wy = Window::zero();
    wy.set(Var::z1, -w, w + 1);
    Window wc = Window::zero();
    wc.set(Var::z1, -w, w);
    const std::vector<std::pair<std::string, FockVector>> states{
        {"1", FockVector::vacuum()}, {"e^a", FockVector::lattice(1)}, {"p1", FockVector::of(0, SymFuncP::p(1))}};
    for (const auto& [name, v] : states) {
      const FockChunk y = Y_apply(1, Var::z1, v, wy, opt);
      const FockChunk y_dv = Y_apply(1, Var::z1, apply_D(v, dopt), wy, opt);
      FockChunk commutator(wc, Window::everything()), derivative(wc, Window::everything());
      wc.for_each([&](const Monomial& m) {
        const int j = m[Var::z1];
        const Monomial next = Monomial::of(Var::z1, j + 1);
        commutator.accumulate(m, (apply_D(y.coefficient(m), dopt) - y_dv.coefficient(m)).truncated(0));
        derivative.accumulate(m, TSeries(j + 1) * y.coefficient(next));
      });
      cmp.chunks("[D,Y] on " + name, commutator, derivative, wc);
    }

    // Y(z1) Y(z2) 1 + Y(z2) Y(z1) 1 = 0
    const Window w2 = comparison_window(q, {Var::z1, Var::z2}, 1);
    const FockChunk sum = operator_product(1, Var::z1, 1, Var::z2, 0, w2, opt).chunk +
                          operator_product(1, Var::z2, 1, Var::z1, 0, w2, opt).chunk;
    cmp.chunks("anticommutativity", sum, FockChunk::polynomial({}), w2);
  });
}

CheckReport check_hl_against_oracle(int max_weight, const CheckParams& p) {
  CheckParams q = p;
  q.t_order = std::max(p.t_order, kOracleTOrder);
  return run_check("hl-oracle", q, [&](Comparer& cmp) {
    if (max_weight < 1 || max_weight > 7) throw std::invalid_argument("hl-oracle: max weight must be in 1..7");
    for (int n = 1; n <= max_weight; ++n)
      for (const auto& lam : partitions_of(n)) {
        const XPolynomial lhs = p_to_x(jing_Q(lam), n).truncated(q.t_order);
        const XPolynomial rhs = hl_Q_oracle(lam, n).truncated(q.t_order);
        std::set<XPolynomial::Exponents> keys;
        for (const auto& [e, c] : lhs.terms()) keys.insert(e);
        for (const auto& [e, c] : rhs.terms()) keys.insert(e);
        for (const auto& e : keys) {
          std::ostringstream where;
          where << "Q" << to_string(lam) << " x^(";
          for (int i = 0; i < n; ++i) where << (i ? "," : "") << static_cast<int>(e[static_cast<size_t>(i)]);
          where << ")";
          cmp.values(where.str(), lhs.coefficient(e), rhs.coefficient(e));
        }
      }
  });
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids{"braided-commutativity", "classical", "expansion", "hl-oracle",
                                            "jacobi", "translation", "vacuum"};
  return ids;
}

std::vector<CheckReport> run_checks(const std::vector<std::string>& ids, const CheckParams& p, int hl_max_weight) {
  std::set<std::string> selected;
  for (const auto& id : ids) {
    if (id == "all") {
      selected.insert(check_ids().begin(), check_ids().end());
    } else if (std::find(check_ids().begin(), check_ids().end(), id) != check_ids().end()) {
      selected.insert(id);
    } else {
      throw std::invalid_argument("unknown check '" + id + "'");
    }
  }
  std::vector<CheckReport> out;
  for (const auto& id : selected) {
    if (id == "braided-commutativity") out.push_back(check_braided_commutativity(p));
    else if (id == "classical") out.push_back(check_classical_limit(p));
    else if (id == "expansion") out.push_back(check_expansion_consistency(p));
    else if (id == "hl-oracle") out.push_back(check_hl_against_oracle(hl_max_weight, p));
    else if (id == "jacobi") out.push_back(check_braided_jacobi(p));
    else if (id == "translation") out.push_back(check_translation_covariance(p));
    else if (id == "vacuum") out.push_back(check_vacuum(p));
  }
  return out;
}

}  // namespace hdqva
