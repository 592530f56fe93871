#include "hdqva/expand.hpp"

#include <algorithm>

#include "hdqva/errors.hpp"

namespace hdqva {

namespace {

using Terms = std::map<Monomial, TSeries>;

struct Ratio {
  Monomial mono;
  TSeries coeff;
  bool t_small = false;
  Var level = Var::z1;  // leading region variable of a t-free ratio
};

struct Factor {
  int exponent = 0;
  bool polynomial = false;
  Terms poly;  // form^exponent, polynomial factors only
  Monomial dominant;
  TSeries dominant_inv;
  std::vector<Ratio> ratios;
};

// Sign of the first region variable where a and b differ.
int region_compare(const Monomial& a, const Monomial& b, const RegionOrder& region) {
  for (Var v : region.vars())
    if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
  return 0;
}

std::optional<Var> leading_variable(const Monomial& m, const RegionOrder& region) {
  for (Var v : region.vars())
    if (m[v] != 0) return v;
  return std::nullopt;
}

std::pair<Monomial, TSeries> dominant_term(const Form& f, const RegionOrder& region) {
  int vmin = -1;
  for (const auto& [m, c] : f.terms()) vmin = vmin < 0 ? c.valuation() : std::min(vmin, c.valuation());
  const std::pair<const Monomial, TSeries>* best = nullptr;
  bool tie = false;
  for (const auto& term : f.terms()) {
    if (term.second.valuation() != vmin) continue;
    if (!best) {
      best = &term;
      continue;
    }
    const int c = region_compare(term.first, best->first, region);
    if (c > 0) {
      best = &term;
      tie = false;
    } else if (c == 0) {
      tie = true;
    }
  }
  if (tie) throw NonExpandableFactor("no dominant term of " + f.to_string() + " in region " + region.to_string());
  if (vmin > 0) throw NonExpandableFactor("dominant term of " + f.to_string() + " is not a unit in t");
  return {best->first, best->second};
}

Terms multiply(const Terms& a, const Terms& b, const Window& keep) {
  Terms r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      const Monomial m = ma * mb;
      if (!keep.contains(m)) continue;
      TSeries c = ca * cb;
      if (c.is_zero()) continue;
      auto [it, inserted] = r.try_emplace(m, std::move(c));
      if (!inserted) {
        it->second += ca * cb;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  return r;
}

Window hull_of(const Terms& terms) {
  Window w = Window::none();
  for (const auto& [m, c] : terms) w = w.hull(Window::point(m));
  return w;
}

Factor analyse(const Form& f, int e, const RegionOrder& region, int t_order) {
  Factor out;
  out.exponent = e;
  if (e > 0) {
    out.polynomial = true;
    const Form power = f.pow(e);
    for (const auto& [m, c] : power.terms()) {
      TSeries ct = c.truncated(t_order);
      if (!ct.is_zero()) out.poly.emplace(m, std::move(ct));
    }
    return out;
  }
  auto [m0, c0] = dominant_term(f, region);
  if (m0[Var::g] > 0) throw NonExpandableFactor("cannot invert a power of g in " + f.to_string());
  out.dominant = m0;
  out.dominant_inv = ts_invert(c0.truncated(t_order), t_order);
  for (const auto& [m, c] : f.terms()) {
    if (m == m0) continue;
    Ratio r;
    r.mono = m / m0;
    r.coeff = (c * out.dominant_inv).truncated(t_order);
    if (r.coeff.is_zero()) continue;
    r.t_small = r.coeff.valuation() >= 1;
    if (!r.t_small) {
      auto lead = leading_variable(r.mono, region);
      if (!lead || r.mono[*lead] >= 0)
        throw NonExpandableFactor("no dominant term of " + f.to_string() + " in region " + region.to_string());
      r.level = *lead;
    }
    out.ratios.push_back(std::move(r));
  }
  return out;
}

Window factor_support(const Factor& f, int t_order) {
  if (f.polynomial) return hull_of(f.poly);
  Window w = Window::point(f.dominant.pow(f.exponent));
  Bound dlo = 0, dhi = 0;
  bool dlo_inf = false, dhi_inf = false;
  for (Var v : kAllVars) {
    Bound lo = 0, hi = 0;
    bool lo_inf = false, hi_inf = false;
    for (const auto& r : f.ratios) {
      const int x = r.mono[v];
      if (r.t_small) {
        lo = std::min<Bound>(lo, Bound{t_order} * x);
        hi = std::max<Bound>(hi, Bound{t_order} * x);
      } else {
        lo_inf |= x < 0;
        hi_inf |= x > 0;
      }
    }
    w.set(v, lo_inf ? -kInf : w.lo_of(v) + lo, hi_inf ? kInf : w.hi_of(v) + hi);
  }
  for (const auto& r : f.ratios) {
    const int x = r.mono.degree();
    if (r.t_small) {
      dlo = std::min<Bound>(dlo, Bound{t_order} * x);
      dhi = std::max<Bound>(dhi, Bound{t_order} * x);
    } else {
      dlo_inf |= x < 0;
      dhi_inf |= x > 0;
    }
  }
  w.set_degree(dlo_inf ? -kInf : w.deg_lo + dlo, dhi_inf ? kInf : w.deg_hi + dhi);
  return w;
}

std::vector<Factor> analyse_all(const FactorProduct& fp, const RegionOrder& region, int t_order) {
  std::vector<Factor> fs;
  for (const auto& [f, e] : fp.factors()) fs.push_back(analyse(f, e, region, t_order));
  return fs;
}

Window total_support(const FactorProduct& fp, const std::vector<Factor>& fs, int t_order) {
  if (fp.is_zero()) return Window::none();
  Window w = Window::point(Monomial{});
  for (const auto& f : fs) w = w.plus(factor_support(f, t_order));
  if (const auto d = fp.homogeneous_degree()) w.set_degree(*d, *d);
  return w;
}

// Upper bound on the total number of ratio factors in any term that lands in `box`.
long long ratio_budget(const std::vector<Factor>& fs, const RegionOrder& region, const Window& box, int t_order) {
  std::array<long long, kNumVars> base{}, max_poly{}, max_t{};
  std::vector<Var> levels;
  for (const auto& f : fs) {
    if (f.polynomial) {
      for (Var v : kAllVars) {
        int mx = f.poly.begin()->first[v];
        for (const auto& [m, c] : f.poly) mx = std::max(mx, m[v]);
        max_poly[static_cast<size_t>(index(v))] += mx;
      }
      continue;
    }
    for (Var v : kAllVars) base[static_cast<size_t>(index(v))] += Bound{f.exponent} * f.dominant[v];
    for (const auto& r : f.ratios) {
      if (r.t_small) {
        for (Var v : kAllVars)
          max_t[static_cast<size_t>(index(v))] = std::max<long long>(max_t[static_cast<size_t>(index(v))], r.mono[v]);
      } else if (std::find(levels.begin(), levels.end(), r.level) == levels.end()) {
        levels.push_back(r.level);
      }
    }
  }
  std::sort(levels.begin(), levels.end(), [&](Var a, Var b) { return region.rank(a) < region.rank(b); });

  long long budget = t_order;
  std::vector<long long> counts;
  for (size_t i = 0; i < levels.size(); ++i) {
    const Var v = levels[i];
    const size_t k = static_cast<size_t>(index(v));
    if (box.lo_of(v) <= -kInf) throw WindowUnderflow(std::string("expand: window leaves ") + std::string(var_name(v)) + " unbounded below");
    long long bound = base[k] + max_poly[k] + t_order * max_t[k] - box.lo_of(v);
    for (size_t l = 0; l < i; ++l) {
      long long mx = 0;
      for (const auto& f : fs)
        for (const auto& r : f.ratios)
          if (!r.t_small && r.level == levels[l]) mx = std::max<long long>(mx, r.mono[v]);
      bound += counts[l] * mx;
    }
    counts.push_back(std::max<long long>(0, bound));
    budget += counts.back();
  }
  return budget;
}

// (1 + R)^e for negative e, truncated after `budget` ratio factors.
Terms binomial_series(const Factor& f, long long budget, int t_order, const Window& keep) {
  Terms ratio;
  for (const auto& r : f.ratios) ratio.emplace(r.mono, r.coeff);
  Terms out{{Monomial{}, TSeries(1).truncated(t_order)}};
  Terms power{{Monomial{}, TSeries(1).truncated(t_order)}};
  Rational binom = 1;
  for (long long k = 1; k <= budget && !ratio.empty(); ++k) {
    power = multiply(power, ratio, Window::everything());
    if (power.empty()) break;
    binom *= Rational(static_cast<long>(f.exponent - (k - 1))) / Rational(static_cast<long>(k));
    for (const auto& [m, c] : power) {
      if (!keep.contains(m)) continue;
      auto [it, inserted] = out.try_emplace(m, c * binom);
      if (!inserted) {
        it->second += c * binom;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  Terms scaled;
  TSeries scale = TSeries(1).truncated(t_order);
  for (int i = 0; i < -f.exponent; ++i) scale = scale * f.dominant_inv;
  const Monomial shift = f.dominant.pow(f.exponent);
  for (const auto& [m, c] : out) {
    TSeries x = c * scale;
    if (!x.is_zero()) scaled.emplace(m * shift, std::move(x));
  }
  return scaled;
}

}  // namespace

Window expansion_support(const FactorProduct& fp, const RegionOrder& region, int t_order) {
  return total_support(fp, analyse_all(fp, region, t_order), t_order);
}

ScalarChunk expand(const FactorProduct& fp, const RegionOrder& region, const Window& window, int t_order) {
  const auto fs = analyse_all(fp, region, t_order);
  const Window support = total_support(fp, fs, t_order);
  ScalarChunk out(window, support);
  const Window box = window.intersect(support).tightened();
  if (box.empty()) return out;

  const long long budget = ratio_budget(fs, region, box, t_order);
  std::vector<Window> supports;
  for (const auto& f : fs) supports.push_back(factor_support(f, t_order));
  // suffix[i]: support of the product of factors i..end
  std::vector<Window> suffix(fs.size() + 1, Window::point(Monomial{}));
  for (size_t i = fs.size(); i-- > 0;) suffix[i] = supports[i].plus(suffix[i + 1]);

  Terms acc{{Monomial{}, TSeries(fp.prefactor()).truncated(t_order)}};
  for (size_t i = 0; i < fs.size(); ++i) {
    const Window keep = box.minus(suffix[i + 1]);
    if (fs[i].polynomial) {
      acc = multiply(acc, fs[i].poly, keep);
    } else {
      // ratio powers only matter where the shifted series can still reach the box
      const Window local = keep.minus(hull_of(acc)).minus(Window::point(fs[i].dominant.pow(fs[i].exponent)));
      acc = multiply(acc, binomial_series(fs[i], budget, t_order, local), keep);
    }
    if (acc.empty()) break;
  }
  for (const auto& [m, c] : acc) out.accumulate(m, c);
  return out;
}

Window delta_support(const Form& a, const Form& b, const RegionOrder& region) {
  Window w = Window::everything();
  const Monomial da = a.size() == 1 ? a.terms().begin()->first : dominant_term(a, region).first;
  const Monomial db = b.size() == 1 ? b.terms().begin()->first : dominant_term(b, region).first;
  for (Var v : kAllVars) {
    bool present = false, nonneg = da[v] == 0 && db[v] == 0;
    for (const Form* f : {&a, &b})
      for (const auto& [m, c] : f->terms()) {
        present |= m[v] != 0;
        nonneg &= m[v] >= 0;
      }
    if (!present) {
      w.set(v, 0, 0);
    } else {
      w.set(v, nonneg ? 0 : -kInf, kInf);
    }
  }
  const auto ha = a.homogeneous_degree(), hb = b.homogeneous_degree();
  if (ha && hb && *ha == *hb) w.set_degree(-*ha, -*ha);
  return w;
}

ScalarChunk formal_delta(const Form& a, const Form& b, const RegionOrder& region, const Window& window, int t_order) {
  const Window support = delta_support(a, b, region);
  ScalarChunk out(window, support);
  const Window box = window.intersect(support).tightened();
  if (box.empty()) return out;

  long long n_lo = 0, n_hi = 0;
  if (auto v = b.as_single_variable()) {
    n_lo = box.lo_of(*v);
    n_hi = box.hi_of(*v);
  } else if (auto u = a.as_single_variable()) {
    n_lo = -box.hi_of(*u) - 1;
    n_hi = -box.lo_of(*u) - 1;
  } else {
    throw std::invalid_argument("formal_delta: one argument must be a single variable");
  }
  if (n_lo <= -kInf + 1 || n_hi >= kInf - 1) throw WindowUnderflow("formal_delta: window leaves the summation index unbounded");
  for (long long n = n_lo; n <= n_hi; ++n) {
    const int k = static_cast<int>(n);
    const FactorProduct term = FactorProduct(a, -k - 1) * FactorProduct(b, k);
    const ScalarChunk piece = expand(term, region, box, t_order);
    for (const auto& [m, c] : piece.terms()) out.accumulate(m, c);
  }
  return out;
}

}  // namespace hdqva
