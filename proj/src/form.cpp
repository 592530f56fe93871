#include "hdqva/form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hdqva {

namespace {

Rational rational_pow(const Rational& c, int e) {
  Rational base = e < 0 ? Rational(1) / c : c;
  Rational r = 1;
  for (int i = 0; i < std::abs(e); ++i) r *= base;
  return r;
}

std::string coeff_factor_string(const TSeries& c) {
  if (c.is_constant()) return c[0].get_str();
  return "(" + c.to_string() + ")";
}

}  // namespace

// ---------------------------------------------------------------- Form

Form::Form(Terms terms) {
  for (auto& [m, c] : terms)
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

std::optional<int> Form::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    if (d && *d != m.degree()) return std::nullopt;
    d = m.degree();
  }
  return d;
}

std::optional<Var> Form::as_single_variable() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [m, c] = *terms_.begin();
  if (!c.is_constant() || c[0] != 1) return std::nullopt;
  std::optional<Var> found;
  for (Var v : kAllVars) {
    if (m[v] == 0) continue;
    if (m[v] != 1 || found) return std::nullopt;
    found = v;
  }
  return found;
}

Form& Form::operator+=(const Form& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form operator*(const Form& a, const Form& b) {
  Form r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      const Monomial m = ma * mb;
      auto [it, inserted] = r.terms_.try_emplace(m, ca * cb);
      if (!inserted) it->second += ca * cb;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  return r;
}

Form operator*(const TSeries& c, const Form& a) {
  Form r;
  for (const auto& [m, x] : a.terms_) {
    TSeries y = c * x;
    if (!y.is_zero()) r.terms_.emplace(m, std::move(y));
  }
  return r;
}

Form Form::operator-() const {
  Form r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Form Form::pow(int k) const {
  if (k < 0) throw std::invalid_argument("Form::pow: negative exponent");
  Form r = Form::constant(TSeries(1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool operator<(const Form& a, const Form& b) {
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    auto c = structural_compare(ia->second, ib->second);
    if (c != 0) return c < 0;
  }
  return false;
}

bool operator==(const Form& a, const Form& b) { return !(a < b) && !(b < a); }

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const auto& [m, c] = *it;
    if (m.is_one()) {
      os << coeff_factor_string(c);
    } else if (c.is_constant() && c[0] == 1) {
      os << m.to_string();
    } else {
      os << coeff_factor_string(c) << "*" << m.to_string();
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- Substitution

Substitution::Substitution(std::initializer_list<std::pair<Var, Form>> rules) {
  for (const auto& [v, f] : rules) set(v, f);
}

Substitution Substitution::swap(Var a, Var b) {
  Substitution s;
  s.set(a, Form::var(b));
  s.set(b, Form::var(a));
  return s;
}

Substitution Substitution::shift_by_gamma(std::initializer_list<Var> vars) {
  Substitution s;
  for (Var v : vars) s.set(v, Form::var(v) + Form::var(Var::g));
  return s;
}

Form Substitution::apply(const Form& f) const {
  Form out;
  for (const auto& [m, c] : f.terms()) {
    Monomial kept;
    Form term = Form::constant(c);
    for (Var v : kAllVars) {
      const int e = m[v];
      const auto& img = image[static_cast<size_t>(index(v))];
      if (!img) {
        kept[v] = e;
      } else if (e < 0) {
        throw std::domain_error("Substitution: negative power of a substituted variable inside a form");
      } else if (e > 0) {
        term = term * img->pow(e);
      }
    }
    out += term * Form::monomial(kept);
  }
  return out;
}

// ---------------------------------------------------------------- RegionOrder

RegionOrder::RegionOrder(std::initializer_list<Var> vars) : vars_(vars) { validate(); }
RegionOrder::RegionOrder(std::vector<Var> vars) : vars_(std::move(vars)) { validate(); }

void RegionOrder::validate() const {
  for (size_t i = 0; i < vars_.size(); ++i)
    for (size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw std::invalid_argument("RegionOrder: repeated variable");
  for (size_t i = 0; i + 1 < vars_.size(); ++i)
    if (vars_[i] == Var::g) throw std::invalid_argument("RegionOrder: g must be the last (smallest) variable");
}

bool RegionOrder::contains(Var v) const { return rank(v) >= 0; }

int RegionOrder::rank(Var v) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == v) return static_cast<int>(i);
  return -1;
}

std::string RegionOrder::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += ",";
    s += var_name(vars_[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------- FactorProduct

FactorProduct::FactorProduct(const Form& f, int exponent) : prefactor_(1) {
  absorb(f, exponent);
  merge();
}

void FactorProduct::absorb(const Form& f, int exponent) {
  if (exponent == 0 || prefactor_ == 0) return;
  if (f.is_zero()) {
    if (exponent < 0) throw std::domain_error("FactorProduct: negative power of the zero form");
    prefactor_ = 0;
    factors_.clear();
    return;
  }
  Monomial content;
  for (Var v : kAllVars) {
    int lo = f.terms().begin()->first[v];
    for (const auto& [m, c] : f.terms()) lo = std::min(lo, m[v]);
    content[v] = lo;
  }
  Form::Terms rest;
  for (const auto& [m, c] : f.terms()) rest.emplace(m / content, c);
  for (Var v : kAllVars)
    if (content[v] != 0) factors_.emplace_back(Form::var(v), exponent * content[v]);

  Form body(std::move(rest));
  const TSeries& lead = body.terms().rbegin()->second;
  const Rational r = lead[lead.valuation()];
  prefactor_ *= rational_pow(r, exponent);
  if (body.size() == 1 && body.terms().begin()->first.is_one() && lead.is_constant()) return;
  factors_.emplace_back(TSeries(Rational(1) / r) * body, exponent);
}

void FactorProduct::merge() {
  if (prefactor_ == 0) {
    factors_.clear();
    return;
  }
  std::sort(factors_.begin(), factors_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Form, int>> merged;
  for (auto& fe : factors_) {
    if (!merged.empty() && merged.back().first == fe.first) {
      merged.back().second += fe.second;
    } else {
      merged.push_back(std::move(fe));
    }
  }
  std::erase_if(merged, [](const auto& fe) { return fe.second == 0; });
  factors_ = std::move(merged);
}

std::optional<int> FactorProduct::homogeneous_degree() const {
  int d = 0;
  for (const auto& [f, e] : factors_) {
    auto fd = f.homogeneous_degree();
    if (!fd) return std::nullopt;
    d += *fd * e;
  }
  return d;
}

FactorProduct& FactorProduct::operator*=(const FactorProduct& o) {
  prefactor_ *= o.prefactor_;
  if (prefactor_ == 0) {
    factors_.clear();
    return *this;
  }
  factors_.insert(factors_.end(), o.factors_.begin(), o.factors_.end());
  merge();
  return *this;
}

FactorProduct FactorProduct::inverse() const {
  if (prefactor_ == 0) throw std::domain_error("FactorProduct: inverse of zero");
  FactorProduct r(Rational(1) / prefactor_);
  r.factors_ = factors_;
  for (auto& fe : r.factors_) fe.second = -fe.second;
  return r;
}

FactorProduct FactorProduct::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  FactorProduct r(rational_pow(prefactor_, k));
  if (k == 0 || r.prefactor_ == 0) return r;
  r.factors_ = factors_;
  for (auto& fe : r.factors_) fe.second *= k;
  return r;
}

FactorProduct FactorProduct::operator-() const {
  FactorProduct r = *this;
  r.prefactor_ = -r.prefactor_;
  return r;
}

FactorProduct FactorProduct::substitute(const Substitution& s) const {
  FactorProduct r(prefactor_);
  for (const auto& [f, e] : factors_) r.absorb(s.apply(f), e);
  r.merge();
  return r;
}

bool operator==(const FactorProduct& a, const FactorProduct& b) {
  if (a.prefactor_ != b.prefactor_ || a.factors_.size() != b.factors_.size()) return false;
  for (size_t i = 0; i < a.factors_.size(); ++i)
    if (a.factors_[i].second != b.factors_[i].second || !(a.factors_[i].first == b.factors_[i].first)) return false;
  return true;
}

std::string FactorProduct::to_string() const {
  std::ostringstream os;
  os << prefactor_.get_str();
  for (const auto& [f, e] : factors_) {
    os << " * (" << f.to_string() << ")";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace hdqva
