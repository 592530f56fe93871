#include "hdqva/symfunc.hpp"

#include <algorithm>
#include <sstream>

namespace hdqva {

SymFuncP SymFuncP::constant(const TSeries& c, int degree_cap) { return term({}, c, degree_cap); }

SymFuncP SymFuncP::p(int n, int degree_cap) {
  return term(n == 0 ? Partition{} : Partition{n}, TSeries(1), degree_cap);
}

SymFuncP SymFuncP::term(const Partition& lambda, const TSeries& c, int degree_cap) {
  SymFuncP f(degree_cap);
  f.add_term(lambda, c);
  return f;
}

TSeries SymFuncP::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? TSeries() : it->second;
}

int SymFuncP::max_degree() const {
  int d = -1;
  for (const auto& [lam, c] : terms_) d = std::max(d, weight(lam));
  return d;
}

void SymFuncP::add_term(const Partition& lambda, const TSeries& c) {
  if (c.is_zero() || weight(lambda) > cap_) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymFuncP& SymFuncP::operator+=(const SymFuncP& o) {
  cap_ = std::min(cap_, o.cap_);
  std::erase_if(terms_, [&](const auto& kv) { return weight(kv.first) > cap_; });
  for (const auto& [lam, c] : o.terms_) add_term(lam, c);
  return *this;
}

SymFuncP& SymFuncP::operator-=(const SymFuncP& o) { return *this += -o; }

SymFuncP operator*(const SymFuncP& a, const SymFuncP& b) {
  SymFuncP r(std::min(a.cap_, b.cap_));
  for (const auto& [la, ca] : a.terms_) {
    const int wa = weight(la);
    if (wa > r.cap_) continue;
    for (const auto& [lb, cb] : b.terms_) {
      if (wa + weight(lb) > r.cap_) continue;
      r.add_term(merged(la, lb), ca * cb);
    }
  }
  return r;
}

SymFuncP operator*(const TSeries& c, const SymFuncP& a) {
  SymFuncP r(a.cap_);
  for (const auto& [lam, x] : a.terms_) r.add_term(lam, c * x);
  return r;
}

SymFuncP SymFuncP::operator-() const {
  SymFuncP r = *this;
  for (auto& [lam, c] : r.terms_) c = -c;
  return r;
}

SymFuncP SymFuncP::derivative(int n) const {
  SymFuncP r(cap_);
  for (const auto& [lam, c] : terms_) {
    const auto k = std::count(lam.begin(), lam.end(), n);
    if (k == 0) continue;
    Partition rest = lam;
    rest.erase(std::find(rest.begin(), rest.end(), n));
    r.add_term(rest, c * Rational(static_cast<long>(k)));
  }
  return r;
}

SymFuncP SymFuncP::homogeneous_part(int degree) const {
  SymFuncP r(cap_);
  for (const auto& [lam, c] : terms_)
    if (weight(lam) == degree) r.terms_.emplace(lam, c);
  return r;
}

SymFuncP SymFuncP::truncated(int t_order) const {
  SymFuncP r(cap_);
  for (const auto& [lam, c] : terms_) r.add_term(lam, c.truncated(t_order));
  return r;
}

SymFuncP SymFuncP::with_cap(int degree_cap) const {
  SymFuncP r(degree_cap);
  for (const auto& [lam, c] : terms_) r.add_term(lam, c);
  return r;
}

SymFuncP SymFuncP::at_t(const Rational& x) const {
  SymFuncP r(cap_);
  for (const auto& [lam, c] : terms_) r.add_term(lam, TSeries(c.evaluate(x)));
  return r;
}

bool operator==(const SymFuncP& a, const SymFuncP& b) {
  for (const auto& [lam, c] : a.terms_)
    if (!(c == b.coefficient(lam))) return false;
  for (const auto& [lam, c] : b.terms_)
    if (!(c == a.coefficient(lam))) return false;
  return true;
}

std::string SymFuncP::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")";
    for (int k : it->first) os << "*p" << k;
  }
  return os.str();
}

}  // namespace hdqva
