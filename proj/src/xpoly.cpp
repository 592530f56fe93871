#include "hdqva/xpoly.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hdqva/errors.hpp"

namespace hdqva {

namespace {

void check_nvars(int n) {
  if (n < 0 || n > XPolynomial::kMaxVars) throw std::invalid_argument("XPolynomial: variable count out of range");
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
  return inversions % 2 ? -1 : 1;
}

// [j]_t = 1 + t + ... + t^(j-1)
TSeries t_integer(int j) { return TSeries::from_coeffs(std::vector<Rational>(static_cast<size_t>(j), Rational(1))); }

TSeries v_factor(const Partition& lambda, int n) {
  auto m = multiplicities(lambda);
  m[0] = n - length(lambda);
  TSeries v(1);
  for (int mk : m)
    for (int j = 1; j <= mk; ++j) v *= t_integer(j);
  return v;
}

// prod_{i<j} (x_i - t x_j), cached per variable count.
const XPolynomial& vandermonde_like(int n) {
  static std::mutex mu;
  static std::map<int, XPolynomial> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  XPolynomial f = XPolynomial::constant(n, TSeries(1));
  const TSeries minus_t = TSeries::monomial(-1, 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) f = f * (XPolynomial::variable(n, i) + minus_t * XPolynomial::variable(n, j));
  return cache.emplace(n, std::move(f)).first->second;
}

}  // namespace

XPolynomial::XPolynomial(int nvars) : n_(nvars) { check_nvars(nvars); }

XPolynomial XPolynomial::constant(int nvars, const TSeries& c) { return monomial(nvars, Exponents{}, c); }

XPolynomial XPolynomial::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::invalid_argument("XPolynomial::variable: index out of range");
  Exponents e{};
  e[static_cast<size_t>(i)] = 1;
  return monomial(nvars, e, TSeries(1));
}

XPolynomial XPolynomial::monomial(int nvars, const Exponents& e, const TSeries& c) {
  XPolynomial p(nvars);
  p.add_term(e, c);
  return p;
}

TSeries XPolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? TSeries() : it->second;
}

void XPolynomial::add_term(const Exponents& e, const TSeries& c) {
  if (c.is_zero()) return;
  for (int k = n_; k < kMaxVars; ++k)
    if (e[static_cast<size_t>(k)] != 0) throw std::invalid_argument("XPolynomial: exponent on an absent variable");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

XPolynomial& XPolynomial::operator+=(const XPolynomial& o) {
  n_ = std::max(n_, o.n_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

XPolynomial& XPolynomial::operator-=(const XPolynomial& o) {
  n_ = std::max(n_, o.n_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

XPolynomial operator*(const XPolynomial& a, const XPolynomial& b) {
  XPolynomial r(std::max(a.n_, b.n_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      XPolynomial::Exponents e{};
      for (size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
      r.add_term(e, ca * cb);
    }
  return r;
}

XPolynomial operator*(const TSeries& c, const XPolynomial& a) {
  XPolynomial r(a.n_);
  for (const auto& [e, x] : a.terms_) r.add_term(e, c * x);
  return r;
}

XPolynomial XPolynomial::at_t(const Rational& x) const {
  XPolynomial r(n_);
  for (const auto& [e, c] : terms_) r.add_term(e, TSeries(c.evaluate(x)));
  return r;
}

XPolynomial XPolynomial::truncated(int t_order) const {
  XPolynomial r(n_);
  for (const auto& [e, c] : terms_) r.add_term(e, c.truncated(t_order));
  return r;
}

XPolynomial XPolynomial::drop_last_variable() const {
  if (n_ == 0) throw std::invalid_argument("XPolynomial: no variable to drop");
  XPolynomial r(n_ - 1);
  for (const auto& [e, c] : terms_)
    if (e[static_cast<size_t>(n_ - 1)] == 0) r.add_term(e, c);
  return r;
}

XPolynomial XPolynomial::divided_by_difference(int i, int j) const {
  const auto ui = static_cast<size_t>(i), uj = static_cast<size_t>(j);
  // Group by the power of x_i; rest has x_i's exponent cleared.
  std::map<int, std::map<Exponents, TSeries>> by_degree;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[ui] = 0;
    by_degree[e[ui]].emplace(rest, c);
  }
  XPolynomial q(n_);
  if (by_degree.empty()) return q;
  // A = (x_i - x_j) Q  gives  Q_{d-1} = A_d + x_j Q_d  from the top degree down.
  std::map<Exponents, TSeries> cur;
  for (int d = by_degree.rbegin()->first; d >= 0; --d) {
    std::map<Exponents, TSeries> next;
    auto add = [&](const Exponents& e, const TSeries& c) {
      auto [it, inserted] = next.try_emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) next.erase(it);
      }
    };
    if (auto it = by_degree.find(d); it != by_degree.end())
      for (const auto& [e, c] : it->second) add(e, c);
    for (const auto& [e, c] : cur) {
      Exponents s = e;
      ++s[uj];
      add(s, c);
    }
    if (d == 0) {
      if (!next.empty()) throw std::domain_error("XPolynomial: division by a variable difference leaves a remainder");
      break;
    }
    for (const auto& [e, c] : next) {
      Exponents full = e;
      full[ui] = static_cast<std::uint8_t>(d - 1);
      q.add_term(full, c);
    }
    cur = std::move(next);
  }
  return q;
}

XPolynomial XPolynomial::divided_by(const TSeries& d) const {
  XPolynomial r(n_);
  for (const auto& [e, c] : terms_) r.add_term(e, divide_exact(c, d));
  return r;
}

bool operator==(const XPolynomial& a, const XPolynomial& b) {
  for (const auto& [e, c] : a.terms_)
    if (!(c == b.coefficient(e))) return false;
  for (const auto& [e, c] : b.terms_)
    if (!(c == a.coefficient(e))) return false;
  return true;
}

std::string XPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")";
    for (int k = 0; k < n_; ++k) {
      const int x = it->first[static_cast<size_t>(k)];
      if (x == 0) continue;
      os << "*x" << k + 1;
      if (x > 1) os << "^" << x;
    }
  }
  return os.str();
}

XPolynomial::Exponents exponents_of(const Partition& p) {
  if (length(p) > XPolynomial::kMaxVars) throw std::invalid_argument("exponents_of: too many parts");
  XPolynomial::Exponents e{};
  for (size_t i = 0; i < p.size(); ++i) e[i] = static_cast<std::uint8_t>(p[i]);
  return e;
}

XPolynomial p_to_x(const SymFuncP& f, int nvars) {
  if (nvars < 1) throw std::invalid_argument("p_to_x: need at least one variable");
  std::map<int, XPolynomial> power_sums;
  auto power_sum = [&](int k) -> const XPolynomial& {
    auto it = power_sums.find(k);
    if (it != power_sums.end()) return it->second;
    XPolynomial s(nvars);
    for (int i = 0; i < nvars; ++i) {
      XPolynomial::Exponents e{};
      e[static_cast<size_t>(i)] = static_cast<std::uint8_t>(k);
      s.add_term(e, TSeries(1));
    }
    return power_sums.emplace(k, std::move(s)).first->second;
  };
  XPolynomial out(nvars);
  for (const auto& [lam, c] : f.terms()) {
    XPolynomial term = XPolynomial::constant(nvars, c);
    for (int k : lam) term = term * power_sum(k);
    out += term;
  }
  return out;
}

std::map<Partition, TSeries> monomial_coefficients(const XPolynomial& f) {
  std::map<Partition, TSeries> out;
  for (const auto& [e, c] : f.terms()) {
    if (!std::is_sorted(e.begin(), e.begin() + f.nvars(), std::greater<>())) continue;
    Partition mu;
    for (int k = 0; k < f.nvars(); ++k)
      if (e[static_cast<size_t>(k)]) mu.push_back(e[static_cast<size_t>(k)]);
    out.emplace(mu, c);
  }
  return out;
}

XPolynomial schur_bialternant(const Partition& lambda, int nvars) {
  check_nvars(nvars);
  if (length(lambda) > nvars) return XPolynomial(nvars);
  static std::mutex mu;
  static std::map<std::pair<Partition, int>, XPolynomial> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({lambda, nvars}); it != cache.end()) return it->second;
  }
  std::vector<int> shifted(static_cast<size_t>(nvars));
  for (int i = 0; i < nvars; ++i)
    shifted[static_cast<size_t>(i)] = (i < length(lambda) ? lambda[static_cast<size_t>(i)] : 0) + nvars - 1 - i;
  std::vector<int> perm(static_cast<size_t>(nvars));
  std::iota(perm.begin(), perm.end(), 0);
  XPolynomial a(nvars);
  do {
    XPolynomial::Exponents e{};
    for (int i = 0; i < nvars; ++i) e[static_cast<size_t>(perm[static_cast<size_t>(i)])] = static_cast<std::uint8_t>(shifted[static_cast<size_t>(i)]);
    a.add_term(e, TSeries(permutation_sign(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int i = 0; i < nvars; ++i)
    for (int j = i + 1; j < nvars; ++j) a = a.divided_by_difference(i, j);
  std::lock_guard lock(mu);
  return cache.emplace(std::make_pair(lambda, nvars), std::move(a)).first->second;
}

XPolynomial hl_P_oracle(const Partition& lambda, int nvars) {
  if (nvars < length(lambda)) throw TooFewVariables("hl_P_oracle: fewer variables than parts");
  if (nvars > 7) throw std::invalid_argument("hl_P_oracle: at most 7 variables");
  if (nvars == 0) return XPolynomial::constant(0, TSeries(1));
  // sum_w w(x^lambda f) = sum_beta c_beta a_{lambda+beta} for f = prod_{i<j}(x_i - t x_j);
  // each alternant a_gamma divided by a_delta is the Schur polynomial s_{gamma-delta}.
  const XPolynomial& f = vandermonde_like(nvars);
  std::map<std::vector<int>, TSeries> alternants;
  for (const auto& [beta, c] : f.terms()) {
    std::vector<int> gamma(static_cast<size_t>(nvars));
    for (int i = 0; i < nvars; ++i)
      gamma[static_cast<size_t>(i)] = beta[static_cast<size_t>(i)] + (i < length(lambda) ? lambda[static_cast<size_t>(i)] : 0);
    // sort descending, tracking the permutation sign; repeated entries vanish
    int sign = 1;
    for (size_t i = 0; i < gamma.size(); ++i)
      for (size_t j = 0; j + 1 < gamma.size() - i; ++j)
        if (gamma[j] < gamma[j + 1]) {
          std::swap(gamma[j], gamma[j + 1]);
          sign = -sign;
        }
    if (std::adjacent_find(gamma.begin(), gamma.end()) != gamma.end()) continue;
    auto [it, inserted] = alternants.try_emplace(gamma, sign > 0 ? c : -c);
    if (!inserted) it->second += sign > 0 ? c : -c;
  }
  XPolynomial sum(nvars);
  for (const auto& [gamma, c] : alternants) {
    if (c.is_zero()) continue;
    Partition mu;
    for (int i = 0; i < nvars; ++i) mu.push_back(gamma[static_cast<size_t>(i)] - (nvars - 1 - i));
    sum += c * schur_bialternant(normalized(mu), nvars);
  }
  return sum.divided_by(v_factor(lambda, nvars));
}

TSeries b_lambda(const Partition& lambda) {
  const auto m = multiplicities(lambda);
  TSeries b(1);
  for (size_t k = 1; k < m.size(); ++k)
    for (int j = 1; j <= m[k]; ++j) b *= TSeries::one_minus(j);
  return b;
}

XPolynomial hl_Q_oracle(const Partition& lambda, int nvars) { return b_lambda(lambda) * hl_P_oracle(lambda, nvars); }

}  // namespace hdqva
