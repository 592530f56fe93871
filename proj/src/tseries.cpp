#include "hdqva/tseries.hpp"

#include <algorithm>
#include <sstream>

#include "hdqva/errors.hpp"

namespace hdqva {

TSeries::TSeries(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

TSeries TSeries::from_coeffs(std::vector<Rational> coeffs, int order) {
  TSeries s;
  s.coeffs_ = std::move(coeffs);
  s.order_ = order;
  s.trim();
  return s;
}

TSeries TSeries::monomial(const Rational& c, int degree, int order) {
  TSeries s;
  s.order_ = order;
  if (degree <= order && c != 0) {
    s.coeffs_.assign(static_cast<size_t>(degree) + 1, Rational(0));
    s.coeffs_[static_cast<size_t>(degree)] = c;
  }
  return s;
}

TSeries TSeries::one_minus(int k, const Rational& c) {
  return TSeries(Rational(1)) - monomial(c, k);
}

void TSeries::trim() {
  if (order_ != kExact && coeffs_.size() > static_cast<size_t>(order_) + 1)
    coeffs_.resize(static_cast<size_t>(order_) + 1);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int TSeries::valuation() const {
  for (size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return static_cast<int>(k);
  return -1;
}

Rational TSeries::operator[](int k) const {
  if (k < 0 || static_cast<size_t>(k) >= coeffs_.size()) return Rational(0);
  return coeffs_[static_cast<size_t>(k)];
}

TSeries TSeries::truncated(int order) const {
  TSeries s = *this;
  s.order_ = std::min(order_, order);
  s.trim();
  return s;
}

Rational TSeries::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

TSeries& TSeries::operator+=(const TSeries& o) {
  order_ = std::min(order_, o.order_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  order_ = std::min(order_, o.order_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  TSeries r;
  r.order_ = std::min(a.order_, b.order_);
  if (a.coeffs_.empty() || b.coeffs_.empty()) return r;
  size_t top = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (r.order_ != TSeries::kExact) top = std::min(top, static_cast<size_t>(r.order_) + 1);
  r.coeffs_.assign(top, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size() && i < top; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size() && i + j < top; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

TSeries& TSeries::operator*=(const TSeries& o) { return *this = *this * o; }

TSeries& TSeries::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TSeries TSeries::operator-() const {
  TSeries r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

bool operator==(const TSeries& a, const TSeries& b) {
  const int order = std::min(a.order_, b.order_);
  const size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (size_t k = 0; k < n; ++k) {
    if (order != TSeries::kExact && k > static_cast<size_t>(order)) break;
    if (a[static_cast<int>(k)] != b[static_cast<int>(k)]) return false;
  }
  return true;
}

std::strong_ordering structural_compare(const TSeries& a, const TSeries& b) {
  if (a.order_ != b.order_) return a.order_ <=> b.order_;
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() <=> b.coeffs_.size();
  for (size_t k = 0; k < a.coeffs_.size(); ++k) {
    int c = cmp(a.coeffs_[k], b.coeffs_[k]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string TSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  if (order_ != kExact) os << " + O(t^" << order_ + 1 << ")";
  return os.str();
}

std::vector<std::string> TSeries::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

TSeries ts_invert(const TSeries& u, int order) {
  if (u[0] == 0) throw ZeroConstantTerm("ts_invert: constant term vanishes");
  const int n = std::min(order, u.order());
  if (u.is_constant()) return TSeries(Rational(1) / u[0]).truncated(n);
  if (n == TSeries::kExact) throw std::invalid_argument("ts_invert: non-constant exact series needs a finite order");
  std::vector<Rational> inv(static_cast<size_t>(n) + 1, Rational(0));
  const Rational c0inv = Rational(1) / u[0];
  inv[0] = c0inv;
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k && j <= u.degree(); ++j) acc += u[j] * inv[static_cast<size_t>(k - j)];
    inv[static_cast<size_t>(k)] = -acc * c0inv;
  }
  return TSeries::from_coeffs(std::move(inv), n);
}

TSeries ts_invert(const TSeries& u) { return ts_invert(u, u.order()); }

TSeries divide_exact(const TSeries& num, const TSeries& den) {
  if (!num.is_exact() || !den.is_exact()) throw std::domain_error("divide_exact: operands must be exact");
  if (num.is_zero()) return num;
  if (den[0] == 0) throw std::domain_error("divide_exact: divisor has zero constant term");
  const int qdeg = num.degree() - den.degree();
  if (qdeg < 0) throw std::domain_error("divide_exact: remainder");
  TSeries q = (num.truncated(qdeg) * ts_invert(den, qdeg)).truncated(qdeg);
  q = TSeries::from_coeffs(q.coeffs());
  if (!(q * den).identical(num)) throw std::domain_error("divide_exact: remainder");
  return q;
}

}  // namespace hdqva
