#pragma once

#include <gmpxx.h>

#include <string>

namespace hdqva {

/// Exact rational number. All coefficients in the library are built from it.
using Rational = mpq_class;

/// Canonical "p/q" (or "p" when q == 1) rendering.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace hdqva
