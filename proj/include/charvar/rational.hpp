#pragma once

#include <gmpxx.h>

#include <string>

#include "charvar/error.hpp"

namespace charvar {

// Exact arithmetic base: arbitrary-precision integers and rationals.
// GMP's mpq_class keeps values canonical (gcd removed, denominator > 0)
// under all arithmetic operators, which is exactly the invariant required.
using Int = mpz_class;
using Rat = mpq_class;

// Parses "p", "-p" or "p/q" with q > 0 after canonicalization.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw input_error("empty rational literal");
  for (char c : s) {
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
      throw input_error("bad rational literal '" + s + "'");
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw input_error("bad rational literal '" + s + "'");
  if (r.get_den() == 0) throw input_error("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (base == 0) throw degenerate_error("division by zero in rational power");
    return Rat(1) / rat_pow(base, -e);
  }
  Rat acc(1), b = base;
  long n = e;
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

}  // namespace charvar
