#pragma once

#include <type_traits>

#include "charvar/mpoly.hpp"
#include "charvar/mpoly_gcd.hpp"
#include "charvar/ratfn.hpp"

namespace charvar {

// Generic ring hooks used by the linear algebra layer. The "model" argument
// carries the context (variable list, extension modulus) that a bare type
// cannot supply.

template <class R>
struct is_field_ring : std::false_type {};
template <>
struct is_field_ring<Rat> : std::true_type {};
template <>
struct is_field_ring<RatFn> : std::true_type {};

inline Rat ring_zero(const Rat&) { return Rat(0); }
inline Rat ring_one(const Rat&) { return Rat(1); }
inline bool ring_is_zero(const Rat& a) { return a == 0; }
inline Rat ring_divexact(const Rat& a, const Rat& b) {
  if (b == 0) throw degenerate_error("division by zero");
  return a / b;
}
inline Rat ring_inv(const Rat& a) { return ring_divexact(Rat(1), a); }

inline MPoly ring_zero(const MPoly& m) { return MPoly(m.vars()); }
inline MPoly ring_one(const MPoly& m) { return MPoly::constant(Rat(1), m.vars()); }
inline bool ring_is_zero(const MPoly& a) { return a.is_zero(); }
inline MPoly ring_divexact(const MPoly& a, const MPoly& b) { return mpoly_divexact(a, b); }

inline RatFn ring_zero(const RatFn& m) { return RatFn::constant(Rat(0), m.vars()); }
inline RatFn ring_one(const RatFn& m) { return RatFn::constant(Rat(1), m.vars()); }
inline bool ring_is_zero(const RatFn& a) { return a.is_zero(); }
inline RatFn ring_divexact(const RatFn& a, const RatFn& b) { return a / b; }
inline RatFn ring_inv(const RatFn& a) { return a.invert(); }

}  // namespace charvar
