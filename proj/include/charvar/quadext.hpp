#pragma once

#include <map>
#include <string>

#include "charvar/ring.hpp"

namespace charvar {

// Element a + b*u of the quadratic extension F[u]/(u^2 + c*u + 1), i.e.
// powers of u reduce through u^2 = -c*u - 1. The modulus coefficient c is
// shared by all elements of one computation context (c = z for the
// tautological representation).
template <class F>
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(F a, F b, F c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}
  static QuadExt from_base(const F& a, const F& c) {
    return QuadExt(a, ring_zero(c), c);
  }
  static QuadExt u(const F& c) { return QuadExt(ring_zero(c), ring_one(c), c); }

  const F& a() const { return a_; }
  const F& b() const { return b_; }
  const F& modulus_c() const { return c_; }
  bool is_zero() const { return ring_is_zero(a_) && ring_is_zero(b_); }
  bool is_base() const { return ring_is_zero(b_); }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    x.check_same(y);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, x.c_);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    x.check_same(y);
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, x.c_);
  }
  QuadExt operator-() const { return QuadExt(-a_, -b_, c_); }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    x.check_same(y);
    // (a1 + b1 u)(a2 + b2 u) = a1 a2 + (a1 b2 + a2 b1) u + b1 b2 u^2
    //                        = (a1 a2 - b1 b2) + (a1 b2 + a2 b1 - b1 b2 c) u
    const F bb = x.b_ * y.b_;
    return QuadExt(x.a_ * y.a_ - bb, x.a_ * y.b_ + x.b_ * y.a_ - bb * x.c_, x.c_);
  }
  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

  // Norm to the base field: (a + b u)(a + b u-bar) with u-bar = -c - u.
  F norm() const { return a_ * a_ - a_ * b_ * c_ + b_ * b_; }

  // (a + b u)^'-1 via the conjugate: (a + b(-c - u)) / norm.
  QuadExt invert() const {
    if (is_zero()) throw degenerate_error("division by zero in quadratic extension");
    const F n = norm();
    if (ring_is_zero(n))
      throw degenerate_error("degenerate modulus: nonzero element has zero norm");
    const F ninv = ring_inv(n);
    return QuadExt((a_ - b_ * c_) * ninv, (-b_) * ninv, c_);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.invert(); }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    x.check_same(y);
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  std::string to_string() const {
    if (is_base()) return element_str(a_);
    return "(" + element_str(a_) + ") + (" + element_str(b_) + ")*u";
  }

  void check_same(const QuadExt& o) const {
    if (!(c_ == o.c_)) throw structural_error("mixed quadratic-extension moduli");
  }

 private:
  static std::string element_str(const F& v) {
    if constexpr (std::is_same_v<F, Rat>) {
      return rat_to_string(v);
    } else {
      return v.to_string();
    }
  }

  F a_{}, b_{}, c_{};
};

using KElem = QuadExt<RatFn>;  // the field K = Q(x,y,z)[u]/(u^2 + u z + 1)

inline KElem k_from_poly(const MPoly& p, const RatFn& c) {
  return KElem::from_base(RatFn(p), c);
}

// The standard modulus c = z of the tautological representation.
inline RatFn modulus_z() { return RatFn::variable("z"); }

// Formal derivative extended to the quadratic extension: differentiating
// u^2 + c u + 1 = 0 gives u' = -u c' / (2u + c).
inline KElem derive(const KElem& v, const std::string& var) {
  const RatFn& c = v.modulus_c();
  KElem res(v.a().derive(var), v.b().derive(var), c);
  const RatFn cp = c.derive(var);
  if (!cp.is_zero() && !ring_is_zero(v.b())) {
    const KElem u = KElem::u(c);
    const KElem two_u_plus_c =
        KElem(c, RatFn::constant(Rat(2), c.vars()), c);
    const KElem uprime = -(u * KElem::from_base(cp, c)) * two_u_plus_c.invert();
    res += KElem::from_base(v.b(), c) * uprime;
  }
  return res;
}

// Numeric specialization with a caller-supplied root u0 of t^2 + c(pt) t + 1.
inline Rat specialize(const KElem& v, const std::map<std::string, Rat>& point,
                      const Rat& u0) {
  const Rat c0 = v.modulus_c().specialize(point);
  if (u0 * u0 + c0 * u0 + 1 != 0)
    throw input_error("supplied u-value is not a root of the specialized modulus");
  return v.a().specialize(point) + v.b().specialize(point) * u0;
}

// Symbolic-pair specialization: keeps u formal over the specialized modulus.
inline QuadExt<Rat> specialize(const KElem& v, const std::map<std::string, Rat>& point) {
  return QuadExt<Rat>(v.a().specialize(point), v.b().specialize(point),
                      v.modulus_c().specialize(point));
}

template <class F>
struct is_field_ring<QuadExt<F>> : std::true_type {};

template <class F>
inline QuadExt<F> ring_zero(const QuadExt<F>& m) {
  return QuadExt<F>(ring_zero(m.modulus_c()), ring_zero(m.modulus_c()), m.modulus_c());
}
template <class F>
inline QuadExt<F> ring_one(const QuadExt<F>& m) {
  return QuadExt<F>(ring_one(m.modulus_c()), ring_zero(m.modulus_c()), m.modulus_c());
}
template <class F>
inline bool ring_is_zero(const QuadExt<F>& a) {
  return a.is_zero();
}
template <class F>
inline QuadExt<F> ring_divexact(const QuadExt<F>& x, const QuadExt<F>& y) {
  return x / y;
}
template <class F>
inline QuadExt<F> ring_inv(const QuadExt<F>& x) {
  return x.invert();
}

}  // namespace charvar
