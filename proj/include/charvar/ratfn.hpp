#pragma once

#include <map>
#include <string>

#include "charvar/mpoly.hpp"
#include "charvar/mpoly_gcd.hpp"

namespace charvar {

// Element of the fraction field Q(vars). Canonical form: gcd(num, den) = 1
// and the denominator's canonical leading coefficient is 1, so equality is
// componentwise.
class RatFn {
 public:
  RatFn() : num_(vars_xyz()), den_(MPoly::constant(Rat(1), vars_xyz())) {}
  explicit RatFn(MPoly num)
      : num_(std::move(num)), den_(MPoly::constant(Rat(1), num_.vars())) {}
  RatFn(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    num_.check_same_vars(den_);
    normalize();
  }
  static RatFn constant(const Rat& c, const Vars& vars = vars_xyz()) {
    return RatFn(MPoly::constant(c, vars));
  }
  static RatFn variable(const std::string& name, const Vars& vars = vars_xyz()) {
    return RatFn(MPoly::variable(name, vars));
  }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  const Vars& vars() const { return num_.vars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat constant_value() const {
    return num_.constant_value() / den_.constant_value();
  }

  friend RatFn operator+(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFn operator-(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RatFn operator-() const {
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFn operator*(const RatFn& a, const RatFn& b) {
    // Cross-cancel first to keep the gcd inputs small.
    const MPoly g1 = mpoly_gcd(a.num_, b.den_);
    const MPoly g2 = mpoly_gcd(b.num_, a.den_);
    MPoly n1 = g1.is_zero() ? a.num_ : mpoly_divexact(a.num_, g1);
    MPoly d2 = g1.is_zero() ? b.den_ : mpoly_divexact(b.den_, g1);
    MPoly n2 = g2.is_zero() ? b.num_ : mpoly_divexact(b.num_, g2);
    MPoly d1 = g2.is_zero() ? a.den_ : mpoly_divexact(a.den_, g2);
    return RatFn(n1 * n2, d1 * d2);
  }
  friend RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.invert(); }
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }

  RatFn invert() const {
    if (num_.is_zero()) throw degenerate_error("division by zero rational function");
    RatFn r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
  }

  friend bool operator==(const RatFn& a, const RatFn& b) {
    if (a.num_ == b.num_ && a.den_ == b.den_) return true;
    // Canonical forms are unique, but compare cross-products so equality
    // stays sound even if a heuristic gcd under-reduced one side.
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

  Rat specialize(const std::map<std::string, Rat>& point) const {
    const Rat d = den_.specialize(point);
    if (d == 0) throw degenerate_error("pole: denominator vanishes at the point");
    return num_.specialize(point) / d;
  }

  RatFn derive(const std::string& var) const {
    // (n/d)' = (n'd - n d')/d^2
    return RatFn(num_.derive(var) * den_ - num_ * den_.derive(var), den_ * den_);
  }

  std::string to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw degenerate_error("zero denominator");
    if (num_.is_zero()) {
      den_ = MPoly::constant(Rat(1), num_.vars());
      return;
    }
    if (!den_.is_constant()) {
      const MPoly g = mpoly_gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = mpoly_divexact(num_, g);
        den_ = mpoly_divexact(den_, g);
      }
    }
    const Rat lc = den_.leading_coeff();
    if (lc != 1) {
      const Rat inv = Rat(1) / lc;
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  MPoly num_, den_;
};

}  // namespace charvar
