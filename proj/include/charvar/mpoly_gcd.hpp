#pragma once

#include <optional>
#include <utility>

#include "charvar/mpoly.hpp"

namespace charvar {

// Exact division of multivariate polynomials. Divides leading terms in the
// canonical order; throws if the division is not exact.
inline MPoly mpoly_divexact(const MPoly& f, const MPoly& g) {
  f.check_same_vars(g);
  if (g.is_zero()) throw degenerate_error("polynomial division by zero");
  if (f.is_zero()) return MPoly(f.vars());
  if (g.is_constant()) {
    Rat inv = Rat(1) / g.constant_value();
    return f * inv;
  }
  MPoly rem = f, q(f.vars());
  const Mono& gm = g.leading_mono();
  const Rat& gc = g.leading_coeff();
  while (!rem.is_zero()) {
    const Mono& rm = rem.leading_mono();
    Mono t(rm.size());
    for (size_t i = 0; i < t.size(); ++i) {
      t[i] = rm[i] - gm[i];
      if (t[i] < 0) throw invariant_error("inexact polynomial division");
    }
    const Rat c = rem.leading_coeff() / gc;
    MPoly term(f.vars());
    term.add_term(t, c);
    q += term;
    rem -= term * g;
  }
  return q;
}

namespace detail {

// Scales f by a rational so all coefficients are integers with gcd 1 and the
// canonical leading coefficient is positive. Returns the scaled polynomial.
inline MPoly integer_primitive(const MPoly& f) {
  if (f.is_zero()) return f;
  Int den_lcm(1), num_gcd(0);
  for (const auto& [m, c] : f.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  for (const auto& [m, c] : f.terms()) {
    Int n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rat scale = Rat(den_lcm) / Rat(num_gcd);
  MPoly p = f * scale;
  if (p.leading_coeff() < 0) p = -p;
  return p;
}

inline int first_active_var(const MPoly& f, const MPoly& g) {
  const size_t n = f.vars()->size();
  for (size_t v = 0; v < n; ++v)
    if (f.degree_in(static_cast<int>(v)) > 0 || g.degree_in(static_cast<int>(v)) > 0)
      return static_cast<int>(v);
  return -1;
}

// Coefficient of v^k, as a polynomial in the same context.
inline MPoly coeff_of(const MPoly& f, int v, int k) {
  MPoly r(f.vars());
  for (const auto& [m, c] : f.terms()) {
    if (m[v] != k) continue;
    Mono mm = m;
    mm[v] = 0;
    r.add_term(mm, c);
  }
  return r;
}

inline MPoly shift_var(const MPoly& f, int v, int k) {
  MPoly r(f.vars());
  for (const auto& [m, c] : f.terms()) {
    Mono mm = m;
    mm[v] += k;
    r.add_term(mm, c);
  }
  return r;
}

inline MPoly gcd_primitive(MPoly f, MPoly g);

// gcd of the v-coefficients of f.
inline MPoly content_in(const MPoly& f, int v) {
  MPoly c(f.vars());
  for (int k = 0; k <= f.degree_in(v); ++k) {
    MPoly ck = coeff_of(f, v, k);
    if (ck.is_zero()) continue;
    c = c.is_zero() ? integer_primitive(ck) : gcd_primitive(std::move(c), std::move(ck));
    if (c.is_constant()) return MPoly::constant(Rat(1), f.vars());
  }
  return c;
}

// Pseudo-remainder of u by w in the variable v: lc(w)^(du-dw+1) u mod w.
inline MPoly pseudo_rem(MPoly u, const MPoly& w, int v) {
  const int dw = w.degree_in(v);
  const MPoly lw = coeff_of(w, v, dw);
  int du = u.degree_in(v);
  int steps = du - dw + 1;
  while (!u.is_zero() && (du = u.degree_in(v)) >= dw) {
    const MPoly lu = coeff_of(u, v, du);
    u = lw * u - shift_var(lu, v, du - dw) * w;
    --steps;
  }
  // Keep the classical normalization lc(w)^(du0-dw+1) * u mod w.
  for (; steps > 0; --steps) u = lw * u;
  return u;
}

// Subresultant PRS gcd of integer-primitive polynomials.
inline MPoly gcd_primitive(MPoly f, MPoly g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.is_constant() || g.is_constant())
    return MPoly::constant(Rat(1), f.vars());

  const int v = first_active_var(f, g);
  if (f.degree_in(v) == 0) return gcd_primitive(std::move(f), content_in(g, v));
  if (g.degree_in(v) == 0) return gcd_primitive(content_in(f, v), std::move(g));

  const MPoly cf = content_in(f, v), cg = content_in(g, v);
  MPoly u = mpoly_divexact(f, cf), w = mpoly_divexact(g, cg);
  const MPoly cont = gcd_primitive(cf, cg);
  if (u.degree_in(v) < w.degree_in(v)) std::swap(u, w);

  const MPoly one = MPoly::constant(Rat(1), f.vars());
  MPoly gi = one, hi = one;
  for (;;) {
    const int delta = u.degree_in(v) - w.degree_in(v);
    MPoly r = pseudo_rem(u, w, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) return cont;  // primitive parts are coprime
    u = w;
    MPoly divisor = gi;
    for (int i = 0; i < delta; ++i) divisor *= hi;
    w = mpoly_divexact(r, divisor);
    gi = coeff_of(u, v, u.degree_in(v));
    if (delta > 0) {
      MPoly num = gi;
      for (int i = 1; i < delta; ++i) num *= gi;
      MPoly den = one;
      for (int i = 1; i < delta; ++i) den *= hi;
      hi = mpoly_divexact(num, den);
    }
  }
  MPoly pp = mpoly_divexact(w, content_in(w, v));
  return cont * integer_primitive(pp);
}

}  // namespace detail

// Division test; on success fills the quotient.
inline bool mpoly_divides(const MPoly& g, const MPoly& f, MPoly* quotient = nullptr) {
  if (g.is_zero()) return f.is_zero();
  MPoly rem = f, q(f.vars());
  const Mono& gm = g.leading_mono();
  const Rat& gc = g.leading_coeff();
  while (!rem.is_zero()) {
    const Mono& rm = rem.leading_mono();
    Mono t(rm.size());
    for (size_t i = 0; i < t.size(); ++i) {
      t[i] = rm[i] - gm[i];
      if (t[i] < 0) return false;
    }
    MPoly term(f.vars());
    term.add_term(t, rem.leading_coeff() / gc);
    q += term;
    rem -= term * g;
  }
  if (quotient) *quotient = std::move(q);
  return true;
}

namespace detail {

inline Int max_abs_coeff(const MPoly& f) {
  Int m(0);
  for (const auto& [mono, c] : f.terms()) {
    Int a = abs(c.get_num());
    if (a > m) m = a;
  }
  return m;
}

// Substitute variable v by the integer xi.
inline MPoly eval_at_int(const MPoly& f, int v, const Int& xi) {
  std::vector<Int> pw{Int(1)};
  for (int i = 1; i <= f.degree_in(v); ++i) pw.push_back(pw.back() * xi);
  MPoly r(f.vars());
  for (const auto& [m, c] : f.terms()) {
    Mono mm = m;
    mm[v] = 0;
    r.add_term(mm, c * Rat(pw[m[v]]));
  }
  return r;
}

inline Int smod(const Int& a, const Int& xi) {
  Int r = a % xi;  // truncated toward zero
  if (2 * r > xi) r -= xi;
  if (2 * r <= -xi) r += xi;
  return r;
}

// Coefficientwise xi-adic expansion of gamma as a polynomial in v.
inline MPoly xi_adic_reconstruct(MPoly gamma, int v, const Int& xi, int deg_cap) {
  MPoly G(gamma.vars());
  for (int i = 0; !gamma.is_zero(); ++i) {
    if (i > deg_cap + 1) return MPoly(gamma.vars());  // runaway: signal failure
    MPoly digit(gamma.vars());
    for (const auto& [m, c] : gamma.terms()) digit.add_term(m, Rat(smod(c.get_num(), xi)));
    G += shift_var(digit, v, i);
    gamma -= digit;
    MPoly next(gamma.vars());
    for (const auto& [m, c] : gamma.terms()) next.add_term(m, Rat(Int(c.get_num() / xi)));
    gamma = std::move(next);
  }
  return G;
}

// Exact division over Z: like mpoly_divides, but every quotient coefficient
// must be an integer. Inputs have integer coefficients.
inline bool mpoly_divides_z(const MPoly& g, const MPoly& f) {
  if (g.is_zero()) return f.is_zero();
  MPoly rem = f;
  const Mono& gm = g.leading_mono();
  const Rat& gc = g.leading_coeff();
  while (!rem.is_zero()) {
    const Mono& rm = rem.leading_mono();
    Mono t(rm.size());
    for (size_t i = 0; i < t.size(); ++i) {
      t[i] = rm[i] - gm[i];
      if (t[i] < 0) return false;
    }
    const Rat c = rem.leading_coeff() / gc;
    if (c.get_den() != 1) return false;
    MPoly term(f.vars());
    term.add_term(t, c);
    rem -= term * g;
  }
  return true;
}

inline Int int_content(const MPoly& f) {
  Int c(0);
  for (const auto& [m, coeff] : f.terms())
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), coeff.get_num().get_mpz_t());
  return c;
}

inline MPoly div_by_int(const MPoly& f, const Int& c) {
  MPoly r(f.vars());
  for (const auto& [m, coeff] : f.terms()) r.add_term(m, coeff / Rat(c));
  return r;
}

// Heuristic gcd by integer evaluation (Char-Geddes-Gonnet). Integer contents
// are split off and recombined at every level: the content of an evaluated
// polynomial carries the evaluated variables, while the unlucky extra factor
// gcd(cofactor evaluations) is stripped by taking the primitive part of the
// reconstructed candidate before trial division. Inputs: integer
// coefficients, both nonzero. Returns the Z-gcd including content.
inline std::optional<MPoly> gcdheu(const MPoly& f, const MPoly& g, int depth) {
  const Int cf = int_content(f), cg = int_content(g);
  Int c;
  mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  const MPoly fp = div_by_int(f, cf), gp = div_by_int(g, cg);

  int v = -1;
  for (int i = static_cast<int>(f.vars()->size()) - 1; i >= 0; --i) {
    if (fp.degree_in(i) > 0 || gp.degree_in(i) > 0) {
      v = i;
      break;
    }
  }
  if (v < 0) return MPoly::constant(Rat(c), f.vars());
  if (depth > 8) return std::nullopt;

  Int xi = 2 * std::min(max_abs_coeff(fp), max_abs_coeff(gp)) + 2;
  if (xi < 4) xi = 4;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const MPoly f1 = eval_at_int(fp, v, xi);
    const MPoly g1 = eval_at_int(gp, v, xi);
    if (!f1.is_zero() && !g1.is_zero()) {
      const auto gamma = gcdheu(f1, g1, depth + 1);
      if (gamma && !gamma->is_zero()) {
        MPoly cand =
            xi_adic_reconstruct(*gamma, v, xi, std::min(fp.degree_in(v), gp.degree_in(v)));
        if (!cand.is_zero()) {
          cand = div_by_int(cand, int_content(cand));  // primitive part
          if (mpoly_divides_z(cand, fp) && mpoly_divides_z(cand, gp))
            return MPoly::constant(Rat(c), f.vars()) * cand;
        }
      }
    }
    xi = (xi * 73794) / 27011;  // grow by a non-square-ish factor and retry
  }
  return std::nullopt;
}

}  // namespace detail

// Polynomial gcd over Q[vars], returned integer-primitive with positive
// canonical leading coefficient (so the result is a unique representative).
// Heuristic evaluation gcd first; subresultant PRS as the deterministic
// fallback.
inline MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
  a.check_same_vars(b);
  if (a.is_zero() && b.is_zero()) return MPoly(a.vars());
  if (a.is_zero()) return detail::integer_primitive(b);
  if (b.is_zero()) return detail::integer_primitive(a);
  MPoly f = detail::integer_primitive(a), g = detail::integer_primitive(b);
  if (f.is_constant() || g.is_constant()) return MPoly::constant(Rat(1), a.vars());
  if (auto h = detail::gcdheu(f, g, 0)) return detail::integer_primitive(*h);
  return detail::integer_primitive(detail::gcd_primitive(std::move(f), std::move(g)));
}

}  // namespace charvar
