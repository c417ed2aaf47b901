// Exact arithmetic tower: rationals, sparse polynomials, fraction field,
// quadratic extension.

#include <gtest/gtest.h>

#include "charvar/mpoly.hpp"
#include "charvar/mpoly_gcd.hpp"
#include "charvar/quadext.hpp"
#include "charvar/ratfn.hpp"
#include "charvar/rng.hpp"

namespace charvar {
namespace {

MPoly X() { return MPoly::variable("x"); }
MPoly Y() { return MPoly::variable("y"); }
MPoly Z() { return MPoly::variable("z"); }
MPoly C(long n) { return MPoly::constant(Rat(n)); }

MPoly random_poly(Rng& rng, int max_terms = 4, int max_deg = 3) {
  MPoly p;
  const int nt = rng.uniform_int(1, max_terms);
  for (int t = 0; t < nt; ++t) {
    Mono m(3, 0);
    for (int v = 0; v < 3; ++v) m[v] = rng.uniform_int(0, max_deg);
    p.add_term(m, rng.small_rat());
  }
  return p;
}

MPoly random_nonzero_poly(Rng& rng) {
  for (;;) {
    MPoly p = random_poly(rng);
    if (!p.is_zero()) return p;
  }
}

RatFn random_ratfn(Rng& rng) { return RatFn(random_poly(rng), random_nonzero_poly(rng)); }

TEST(Rat, ParseAndPrint) {
  EXPECT_EQ(rat_from_string("3/6"), Rat(1, 2));
  EXPECT_EQ(rat_from_string("-4"), Rat(-4));
  EXPECT_EQ(rat_to_string(rat_from_string("-3/9")), "-1/3");
  EXPECT_THROW(rat_from_string("1/0"), input_error);
  EXPECT_THROW(rat_from_string("x"), input_error);
}

TEST(MPoly, DifferenceOfSquares) {
  EXPECT_EQ((X() + C(1)) * (X() - C(1)), X() * X() - C(1));
}

TEST(MPoly, AdditiveInverseCancels) {
  const RatFn v(X(), Y());
  EXPECT_TRUE((v + (-v)).is_zero());
}

TEST(MPoly, CanonicalText) {
  const MPoly d = X() * X() + Y() * Y() + Z() * Z() - X() * Y() * Z() - C(2);
  EXPECT_EQ(d.to_string(), "x^2 + y^2 + z^2 - x*y*z - 2");
  EXPECT_EQ((X() * X() - C(4)).to_string(), "x^2 - 4");
  EXPECT_EQ(C(0).to_string(), "0");
  EXPECT_EQ((Rat(3, 2) * X()).to_string(), "3/2*x");
  EXPECT_EQ((-X() + C(2)).to_string(), "-x + 2");
}

TEST(MPoly, SpecializeExamples) {
  const MPoly d = X() * X() + Y() * Y() + Z() * Z() - X() * Y() * Z() - C(4);
  EXPECT_EQ(d.specialize({{"x", Rat(0)}, {"y", Rat(0)}, {"z", Rat(0)}}), Rat(-4));
  EXPECT_EQ(d.specialize({{"x", Rat(2)}, {"y", Rat(2)}, {"z", Rat(2)}}), Rat(0));
  EXPECT_EQ((Z() * Z() - C(4)).specialize({{"z", Rat(3)}}), Rat(5));
}

TEST(MPoly, SpecializeIsRingHomomorphism) {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const MPoly a = random_poly(rng), b = random_poly(rng);
    const std::map<std::string, Rat> pt{
        {"x", rng.small_rat()}, {"y", rng.small_rat()}, {"z", rng.small_rat()}};
    EXPECT_EQ((a * b).specialize(pt), a.specialize(pt) * b.specialize(pt));
    EXPECT_EQ((a + b).specialize(pt), a.specialize(pt) + b.specialize(pt));
  }
}

TEST(MPoly, DeriveBasics) {
  EXPECT_EQ((X() * X() * Y()).derive("x"), Rat(2) * (X() * Y()));
  EXPECT_THROW(X().derive("w"), structural_error);
}

TEST(MPoly, DeriveLeibniz) {
  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    const MPoly a = random_poly(rng), b = random_poly(rng);
    EXPECT_EQ((a * b).derive("y"), a.derive("y") * b + a * b.derive("y"));
  }
}

TEST(MPolyGcd, SharedFactor) {
  const MPoly f = (X() + Y()) * (X() - Y());
  const MPoly g = (X() + Y()) * Z();
  EXPECT_EQ(mpoly_gcd(f, g), X() + Y());
  EXPECT_EQ(mpoly_divexact(f, X() + Y()), X() - Y());
}

TEST(MPolyGcd, RandomProductsCancel) {
  Rng rng(13);
  for (int i = 0; i < 25; ++i) {
    const MPoly a = random_nonzero_poly(rng);
    const MPoly b = random_nonzero_poly(rng);
    const MPoly c = random_nonzero_poly(rng);
    const MPoly g = mpoly_gcd(a * c, b * c);
    // c divides the gcd; the quotient is exact.
    EXPECT_NO_THROW(mpoly_divexact(g, detail::integer_primitive(c)) );
    EXPECT_NO_THROW(mpoly_divexact(a * c, g));
  }
}

TEST(RatFn, CanonicalFormIdempotent) {
  Rng rng(14);
  for (int i = 0; i < 25; ++i) {
    const RatFn v = random_ratfn(rng);
    const RatFn again(v.num(), v.den());
    EXPECT_EQ(v, again);
    EXPECT_EQ(v.den().leading_coeff(), Rat(1));
    if (!v.is_zero()) EXPECT_TRUE(mpoly_gcd(v.num(), v.den()).is_constant());
  }
}

TEST(RatFn, FieldAxiomsRandomized) {
  Rng rng(15);
  for (int i = 0; i < 200; ++i) {
    const RatFn a = random_ratfn(rng), b = random_ratfn(rng), c = random_ratfn(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) EXPECT_EQ(a * a.invert(), RatFn::constant(Rat(1)));
  }
}

TEST(RatFn, PoleDetected) {
  const RatFn v(C(1), X());
  EXPECT_THROW(v.specialize({{"x", Rat(0)}}), degenerate_error);
  EXPECT_THROW(RatFn(C(1), C(0)), degenerate_error);
  EXPECT_THROW(RatFn(C(0)).invert(), degenerate_error);
}

KElem k_u() { return KElem::u(modulus_z()); }
KElem k_const(long n) { return KElem::from_base(RatFn::constant(Rat(n)), modulus_z()); }
KElem k_var(const char* v) { return KElem::from_base(RatFn::variable(v), modulus_z()); }

TEST(QuadExt, ModulusRelation) {
  // u * u = -z u - 1
  EXPECT_EQ(k_u() * k_u(), -(k_var("z") * k_u()) - k_const(1));
}

TEST(QuadExt, InvertExamples) {
  // 1/u = -z - u
  EXPECT_EQ(k_u().invert(), -k_var("z") - k_u());
  // 1/(2u + z) = (2u + z)/(z^2 - 4)
  const KElem w = k_const(2) * k_u() + k_var("z");
  const KElem denom = k_var("z") * k_var("z") - k_const(4);
  EXPECT_EQ(w.invert(), w * denom.invert());
  EXPECT_EQ(k_const(1).invert(), k_const(1));
  EXPECT_EQ(w * w.invert(), k_const(1));
  EXPECT_THROW(k_const(0).invert(), degenerate_error);
}

TEST(QuadExt, FieldAxiomsRandomized) {
  Rng rng(16);
  auto random_k = [&](Rng& r) {
    return KElem(random_ratfn(r), random_ratfn(r), modulus_z());
  };
  for (int i = 0; i < 200; ++i) {
    const KElem a = random_k(rng), b = random_k(rng), c = random_k(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) EXPECT_EQ(a * a.invert(), k_const(1));
  }
}

TEST(QuadExt, DeriveU) {
  // du/dz = -u(2u+z)/(z^2-4), expanded (2 + z u)/(z^2 - 4).
  const KElem du = derive(k_u(), "z");
  const KElem expected = -(k_u() * (k_const(2) * k_u() + k_var("z"))) *
                         (k_var("z") * k_var("z") - k_const(4)).invert();
  EXPECT_EQ(du, expected);
  // d(u + 1/u)/dz = d(-z)/dz = -1
  EXPECT_EQ(derive(k_u() + k_u().invert(), "z"), k_const(-1));
  EXPECT_EQ(derive(k_u(), "x"), k_const(0));
}

TEST(QuadExt, ModulusRelationHasZeroDerivative) {
  // d/dz (u^2 + u z + 1) = 0: (2u + z) u' + u = 0.
  const KElem u = k_u();
  const KElem lhs = (k_const(2) * u + k_var("z")) * derive(u, "z") + u;
  EXPECT_TRUE(lhs.is_zero());
}

TEST(QuadExt, DeriveLeibnizRandomized) {
  Rng rng(17);
  auto random_k = [&](Rng& r) {
    return KElem(random_ratfn(r), random_ratfn(r), modulus_z());
  };
  for (int i = 0; i < 20; ++i) {
    const KElem a = random_k(rng), b = random_k(rng);
    for (const char* v : {"x", "y", "z"})
      EXPECT_EQ(derive(a * b, v), derive(a, v) * b + a * derive(b, v));
  }
}

TEST(QuadExt, SpecializeModes) {
  const KElem w = k_var("x") + k_var("z") * k_u();
  const std::map<std::string, Rat> pt{{"x", Rat(1)}, {"y", Rat(0)}, {"z", Rat(5, 2)}};
  // pair mode keeps u formal over u^2 + (5/2)u + 1
  const QuadExt<Rat> pair = specialize(w, pt);
  EXPECT_EQ(pair.a(), Rat(1));
  EXPECT_EQ(pair.b(), Rat(5, 2));
  EXPECT_EQ(pair.modulus_c(), Rat(5, 2));
  // u0 = -2 is a root of t^2 + (5/2) t + 1
  EXPECT_EQ(specialize(w, pt, Rat(-2)), Rat(1) + Rat(5, 2) * Rat(-2));
  EXPECT_THROW(specialize(w, pt, Rat(7)), input_error);
}

TEST(QuadExt, MixedModulusRejected) {
  const KElem a = k_u();
  const KElem b = KElem::u(RatFn::variable("x"));
  EXPECT_THROW(a + b, structural_error);
}

TEST(QuadExt, ZeroNormDetected) {
  // With c = 5/2 the modulus splits: (u + 2)(u + 1/2); u + 2 has norm 0.
  const QuadExt<Rat> v(Rat(2), Rat(1), Rat(5, 2));
  EXPECT_EQ(v.norm(), Rat(0));
  EXPECT_THROW(v.invert(), degenerate_error);
}

}  // namespace
}  // namespace charvar
