#pragma once

#include <ostream>
#include <sstream>

#include "charvar/fibered.hpp"
#include "charvar/rng.hpp"
#include "charvar/saito.hpp"

namespace charvar {

struct SelfCheckOptions {
  uint64_t seed = 1;
  int max_word_length = 10;
  // Per-suite trial counts; override_trials, when >= 0, replaces all of them.
  int trace_trials = 200;
  int saito_trials = 100;
  int cocycle_trials = 100;
  int quadratic_trials = 50;
  int lift_trials = 10;
  int specialization_trials = 20;
  int override_trials = -1;
  bool tamper = false;  // testing aid: inject a deliberate failure

  int trials(int dflt) const { return override_trials >= 0 ? override_trials : dflt; }
};

struct SelfCheckResult {
  bool ok = true;
  std::string counterexample;  // first failure, if any
};

namespace detail {

inline std::map<std::string, Rat> random_regular_point(Rng& rng) {
  for (;;) {
    std::map<std::string, Rat> pt{
        {"x", rng.small_rat()}, {"y", rng.small_rat()}, {"z", rng.small_rat()}};
    const Rat z0 = pt.at("z");
    if (z0 * z0 == 4) continue;
    if (delta(word_ab("a"), word_ab("b")).specialize(pt) == 0) continue;
    return pt;
  }
}

}  // namespace detail

// Randomized identity suites exercising the whole library. Prints one line
// per suite; on failure records the first counterexample and stops.
inline SelfCheckResult run_selfcheck(const SelfCheckOptions& opt, std::ostream& out) {
  SelfCheckResult res;
  Rng rng(opt.seed);
  const int L = std::max(1, opt.max_word_length);

  auto fail = [&](const std::string& suite, const std::string& detail) {
    res.ok = false;
    res.counterexample = suite + ": " + detail;
  };

  // Trace relation tr(AB) + tr(AB^-1) = tr(A) tr(B).
  {
    const int n = opt.trials(opt.trace_trials);
    int done = 0;
    for (int i = 0; i < n; ++i) {
      const Word u = rng.reduced_word_up_to(L), v = rng.reduced_word_up_to(L);
      MPoly lhs = trace_polynomial(u * v) + trace_polynomial(u * v.inverse());
      MPoly rhs = trace_polynomial(u) * trace_polynomial(v);
      if (opt.tamper && i == 0) rhs += MPoly::constant(Rat(1));
      if (lhs != rhs) {
        fail("trace-relation", "u=" + u.to_string() + " v=" + v.to_string() + " lhs=" +
                                   lhs.to_string() + " rhs=" + rhs.to_string());
        break;
      }
      ++done;
    }
    out << "trace-relation: " << done << "/" << n << " ok\n";
    if (!res.ok) return res;
  }

  // Saito reconstruction against the direct matrix product.
  {
    const int n = opt.trials(opt.saito_trials);
    const Rep<KElem> rho = tautological_rep();
    const SaitoSystem<KElem> sys = tautological_saito_system();
    int done = 0;
    for (int i = 0; i < n; ++i) {
      const Word w = rng.reduced_word_up_to(std::min(L, 10));
      const Matrix<KElem> rec = sys.reconstruct(w);
      const Matrix<KElem> prod = rho.eval(w);
      const KElem det =
          rec.at(0, 0) * rec.at(1, 1) - rec.at(0, 1) * rec.at(1, 0);
      const KElem tr = rec.trace();
      const KElem expected_tr =
          KElem::from_base(RatFn(trace_polynomial(w)), rho.model.modulus_c());
      if (!(rec == prod) || !(det == ring_one(rho.model)) || !(tr == expected_tr)) {
        fail("saito-reconstruction", "w=" + w.to_string());
        break;
      }
      ++done;
    }
    out << "saito-reconstruction: " << done << "/" << n << " ok\n";
    if (!res.ok) return res;
  }

  // Cocycle condition: cocycle_eval(psi_v, w) = rho(w)^-1 d_v rho(w).
  {
    const int n = opt.trials(opt.cocycle_trials);
    const Rep<KElem> rho = tautological_rep();
    const auto psis = tangent_cocycles(rho);
    const char* vars[3] = {"x", "y", "z"};
    int done = 0;
    for (int i = 0; i < n; ++i) {
      const int vi = static_cast<int>(rng.uniform_below(3));
      const Word w = rng.reduced_word_up_to(L);
      const Matrix<KElem> lhs = cocycle_eval(psis[vi], rho, w);
      const Matrix<KElem> m = rho.eval(w);
      Matrix<KElem> dm(2, 2, rho.model);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) dm.at(r, c) = derive(m.at(r, c), vars[vi]);
      if (!(lhs == inv2x2(m) * dm)) {
        fail("cocycle-condition", std::string("v=") + vars[vi] + " w=" + w.to_string());
        break;
      }
      ++done;
    }
    out << "cocycle-condition: " << done << "/" << n << " ok\n";
    if (!res.ok) return res;
  }

  // Quadratic functional equation for psi = lambda * mu.
  {
    const int n = opt.trials(opt.quadratic_trials);
    int done = 0;
    for (int i = 0; i < n; ++i) {
      const Rat la = rng.small_rat(), lb = rng.small_rat();
      const Rat ma = rng.small_rat(), mb = rng.small_rat();
      auto psi = [&](const Word& w) {
        const Rat l = la * w.exponent_sum('a') + lb * w.exponent_sum('b');
        const Rat m = ma * w.exponent_sum('a') + mb * w.exponent_sum('b');
        return l * m;
      };
      const Word g = rng.reduced_word_up_to(L), d = rng.reduced_word_up_to(L);
      if (!check_quadratic_tangent(psi, {{g, d}})) {
        fail("quadratic-tangent", "g=" + g.to_string() + " d=" + d.to_string());
        break;
      }
      ++done;
    }
    out << "quadratic-tangent: " << done << "/" << n << " ok\n";
    if (!res.ok) return res;
  }

  // Torsion is independent of the lift choice, up to sign.
  {
    const int n = opt.trials(opt.lift_trials);
    const RatFn f_ref = canonical_sign(rational_part(handlebody_torsion()));
    const auto bnd = default_product_circle_boundary();
    const RatFn g_ref =
        canonical_sign(rational_part(product_circle_torsion(bnd).g));
    int done = 0;
    for (int i = 0; i < n; ++i) {
      const uint64_t s = rng.gen();
      const RatFn f = canonical_sign(rational_part(handlebody_torsion(s)));
      const RatFn g = canonical_sign(rational_part(product_circle_torsion(bnd, s).g));
      if (!(f == f_ref) || !(g == g_ref)) {
        fail("torsion-sign-stability", "lift seed " + std::to_string(s));
        break;
      }
      ++done;
    }
    out << "torsion-sign-stability: " << done << "/" << n << " ok\n";
    if (!res.ok) return res;
  }

  // Specialization commutes with torsion at random regular rational points.
  {
    const int n = opt.trials(opt.specialization_trials);
    const Rep<KElem> rho = tautological_rep();
    Presentation free_f2{{'a', 'b'}, {}, {{"S", Word{}, 2}}};
    const BasedComplex<KElem> hc = presentation_complex(free_f2, rho);
    const auto psis = tangent_cocycles(rho);
    const BasedComplex<KElem> ec =
        boundary_evaluation_complex(rho, default_product_circle_boundary());
    const RatFn f_gen = canonical_sign(rational_part(handlebody_torsion()));
    const RatFn g_gen = canonical_sign(rational_part(
        torsion_of_based_complex(ec, {{}, {}, {}})));
    int done = 0;
    for (int i = 0; i < n; ++i) {
      const auto pt = detail::random_regular_point(rng);
      try {
        const auto hs = specialize_complex(hc, pt);
        std::vector<std::vector<QuadExt<Rat>>> h1;
        for (const auto& psi : psis) {
          std::vector<QuadExt<Rat>> v;
          for (char g : {'a', 'b'})
            for (const KElem& coord : sl2_coords(psi.value(g), Rat(1)))
              v.push_back(specialize(coord, pt));
          h1.push_back(std::move(v));
        }
        const QuadExt<Rat> tau_h = torsion_of_based_complex(hs, {{}, h1, {}});
        const QuadExt<Rat> tau_e =
            torsion_of_based_complex(specialize_complex(ec, pt), {{}, {}, {}});
        const Rat want_f = f_gen.specialize(pt), want_g = g_gen.specialize(pt);
        const bool ok_f = tau_h.is_base() && (tau_h.a() == want_f || tau_h.a() == -want_f);
        const bool ok_g = tau_e.is_base() && (tau_e.a() == want_g || tau_e.a() == -want_g);
        if (!ok_f || !ok_g) {
          std::ostringstream os;
          os << "point (" << rat_to_string(pt.at("x")) << ", " << rat_to_string(pt.at("y"))
             << ", " << rat_to_string(pt.at("z")) << ")";
          fail("torsion-specialization", os.str());
          break;
        }
      } catch (const degenerate_error&) {
        // Specialized pivots vanished; resample.
        --i;
        continue;
      }
      ++done;
    }
    out << "torsion-specialization: " << done << "/" << n << " ok\n";
    if (!res.ok) return res;
  }

  return res;
}

}  // namespace charvar
