#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "charvar/cohomology.hpp"
#include "charvar/skein.hpp"

namespace charvar {

// A rational volume form: coefficient times an ordered wedge of coordinate
// differentials. Torsion is only defined up to sign, so the coefficient is
// normalized to positive canonical leading coefficient and the flag records
// the ambiguity. A normalized form carries the radicands t_i^2 - 4 whose
// square roots divide the displayed coefficient.
struct VolumeForm {
  RatFn coefficient;
  std::vector<std::string> wedge;
  bool sign_ambiguous = true;
  std::vector<MPoly> radicands;

  std::string to_string() const {
    std::string s = coefficient.to_string();
    if (!wedge.empty()) {
      s += " ";
      for (size_t i = 0; i < wedge.size(); ++i) {
        if (i) s += "^";
        s += wedge[i];
      }
    }
    if (!radicands.empty()) {
      s += " / sqrt(";
      for (size_t i = 0; i < radicands.size(); ++i) {
        if (i) s += "*";
        s += "(" + radicands[i].to_string() + ")";
      }
      s += ")";
    }
    if (sign_ambiguous) s += " (up to sign)";
    return s;
  }
};

// Every emitted torsion coefficient must lie in Q(x,y,z): zero u-component.
inline RatFn rational_part(const KElem& v) {
  require_invariant(ring_is_zero(v.b()), "torsion coefficient has a nonzero u-component");
  return v.a();
}

inline RatFn canonical_sign(const RatFn& v) {
  if (v.is_zero()) return v;
  return v.num().leading_coeff() < 0 ? -v : v;
}

namespace detail {

// Greedy choice of standard-basis columns whose images under d are
// independent; `order` permutes the scan for lift-independence testing.
template <class R>
std::vector<int> choose_lift_columns(const Matrix<R>& d, int want,
                                     const std::vector<int>& order) {
  std::vector<int> chosen;
  if (want == 0) return chosen;
  Matrix<R> probe(d.rows(), want, d.model());
  for (int col : order) {
    const int k = static_cast<int>(chosen.size());
    for (int i = 0; i < d.rows(); ++i) probe.at(i, k) = d.at(i, col);
    Matrix<R> sub(d.rows(), k + 1, d.model());
    for (int i = 0; i < d.rows(); ++i)
      for (int j = 0; j <= k; ++j) sub.at(i, j) = probe.at(i, j);
    if (rank(sub) == k + 1) {
      chosen.push_back(col);
      if (static_cast<int>(chosen.size()) == want) return chosen;
    }
  }
  throw invariant_error("differential has lower rank than expected");
}

}  // namespace detail

// Reidemeister torsion of a based cochain complex with supplied cohomology
// representatives: tau = prod_i D_i^((-1)^(i+1)) where D_i is the determinant
// of [ d(lift basis of degree i-1) | H^i representatives | lift basis for
// im d^i ] in the distinguished basis of C^i. Defined up to sign; the
// exponent convention is pinned by the genus-2 handlebody value 2.
template <class R>
R torsion_of_based_complex(const BasedComplex<R>& c,
                           const std::vector<std::vector<std::vector<R>>>& h_bases,
                           std::optional<uint64_t> lift_shuffle_seed = std::nullopt) {
  const int n = c.degrees();
  if (static_cast<int>(h_bases.size()) != n)
    throw input_error("need one list of cohomology representatives per degree");
  const auto h = cohomology_dims(c);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(h_bases[i].size()) != h[i])
      throw input_error("wrong number of H^" + std::to_string(i) + " representatives: want " +
                        std::to_string(h[i]) + ", got " + std::to_string(h_bases[i].size()));
  }
  std::mt19937_64 rng(lift_shuffle_seed.value_or(0));

  std::vector<std::vector<R>> prev_image_basis;  // d^{i-1}(lift basis), in C^i
  R tau = ring_one(c.model);
  for (int i = 0; i < n; ++i) {
    const int dim = c.dims[i];
    const bool has_d = i < static_cast<int>(c.diffs.size());
    const Matrix<R>* d = has_d ? &c.diffs[i] : nullptr;
    const int r = d ? rank(*d) : 0;

    // Closedness of the supplied representatives.
    if (d) {
      for (const auto& v : h_bases[i]) {
        std::vector<R> img(d->rows(), ring_zero(c.model));
        bool zero = true;
        for (int row = 0; row < d->rows(); ++row) {
          R acc = ring_zero(c.model);
          for (int col = 0; col < dim; ++col) acc += d->at(row, col) * v[col];
          if (!ring_is_zero(acc)) zero = false;
        }
        if (!zero) throw input_error("supplied H^" + std::to_string(i) + " class is not closed");
      }
    }

    std::vector<int> order(dim);
    for (int k = 0; k < dim; ++k) order[k] = k;
    if (lift_shuffle_seed) std::shuffle(order.begin(), order.end(), rng);
    const std::vector<int> lifts =
        d ? detail::choose_lift_columns(*d, r, order) : std::vector<int>{};

    const int expect = static_cast<int>(prev_image_basis.size()) +
                       static_cast<int>(h_bases[i].size()) + r;
    if (expect != dim)
      throw input_error("rank bookkeeping failed in degree " + std::to_string(i));

    Matrix<R> S(dim, dim, c.model);
    int col = 0;
    for (const auto& v : prev_image_basis) {
      for (int row = 0; row < dim; ++row) S.at(row, col) = v[row];
      ++col;
    }
    for (const auto& v : h_bases[i]) {
      if (static_cast<int>(v.size()) != dim)
        throw input_error("representative has wrong dimension in degree " + std::to_string(i));
      for (int row = 0; row < dim; ++row) S.at(row, col) = v[row];
      ++col;
    }
    for (int lc : lifts) {
      S.at(lc, col) = ring_one(c.model);
      ++col;
    }
    const R D = det_exact(S);
    if (ring_is_zero(D))
      throw input_error("supplied classes are dependent modulo the image in degree " +
                        std::to_string(i));
    tau = (i % 2 == 1) ? tau * D : tau * ring_inv(D);

    prev_image_basis.clear();
    if (d) {
      for (int lc : lifts) {
        std::vector<R> img(d->rows(), ring_zero(c.model));
        for (int row = 0; row < d->rows(); ++row) img[row] = d->at(row, lc);
        prev_image_basis.push_back(std::move(img));
      }
    }
  }
  return tau;
}

// xi = rho(curve)_0 with its Killing square norm; norm_sq = (Y^2 - 4)/2.
struct BoundaryGenerator {
  Word curve;
  Matrix<KElem> xi;
  KElem norm_sq;
};

inline BoundaryGenerator make_boundary_generator(const Rep<KElem>& rho, const Word& curve) {
  Matrix<KElem> xi = project_traceless(rho.eval(curve));
  KElem n = (xi * xi).trace();
  const MPoly t = trace_polynomial(curve);
  const KElem expected = KElem::from_base(
      RatFn(t * t - MPoly::constant(Rat(4))) * RatFn::constant(Rat(1, 2)), rho.model.modulus_c());
  require_invariant(n == expected, "tr(xi^2) != (Y^2 - 4)/2");
  return BoundaryGenerator{curve, std::move(xi), std::move(n)};
}

// Formal rescaling factors s_i = 2/sqrt(Y_i^2 - 4) bringing tr(xi_i^2) to 2.
// Reported as radicands; no square roots enter the coefficient ring.
struct GeneratorScale {
  Word curve;
  MPoly radicand;  // Y_curve^2 - 4
};

inline std::vector<GeneratorScale> normalize_generators(const std::vector<BoundaryGenerator>& gens) {
  std::vector<GeneratorScale> out;
  for (const auto& g : gens) {
    if (ring_is_zero(g.norm_sq))
      throw degenerate_error("parabolic boundary: tr(xi^2) vanishes identically for '" +
                             g.curve.to_string() + "'");
    const MPoly t = trace_polynomial(g.curve);
    out.push_back({g.curve, t * t - MPoly::constant(Rat(4))});
  }
  return out;
}

enum class ManifoldKind { handlebody, product_circle };

// Torsion of the genus-2 handlebody: the complex sl2 -> sl2^2 with
// H^1 = span(psi_x, psi_y, psi_z). The value is the constant 2.
inline KElem handlebody_torsion(std::optional<uint64_t> lift_seed = std::nullopt) {
  const Rep<KElem> rho = tautological_rep();
  Presentation free_f2{{'a', 'b'}, {}, {{"S", Word{}, 2}}};
  const BasedComplex<KElem> c = presentation_complex(free_f2, rho);
  const auto psis = tangent_cocycles(rho);
  std::vector<std::vector<KElem>> h1;
  for (const auto& psi : psis) {
    std::vector<KElem> v;
    for (char g : {'a', 'b'})
      for (const KElem& coord : sl2_coords(psi.value(g), Rat(1))) v.push_back(coord);
    h1.push_back(std::move(v));
  }
  return torsion_of_based_complex(c, {{}, h1, {}}, lift_seed);
}

struct ProductCircleTorsion {
  KElem f;  // handlebody torsion
  KElem g;  // torsion of the boundary-evaluation complex
  VolumeForm form;
};

// The acyclic complex 0 -> sl2(K) -> sl2(K)^2 -> K^3 -> 0 whose second map is
// (zeta, eta) -> (tr(zeta xi_1), tr(eta xi_2), tr(psi(gamma_3) xi_3)), with
// psi the cocycle determined by (zeta, eta). Its spaces carry the
// eps-volume-1 basis (h, e, f/2); the worked value is g = 4.
inline BasedComplex<KElem> boundary_evaluation_complex(const Rep<KElem>& rho,
                                                       const std::vector<Word>& boundary) {
  if (boundary.size() != 3) throw input_error("product-circle torsion needs three boundary curves");
  const Rat s(1, 2);
  const KElem model = rho.model;
  std::vector<BoundaryGenerator> gens;
  for (const Word& w : boundary) gens.push_back(make_boundary_generator(rho, w));

  BasedComplex<KElem> c{{3, 6, 3}, {}, {}, model};
  Matrix<KElem> d0(6, 3, model);
  const Matrix<KElem> I3 = Matrix<KElem>::identity(3, model);
  const Matrix<KElem> bA = adjoint_matrix(rho.image('a'), s) - I3;
  const Matrix<KElem> bB = adjoint_matrix(rho.image('b'), s) - I3;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      d0.at(i, j) = bA.at(i, j);
      d0.at(3 + i, j) = bB.at(i, j);
    }

  Matrix<KElem> d1(3, 6, model);
  const auto basis = sl2_basis(model, s);
  for (int gi = 0; gi < 2; ++gi) {
    for (int k = 0; k < 3; ++k) {
      Cocycle<KElem> psi;
      psi.values.emplace('a', Matrix<KElem>(2, 2, model));
      psi.values.emplace('b', Matrix<KElem>(2, 2, model));
      psi.values.at(gi == 0 ? 'a' : 'b') = basis[k];
      const int col = 3 * gi + k;
      d1.at(0, col) = (psi.value('a') * gens[0].xi).trace();
      d1.at(1, col) = (psi.value('b') * gens[1].xi).trace();
      d1.at(2, col) = (cocycle_eval(psi, rho, gens[2].curve) * gens[2].xi).trace();
    }
  }
  c.diffs = {d0, d1};
  c.validate();
  if (rank(d1) < 3)
    throw degenerate_error("degenerate boundary: evaluation map is singular");
  return c;
}

inline ProductCircleTorsion product_circle_torsion(const std::vector<Word>& boundary,
                                                   std::optional<uint64_t> lift_seed = std::nullopt) {
  const Rep<KElem> rho = tautological_rep();
  const KElem f = handlebody_torsion(lift_seed);
  const BasedComplex<KElem> ec = boundary_evaluation_complex(rho, boundary);
  const KElem g = torsion_of_based_complex(ec, {{}, {}, {}}, lift_seed);
  VolumeForm form{canonical_sign(rational_part(f) / rational_part(g)), {"dx", "dy", "dz"}, true, {}};
  return ProductCircleTorsion{f, g, std::move(form)};
}

inline std::vector<Word> default_product_circle_boundary() {
  return {word_ab("a"), word_ab("b"), word_ab("BA")};
}

// T(M, xi) as a volume form; `sign` selects rho(t) = +-Id, which leaves the
// complex unchanged (the central direction contributes nothing).
inline VolumeForm torsion_form(const Presentation& p, ManifoldKind kind, int sign,
                               const std::vector<Word>& boundary, bool normalized = false) {
  if (!p.is_free()) throw input_error("torsion_form needs a free two-generator presentation");
  if (sign != 1 && sign != -1) throw input_error("sign must be +1 or -1");
  if (kind == ManifoldKind::handlebody) {
    VolumeForm form{canonical_sign(rational_part(handlebody_torsion())), {"dx", "dy", "dz"}, true, {}};
    return form;
  }
  const std::vector<Word> bnd = boundary.empty() ? default_product_circle_boundary() : boundary;
  ProductCircleTorsion t = product_circle_torsion(bnd);
  if (normalized) {
    const Rep<KElem> rho = tautological_rep();
    std::vector<BoundaryGenerator> gens;
    for (const Word& w : bnd) gens.push_back(make_boundary_generator(rho, w));
    for (const auto& sc : normalize_generators(gens)) t.form.radicands.push_back(sc.radicand);
  }
  return t.form;
}

}  // namespace charvar
