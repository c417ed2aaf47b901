#pragma once

#include <string>
#include <vector>

#include "charvar/sl2.hpp"

namespace charvar {

// Finite cochain complex with distinguished ordered bases per degree.
// diffs[i] is the matrix of d^i : C^i -> C^{i+1}, shape dim(C^{i+1}) x dim(C^i).
template <class R>
struct BasedComplex {
  std::vector<int> dims;
  std::vector<std::vector<std::string>> basis_labels;
  std::vector<Matrix<R>> diffs;
  R model;

  int degrees() const { return static_cast<int>(dims.size()); }

  void validate() const {
    for (size_t i = 0; i < diffs.size(); ++i) {
      if (diffs[i].rows() != dims[i + 1] || diffs[i].cols() != dims[i])
        throw structural_error("differential shape mismatch");
    }
    for (size_t i = 0; i + 1 < diffs.size(); ++i) {
      require_invariant((diffs[i + 1] * diffs[i]).is_zero(),
                        "d^{i+1} d^i != 0: not a complex");
    }
  }
};

// (h^0, ..., h^n): h^i = dim ker d^i - rank d^{i-1}.
template <class R>
std::vector<int> cohomology_dims(const BasedComplex<R>& c) {
  std::vector<int> h(c.dims.size());
  int prev_rank = 0;
  for (size_t i = 0; i < c.dims.size(); ++i) {
    const int rk = i < c.diffs.size() ? rank(c.diffs[i]) : 0;
    h[i] = c.dims[i] - rk - prev_rank;
    prev_rank = rk;
  }
  return h;
}

// A twisted 1-cochain: a trace-zero value for each generator.
template <class R>
struct Cocycle {
  std::map<char, Matrix<R>> values;

  const Matrix<R>& value(char g) const {
    auto it = values.find(g);
    if (it == values.end())
      throw input_error(std::string("cocycle has no value on generator '") + g + "'");
    return it->second;
  }
};

// Right-twisted extension to words:
//   psi(gd) = rho(d)^-1 psi(g) rho(d) + psi(d),  psi(g^-1) = -rho(g) psi(g) rho(g)^-1,
// matching the deformation rho_eps(g) = rho(g)(1 + eps psi(g)).
template <class R>
Matrix<R> cocycle_eval(const Cocycle<R>& psi, const Rep<R>& rho, const Word& w) {
  Matrix<R> val(2, 2, rho.model);
  for (const Letter& l : w.letters()) {
    const Matrix<R>& g = rho.image(l.gen);
    Matrix<R> letter_val =
        l.sign > 0 ? psi.value(l.gen) : -(g * psi.value(l.gen) * inv2x2(g));
    const Matrix<R> gm = l.sign > 0 ? g : inv2x2(g);
    val = adjoint_action(gm, val) + letter_val;
  }
  return val;
}

// Twisted cochain complex of the presentation 2-complex:
// C^0 = sl2 -> C^1 = sl2^{#gens} -> C^2 = sl2^{#relators},
// d^0 xi = (rho(g)^-1 xi rho(g) - xi)_g, d^1 psi = (psi(r))_r.
template <class R>
BasedComplex<R> presentation_complex(const Presentation& p, const Rep<R>& rho,
                                     const Rat& basis_scale = Rat(1)) {
  const int ng = static_cast<int>(p.generators.size());
  const int nr = static_cast<int>(p.relators.size());
  const R model = rho.model;
  const Matrix<R> id2 = Matrix<R>::identity(2, model);
  for (const Word& r : p.relators) {
    if (!(rho.eval(r) == id2))
      throw input_error("relator '" + r.to_string() + "' is not satisfied by the representation");
  }

  BasedComplex<R> c{{3, 3 * ng, 3 * nr}, {}, {}, model};
  if (nr == 0) c.dims = {3, 3 * ng, 0};

  const char* names[3] = {"h", "e", "f"};
  c.basis_labels.resize(3);
  for (int k = 0; k < 3; ++k) c.basis_labels[0].push_back(names[k]);
  for (char g : p.generators)
    for (int k = 0; k < 3; ++k)
      c.basis_labels[1].push_back(std::string(names[k]) + "@" + g);
  for (const Word& r : p.relators)
    for (int k = 0; k < 3; ++k)
      c.basis_labels[2].push_back(std::string(names[k]) + "@" + r.to_string());

  // d0
  Matrix<R> d0(3 * ng, 3, model);
  const Matrix<R> I3 = Matrix<R>::identity(3, model);
  for (int gi = 0; gi < ng; ++gi) {
    const Matrix<R> block = adjoint_matrix(rho.image(p.generators[gi]), basis_scale) - I3;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) d0.at(3 * gi + i, j) = block.at(i, j);
  }

  // d1 columns: evaluate the basis cochains on every relator.
  Matrix<R> d1(3 * nr, 3 * ng, model);
  const auto basis = sl2_basis(model, basis_scale);
  for (int gi = 0; gi < ng; ++gi) {
    for (int k = 0; k < 3; ++k) {
      Cocycle<R> psi;
      for (char g : p.generators) psi.values.emplace(g, Matrix<R>(2, 2, model));
      psi.values.at(p.generators[gi]) = basis[k];
      for (int ri = 0; ri < nr; ++ri) {
        const auto coords = sl2_coords(cocycle_eval(psi, rho, p.relators[ri]), basis_scale);
        for (int i = 0; i < 3; ++i) d1.at(3 * ri + i, 3 * gi + k) = coords[i];
      }
    }
  }

  c.diffs = {d0, d1};
  c.validate();
  return c;
}

// Complex of (wedge of two circles) x circle, i.e. the three-holed-sphere
// times S^1 with rho(t) = sign * Id central:
//   d0 xi = (rho(a)^-1 xi rho(a) - xi, rho(b)^-1 xi rho(b) - xi, 0)
//   d1 (zeta, eta, theta) = (rho(a)^-1 theta rho(a) - theta, rho(b)^-1 theta rho(b) - theta)
// The t-direction differentials vanish because rho(t) is central.
template <class R>
BasedComplex<R> product_circle_complex(const Presentation& p, const Rep<R>& rho, int sign,
                                       const Rat& basis_scale = Rat(1)) {
  if (!p.is_free() || p.generators.size() != 2)
    throw input_error("product-circle complex needs a free two-generator presentation");
  if (sign != 1 && sign != -1) throw input_error("sign must be +1 or -1");
  const R model = rho.model;
  const Matrix<R> I3 = Matrix<R>::identity(3, model);
  const Matrix<R> blockA = adjoint_matrix(rho.image(p.generators[0]), basis_scale) - I3;
  const Matrix<R> blockB = adjoint_matrix(rho.image(p.generators[1]), basis_scale) - I3;

  BasedComplex<R> c{{3, 9, 6}, {}, {}, model};
  Matrix<R> d0(9, 3, model), d1(6, 9, model);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      d0.at(i, j) = blockA.at(i, j);
      d0.at(3 + i, j) = blockB.at(i, j);
      d1.at(i, 6 + j) = blockA.at(i, j);
      d1.at(3 + i, 6 + j) = blockB.at(i, j);
    }
  c.diffs = {d0, d1};

  const char* names[3] = {"h", "e", "f"};
  c.basis_labels.resize(3);
  const char cells1[3] = {p.generators[0], p.generators[1], 't'};
  for (int k = 0; k < 3; ++k) c.basis_labels[0].push_back(names[k]);
  for (char cell : cells1)
    for (int k = 0; k < 3; ++k)
      c.basis_labels[1].push_back(std::string(names[k]) + "@" + cell);
  for (char cell : {p.generators[0], p.generators[1]})
    for (int k = 0; k < 3; ++k)
      c.basis_labels[2].push_back(std::string(names[k]) + "@" + cell + "xt");

  c.validate();
  return c;
}

// The tangent cocycles psi_v = rho^-1 d_v rho for v in {x, y, z}.
inline std::vector<Cocycle<KElem>> tangent_cocycles(const Rep<KElem>& rho) {
  std::vector<Cocycle<KElem>> out;
  for (const std::string var : {"x", "y", "z"}) {
    Cocycle<KElem> psi;
    for (const auto& [g, m] : rho.images) {
      Matrix<KElem> dm(2, 2, rho.model);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) dm.at(i, j) = derive(m.at(i, j), var);
      Matrix<KElem> val = inv2x2(m) * dm;
      require_invariant(ring_is_zero(val.trace()), "tangent cocycle value not traceless");
      psi.values.emplace(g, std::move(val));
    }
    out.push_back(std::move(psi));
  }
  return out;
}

// Entrywise specialization of a K-matrix, keeping u formal.
inline Matrix<QuadExt<Rat>> specialize_matrix(const Matrix<KElem>& m,
                                              const std::map<std::string, Rat>& point) {
  const Rat c0 = m.model().modulus_c().specialize(point);
  Matrix<QuadExt<Rat>> r(m.rows(), m.cols(), QuadExt<Rat>::from_base(Rat(0), c0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = specialize(m.at(i, j), point);
  return r;
}

inline BasedComplex<QuadExt<Rat>> specialize_complex(const BasedComplex<KElem>& c,
                                                     const std::map<std::string, Rat>& point) {
  const Rat c0 = c.model.modulus_c().specialize(point);
  BasedComplex<QuadExt<Rat>> r{c.dims, c.basis_labels, {}, QuadExt<Rat>::from_base(Rat(0), c0)};
  for (const auto& d : c.diffs) r.diffs.push_back(specialize_matrix(d, point));
  r.validate();
  return r;
}

}  // namespace charvar
