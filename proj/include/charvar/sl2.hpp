#pragma once

#include <vector>

#include "charvar/rep.hpp"

namespace charvar {

inline Rat ring_from_rat_tag(const Rat&, const Rat& c) { return c; }
inline MPoly ring_from_rat_tag(const MPoly& m, const Rat& c) {
  return MPoly::constant(c, m.vars());
}
inline RatFn ring_from_rat_tag(const RatFn& m, const Rat& c) {
  return RatFn::constant(c, m.vars());
}
template <class F>
inline QuadExt<F> ring_from_rat_tag(const QuadExt<F>& m, const Rat& c) {
  return QuadExt<F>::from_base(ring_from_rat_tag(m.modulus_c(), c), m.modulus_c());
}
template <class R>
inline R ring_rat(const R& model, const Rat& c) {
  return ring_from_rat_tag(model, c);
}

// X_0 = X - (1/2) tr(X) Id, the projection onto trace-zero matrices.
template <class R>
Matrix<R> project_traceless(const Matrix<R>& x) {
  if (x.rows() != 2 || x.cols() != 2) throw structural_error("project_traceless needs 2x2");
  const R half_tr = ring_rat(x.model(), Rat(1, 2)) * x.trace();
  Matrix<R> r = x;
  r.at(0, 0) -= half_tr;
  r.at(1, 1) -= half_tr;
  return r;
}

// The conjugation action g^-1 xi g on trace-zero matrices.
template <class R>
Matrix<R> adjoint_action(const Matrix<R>& g, const Matrix<R>& xi) {
  return inv2x2(g) * xi * g;
}

// The invariant volume form eps(zeta, eta, theta) = tr(zeta [eta, theta]).
template <class R>
R killing_volume(const Matrix<R>& zeta, const Matrix<R>& eta, const Matrix<R>& theta) {
  return (zeta * (eta * theta - theta * eta)).trace();
}

// Distinguished ordered basis (h, e, s*f) of sl2, where
// h = [[1,0],[0,-1]], e = [[0,1],[0,0]], f = [[0,0],[1,0]];
// its eps-volume is 2s. Cell complexes use s = 1 (the integral basis,
// matching the worked torsion values); the boundary-evaluation complex uses
// s = 1/2, the eps-volume-1 normalization.
template <class R>
std::vector<Matrix<R>> sl2_basis(const R& model, const Rat& s) {
  Matrix<R> h(2, 2, model), e(2, 2, model), f(2, 2, model);
  h.at(0, 0) = ring_one(model);
  h.at(1, 1) = -ring_one(model);
  e.at(0, 1) = ring_one(model);
  f.at(1, 0) = ring_rat(model, s);
  return {h, e, f};
}

// Coordinates of a traceless 2x2 matrix in the basis (h, e, s*f).
template <class R>
std::vector<R> sl2_coords(const Matrix<R>& xi, const Rat& s) {
  if (!ring_is_zero(xi.trace())) throw structural_error("sl2_coords needs a traceless matrix");
  return {xi.at(0, 0), xi.at(0, 1), ring_rat(xi.model(), Rat(1) / s) * xi.at(1, 0)};
}

template <class R>
Matrix<R> sl2_from_coords(const std::vector<R>& c, const R& model, const Rat& s) {
  Matrix<R> m(2, 2, model);
  m.at(0, 0) = c[0];
  m.at(1, 1) = -c[0];
  m.at(0, 1) = c[1];
  m.at(1, 0) = ring_rat(model, s) * c[2];
  return m;
}

// 3x3 matrix of xi -> g^-1 xi g in the distinguished basis.
template <class R>
Matrix<R> adjoint_matrix(const Matrix<R>& g, const Rat& s) {
  const auto basis = sl2_basis(g.model(), s);
  Matrix<R> m(3, 3, g.model());
  for (int j = 0; j < 3; ++j) {
    const auto col = sl2_coords(adjoint_action(g, basis[j]), s);
    for (int i = 0; i < 3; ++i) m.at(i, j) = col[i];
  }
  return m;
}

}  // namespace charvar
