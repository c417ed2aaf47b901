#pragma once

#include <map>

#include "charvar/matrix.hpp"
#include "charvar/quadext.hpp"
#include "charvar/word.hpp"

namespace charvar {

// 2x2 inverse over a field; for determinant-1 matrices this is the adjugate.
template <class R>
Matrix<R> inv2x2(const Matrix<R>& m) {
  if (m.rows() != 2 || m.cols() != 2) throw structural_error("inv2x2 needs a 2x2 matrix");
  const R det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  if (ring_is_zero(det)) throw degenerate_error("singular 2x2 matrix");
  const R dinv = ring_inv(det);
  Matrix<R> r(2, 2, m.model());
  r.at(0, 0) = m.at(1, 1) * dinv;
  r.at(0, 1) = -m.at(0, 1) * dinv;
  r.at(1, 0) = -m.at(1, 0) * dinv;
  r.at(1, 1) = m.at(0, 0) * dinv;
  return r;
}

// A representation given by generator images. Images are expected in SL2;
// inverses of letters use the field inverse (which is the adjugate there).
template <class R>
struct Rep {
  R model;
  std::map<char, Matrix<R>> images;

  const Matrix<R>& image(char g) const {
    auto it = images.find(g);
    if (it == images.end())
      throw input_error(std::string("representation has no image for generator '") + g + "'");
    return it->second;
  }

  Matrix<R> eval(const Word& w) const {
    Matrix<R> m = Matrix<R>::identity(2, model);
    for (const Letter& l : w.letters()) {
      const Matrix<R>& g = image(l.gen);
      m = l.sign > 0 ? m * g : m * inv2x2(g);
    }
    return m;
  }

  bool has_unit_determinants() const {
    for (const auto& [g, m] : images) {
      const R det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
      if (!(det == ring_one(model))) return false;
    }
    return true;
  }
};

// The tautological representation of F2 over K = Q(x,y,z)[u]/(u^2 + uz + 1):
//   rho(a) = [[x, -1], [1, 0]],  rho(b) = [[0, -1/u], [u, y]]
// with -1/u = z + u. Traces are x, y and tr(rho(ab)) = -u - 1/u = z.
inline Rep<KElem> tautological_rep() {
  const RatFn c = modulus_z();
  const KElem model = KElem::from_base(RatFn::constant(Rat(0)), c);
  auto base = [&](const char* v) { return KElem::from_base(RatFn::variable(v), c); };
  auto cnst = [&](long n) { return KElem::from_base(RatFn::constant(Rat(n)), c); };
  const KElem u = KElem::u(c);

  Matrix<KElem> A(2, 2, model);
  A.at(0, 0) = base("x");
  A.at(0, 1) = cnst(-1);
  A.at(1, 0) = cnst(1);
  A.at(1, 1) = cnst(0);

  Matrix<KElem> B(2, 2, model);
  B.at(0, 0) = cnst(0);
  B.at(0, 1) = base("z") + u;  // -1/u
  B.at(1, 0) = u;
  B.at(1, 1) = base("y");

  return Rep<KElem>{model, {{'a', A}, {'b', B}}};
}

// Same matrices with (x, y, z) specialized to rationals; u stays formal over
// the specialized modulus u^2 + u z0 + 1.
inline Rep<QuadExt<Rat>> specialized_rep(const Rat& x0, const Rat& y0, const Rat& z0) {
  using Q = QuadExt<Rat>;
  const Q model = Q::from_base(Rat(0), z0);
  auto cnst = [&](const Rat& v) { return Q::from_base(v, z0); };
  const Q u = Q::u(z0);

  Matrix<Q> A(2, 2, model);
  A.at(0, 0) = cnst(x0);
  A.at(0, 1) = cnst(-1);
  A.at(1, 0) = cnst(1);
  A.at(1, 1) = cnst(0);

  Matrix<Q> B(2, 2, model);
  B.at(0, 0) = cnst(0);
  B.at(0, 1) = cnst(z0) + u;
  B.at(1, 0) = u;
  B.at(1, 1) = cnst(y0);

  return Rep<Q>{model, {{'a', A}, {'b', B}}};
}

}  // namespace charvar
