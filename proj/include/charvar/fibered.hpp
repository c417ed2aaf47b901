#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charvar/torsion.hpp"

namespace charvar {

// A surface homeomorphism of the 3-holed sphere or 1-holed torus, given by
// the induced free-group endomorphism a -> phi_a, b -> phi_b, together with
// the boundary curves of the fiber. The induced map on coordinates is
// phi* x = Y_{phi(a)}, phi* y = Y_{phi(b)}, phi* z = Y_{phi(ab)}.
struct FiberedSpec {
  Word phi_a, phi_b;
  std::vector<Word> boundary;
  std::vector<MPoly> induced;   // phi*x, phi*y, phi*z
  Matrix<RatFn> jacobian;       // d(phi*)_ij = d(induced_i)/d(var_j)
};

inline Word apply_phi(const Word& w, const Word& phi_a, const Word& phi_b) {
  Word out;
  for (const Letter& l : w.letters()) {
    const Word& img = l.gen == 'a' ? phi_a : phi_b;
    out = out * (l.sign > 0 ? img : img.inverse());
  }
  return out;
}

inline FiberedSpec build_fibered_spec(const Word& phi_a, const Word& phi_b,
                                      const std::vector<Word>& boundary) {
  for (const Letter& l : phi_a.letters())
    if (l.gen != 'a' && l.gen != 'b') throw input_error("phi images must be words over {a, b}");
  for (const Letter& l : phi_b.letters())
    if (l.gen != 'a' && l.gen != 'b') throw input_error("phi images must be words over {a, b}");
  if (boundary.empty()) throw input_error("fibered input needs at least one boundary curve");
  for (const Word& c : boundary) {
    if (trace_polynomial(apply_phi(c, phi_a, phi_b)) != trace_polynomial(c))
      throw input_error("boundary curve '" + c.to_string() +
                        "' is not trace-preserved by phi");
  }

  FiberedSpec spec{phi_a, phi_b, boundary, {}, Matrix<RatFn>(3, 3, RatFn())};
  spec.induced = {trace_polynomial(phi_a), trace_polynomial(phi_b),
                  trace_polynomial(phi_a * phi_b)};
  const char* vars[3] = {"x", "y", "z"};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      spec.jacobian.at(i, j) = RatFn(spec.induced[i].derive(vars[j]));
  return spec;
}

inline std::vector<MPoly> fixed_locus_generators(const FiberedSpec& spec) {
  const char* vars[3] = {"x", "y", "z"};
  std::vector<MPoly> out;
  for (int i = 0; i < 3; ++i) out.push_back(spec.induced[i] - MPoly::variable(vars[i]));
  return out;
}

inline bool induces_identity(const FiberedSpec& spec) {
  const char* vars[3] = {"x", "y", "z"};
  for (int i = 0; i < 3; ++i)
    if (spec.induced[i] != MPoly::variable(vars[i])) return false;
  return true;
}

struct FiberedSymbolic {
  Matrix<RatFn> jacobian;
  std::vector<std::vector<MPoly>> gradients;  // per boundary curve
  std::vector<std::string> labels;            // dY_<curve>
  // Present when phi* is the identity and the three boundary gradients are
  // independent: then W = 0 and T(M, xi) = 1/2 det(grad) dx^dy^dz.
  std::optional<VolumeForm> identity_form;
};

struct FiberedAtPoint {
  Rat restricted_det;  // det((J - I)|_W), W = intersection of ker dY_i
  Rat value;           // 1/2 / restricted_det, up to sign
  std::vector<std::string> labels;
};

inline std::vector<std::vector<MPoly>> boundary_gradients(const FiberedSpec& spec) {
  const char* vars[3] = {"x", "y", "z"};
  std::vector<std::vector<MPoly>> grads;
  for (const Word& c : spec.boundary) {
    const MPoly t = trace_polynomial(c);
    std::vector<MPoly> g;
    for (const char* v : vars) g.push_back(t.derive(v));
    grads.push_back(std::move(g));
  }
  return grads;
}

inline FiberedSymbolic fibered_torsion(const FiberedSpec& spec) {
  FiberedSymbolic out{spec.jacobian, boundary_gradients(spec), {}, std::nullopt};
  for (const Word& c : spec.boundary) out.labels.push_back("dY_" + c.to_string());
  if (induces_identity(spec) && spec.boundary.size() == 3) {
    Matrix<RatFn> G(3, 3, RatFn());
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) G.at(i, j) = RatFn(out.gradients[i][j]);
    const RatFn d = det_exact(G);
    if (!d.is_zero()) {
      // (J - I)|_W is the empty map on W = 0; its determinant is 1.
      out.identity_form = VolumeForm{
          canonical_sign(RatFn::constant(Rat(1, 2)) * d), {"dx", "dy", "dz"}, true, {}};
    }
  }
  return out;
}

inline FiberedAtPoint fibered_torsion(const FiberedSpec& spec,
                                      const std::map<std::string, Rat>& point) {
  for (const MPoly& gen : fixed_locus_generators(spec)) {
    if (gen.specialize(point) != 0)
      throw input_error("point is not on the fixed locus of phi*");
  }
  const auto grads = boundary_gradients(spec);
  const int nb = static_cast<int>(grads.size());
  Matrix<Rat> G(nb, 3, Rat(0));
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < 3; ++j) G.at(i, j) = grads[i][j].specialize(point);
  if (rank(G) != nb)
    throw input_error("boundary gradients are dependent at the point");

  const auto W = kernel_basis(G);  // basis of the intersection of ker dY_i
  Matrix<Rat> J0(3, 3, Rat(0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) J0.at(i, j) = spec.jacobian.at(i, j).specialize(point);
  for (int i = 0; i < 3; ++i) J0.at(i, i) -= 1;

  const int wd = static_cast<int>(W.size());
  Matrix<Rat> restricted(wd, wd, Rat(0));
  if (wd > 0) {
    Matrix<Rat> Wb(3, wd, Rat(0));
    for (int j = 0; j < wd; ++j)
      for (int i = 0; i < 3; ++i) Wb.at(i, j) = W[j][i];
    for (int j = 0; j < wd; ++j) {
      std::vector<Rat> img(3, Rat(0));
      for (int i = 0; i < 3; ++i) {
        Rat acc(0);
        for (int k = 0; k < 3; ++k) acc += J0.at(i, k) * W[j][k];
        img[i] = acc;
      }
      std::vector<Rat> coords;
      try {
        coords = solve_unique(Wb, img);
      } catch (const degenerate_error&) {
        throw invariant_error("(J - I) does not preserve the kernel of the boundary gradients");
      }
      for (int i = 0; i < wd; ++i) restricted.at(i, j) = coords[i];
    }
  }
  const Rat det = det_exact(restricted);
  if (det == 0)
    throw degenerate_error("non-regular point: det((J - I)|_W) = 0");

  FiberedAtPoint out;
  out.restricted_det = det;
  out.value = Rat(1, 2) / det;
  for (const Word& c : spec.boundary) out.labels.push_back("dY_" + c.to_string());
  return out;
}

}  // namespace charvar
