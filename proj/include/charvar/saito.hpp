#pragma once

#include <array>
#include <functional>

#include "charvar/rep.hpp"
#include "charvar/skein.hpp"

namespace charvar {

// A character, as an oracle assigning to each word the value of its trace
// function in the coefficient ring.
template <class R>
using CharacterOracle = std::function<R(const Word&)>;

// The tautological character of F2: Y_w as an element of K.
inline CharacterOracle<KElem> tautological_character() {
  const RatFn c = modulus_z();
  return [c](const Word& w) { return KElem::from_base(RatFn(trace_polynomial(w)), c); };
}

// Character of F2 specialized at a rational point of the character variety.
inline CharacterOracle<QuadExt<Rat>> specialized_character(const Rat& x0, const Rat& y0,
                                                           const Rat& z0) {
  const std::map<std::string, Rat> pt{{"x", x0}, {"y", y0}, {"z", z0}};
  return [pt, z0](const Word& w) {
    return QuadExt<Rat>::from_base(trace_polynomial(w).specialize(pt), z0);
  };
}

// The 4x4 linear system of Saito's reconstruction theorem in the basis
// (1, alpha, beta, alpha beta): M_ij = phi(Y_{gamma_i gamma_j}), solved once
// and cached; rho(gamma) = sum_i (M^-1 T_gamma)_i rho(gamma_i).
template <class R>
class SaitoSystem {
 public:
  SaitoSystem(CharacterOracle<R> phi, Word alpha, Word beta, Matrix<R> A, Matrix<R> B)
      : phi_(std::move(phi)),
        model_(A.model()),
        M_(4, 4, model_),
        M_inv_(4, 4, model_),
        basis_images_{Matrix<R>::identity(2, model_), A, B, A * B} {
    basis_words_[0] = Word{};
    basis_words_[1] = alpha;
    basis_words_[2] = beta;
    basis_words_[3] = alpha * beta;

    // Seed consistency: the matrices must realize the prescribed traces.
    for (int i = 1; i < 4; ++i) {
      if (!(basis_images_[i].trace() == phi_(basis_words_[i])))
        throw input_error("inconsistent seed: tr does not match the character");
    }

    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        M_.at(i, j) = phi_(basis_words_[i] * basis_words_[j]);
        M_.at(j, i) = M_.at(i, j);  // tr(gh) = tr(hg)
      }

    // Delta must be invertible; det M = -phi(Delta)^2 is checked, not assumed.
    const R ta = phi_(alpha), tb = phi_(beta), tab = phi_(basis_words_[3]);
    delta_value_ = ta * ta + tb * tb + tab * tab - ta * tb * tab -
                   (ring_one(model_) + ring_one(model_) + ring_one(model_) + ring_one(model_));
    if (ring_is_zero(delta_value_))
      throw degenerate_error("degenerate character: Delta(alpha, beta) is not invertible");
    const R detM = det_exact(M_);
    require_invariant(detM == -(delta_value_ * delta_value_),
                      "det M != -Delta^2 for the Saito system");
    M_inv_ = ring_inv(detM) * adjugate4(M_);
  }

  const Matrix<R>& trace_matrix() const { return M_; }
  const R& delta_value() const { return delta_value_; }
  const Word& basis_word(int i) const { return basis_words_[i]; }
  const Matrix<R>& basis_image(int i) const { return basis_images_[i]; }

  // rho(gamma) = sum_i (M^-1 T)_i rho(gamma_i) with T_i = phi(Y_{gamma gamma_i}).
  Matrix<R> reconstruct(const Word& gamma) const {
    std::array<R, 4> T{ring_zero(model_), ring_zero(model_), ring_zero(model_),
                       ring_zero(model_)};
    for (int i = 0; i < 4; ++i) T[i] = phi_(gamma * basis_words_[i]);
    Matrix<R> out(2, 2, model_);
    for (int i = 0; i < 4; ++i) {
      R c = ring_zero(model_);
      for (int j = 0; j < 4; ++j) c += M_inv_.at(i, j) * T[j];
      out = out + c * basis_images_[i];
    }
    return out;
  }

 private:
  static Matrix<R> adjugate4(const Matrix<R>& m) {
    Matrix<R> adj(4, 4, m.model());
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Matrix<R> minor(3, 3, m.model());
        for (int r = 0, mr = 0; r < 4; ++r) {
          if (r == i) continue;
          for (int c = 0, mc = 0; c < 4; ++c) {
            if (c == j) continue;
            minor.at(mr, mc++) = m.at(r, c);
          }
          ++mr;
        }
        R cof = det_exact(minor);
        if ((i + j) % 2 == 1) cof = -cof;
        adj.at(j, i) = cof;  // transpose of the cofactor matrix
      }
    return adj;
  }

  CharacterOracle<R> phi_;
  R model_;
  Matrix<R> M_;
  Matrix<R> M_inv_;
  std::array<Matrix<R>, 4> basis_images_;
  std::array<Word, 4> basis_words_;
  R delta_value_;
};

template <class R>
SaitoSystem<R> build_saito_system(CharacterOracle<R> phi, const Word& alpha, const Word& beta,
                                  const Matrix<R>& A, const Matrix<R>& B) {
  return SaitoSystem<R>(std::move(phi), alpha, beta, A, B);
}

// The generic system: tautological character with the displayed A, B.
inline SaitoSystem<KElem> tautological_saito_system() {
  const Rep<KElem> rho = tautological_rep();
  return SaitoSystem<KElem>(tautological_character(), word_ab("a"), word_ab("b"),
                            rho.image('a'), rho.image('b'));
}

// System specialized at a rational character (x0, y0, z0); requires
// Delta(x0, y0, z0) != 0.
inline SaitoSystem<QuadExt<Rat>> specialized_saito_system(const Rat& x0, const Rat& y0,
                                                          const Rat& z0) {
  const Rep<QuadExt<Rat>> rho = specialized_rep(x0, y0, z0);
  return SaitoSystem<QuadExt<Rat>>(specialized_character(x0, y0, z0), word_ab("a"),
                                   word_ab("b"), rho.image('a'), rho.image('b'));
}

}  // namespace charvar
