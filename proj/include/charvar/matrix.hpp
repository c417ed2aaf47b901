#pragma once

#include <string>
#include <vector>

#include "charvar/ring.hpp"

namespace charvar {

// Dense matrix over an exact ring. All entries share one context; the model
// element supplies zero/one with that context.
template <class R>
class Matrix {
 public:
  Matrix(int rows, int cols, const R& model)
      : rows_(rows), cols_(cols), model_(model), e_(static_cast<size_t>(rows) * cols, ring_zero(model)) {}

  static Matrix identity(int n, const R& model) {
    Matrix m(n, n, model);
    for (int i = 0; i < n; ++i) m.at(i, i) = ring_one(model);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const R& model() const { return model_; }

  R& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const R& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw structural_error("matrix dimension mismatch");
    Matrix r(a.rows_, b.cols_, a.model_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (ring_is_zero(a.at(i, k))) continue;
        for (int j = 0; j < b.cols_; ++j)
          r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return r;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw structural_error("matrix dimension mismatch");
    Matrix r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw structural_error("matrix dimension mismatch");
    Matrix r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& v : r.e_) v = -v;
    return r;
  }
  friend Matrix operator*(const R& c, const Matrix& a) {
    Matrix r = a;
    for (auto& v : r.e_) v = c * v;
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& v : e_)
      if (!ring_is_zero(v)) return false;
    return true;
  }

  R trace() const {
    if (rows_ != cols_) throw structural_error("trace of non-square matrix");
    R t = ring_zero(model_);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  Matrix transposed() const {
    Matrix r(cols_, rows_, model_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  std::string to_string() const {
    std::string out = "[";
    for (int i = 0; i < rows_; ++i) {
      out += i ? ", [" : "[";
      for (int j = 0; j < cols_; ++j) {
        if (j) out += ", ";
        out += entry_str(at(i, j));
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  static std::string entry_str(const R& v) {
    if constexpr (std::is_same_v<R, Rat>) {
      return rat_to_string(v);
    } else {
      return v.to_string();
    }
  }

  int rows_, cols_;
  R model_;
  std::vector<R> e_;
};

// Exact determinant by fraction-free (Bareiss) elimination; the divisions it
// performs are exact in any integral domain.
template <class R>
R det_exact(const Matrix<R>& m) {
  if (m.rows() != m.cols()) throw structural_error("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return ring_one(m.model());
  Matrix<R> a = m;
  R prev = ring_one(m.model());
  bool negate = false;
  for (int k = 0; k + 1 < n; ++k) {
    if (ring_is_zero(a.at(k, k))) {
      int p = k + 1;
      while (p < n && ring_is_zero(a.at(p, k))) ++p;
      if (p == n) return ring_zero(m.model());
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a.at(i, j) = ring_divexact(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
      }
      a.at(i, k) = ring_zero(m.model());
    }
    prev = a.at(k, k);
  }
  R d = a.at(n - 1, n - 1);
  return negate ? -d : d;
}

// Reduced row echelon form over a field. Returns pivot column indices.
template <class R>
std::vector<int> rref_in_place(Matrix<R>& a) {
  static_assert(is_field_ring<R>::value, "rref needs field entries");
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int p = row;
    while (p < a.rows() && ring_is_zero(a.at(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(row, j), a.at(p, j));
    const R inv = ring_inv(a.at(row, col));
    for (int j = col; j < a.cols(); ++j) a.at(row, j) = inv * a.at(row, j);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || ring_is_zero(a.at(i, col))) continue;
      const R f = a.at(i, col);
      for (int j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class R>
int rank(const Matrix<R>& m) {
  Matrix<R> a = m;
  return static_cast<int>(rref_in_place(a).size());
}

// Echelon-form basis of the right kernel; rank + #basis = cols.
template <class R>
std::vector<std::vector<R>> kernel_basis(const Matrix<R>& m) {
  Matrix<R> a = m;
  const std::vector<int> pivots = rref_in_place(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<R>> basis;
  for (int col = 0; col < m.cols(); ++col) {
    if (is_pivot[col]) continue;
    std::vector<R> v(m.cols(), ring_zero(m.model()));
    v[col] = ring_one(m.model());
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a.at(static_cast<int>(r), col);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Inverse over a field by Gauss-Jordan.
template <class R>
Matrix<R> inverse(const Matrix<R>& m) {
  if (m.rows() != m.cols()) throw structural_error("inverse of non-square matrix");
  const int n = m.rows();
  Matrix<R> aug(n, 2 * n, m.model());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = ring_one(m.model());
  }
  const auto pivots = rref_in_place(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
    throw degenerate_error("matrix is singular");
  Matrix<R> inv(n, n, m.model());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

// Solves A x = b over a field; throws if inconsistent or underdetermined.
template <class R>
std::vector<R> solve_unique(const Matrix<R>& a, const std::vector<R>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw structural_error("rhs size mismatch");
  Matrix<R> aug(a.rows(), a.cols() + 1, a.model());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  const auto pivots = rref_in_place(aug);
  for (int p : pivots)
    if (p == a.cols()) throw degenerate_error("inconsistent linear system");
  if (static_cast<int>(pivots.size()) != a.cols())
    throw degenerate_error("underdetermined linear system");
  std::vector<R> x(a.cols(), ring_zero(a.model()));
  for (int i = 0; i < a.cols(); ++i) x[i] = aug.at(i, a.cols());
  return x;
}

}  // namespace charvar
