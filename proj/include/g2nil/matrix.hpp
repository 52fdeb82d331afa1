// Copyright 2026 The g2nil Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef G2NIL_MATRIX_HPP
#define G2NIL_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "g2nil/errors.hpp"
#include "g2nil/scalar.hpp"

namespace g2nil {

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Submatrix keeping the listed rows and columns, in the given order.
  Matrix minor_matrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    Matrix m(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
    return m;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!(a.data_[i] == b.data_[i])) return false;
    return true;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.str(); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;

/// Reduced row echelon form over a field, in place. Pivots are chosen as
/// the first nonzero entry scanning columns left to right. Returns the
/// pivot column of each nonzero row.
template <typename T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, row);
    const T inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const T f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename T>
std::size_t rank(Matrix<T> m) {
  return rref(m).size();
}

/// Basis of the right null space {x : m x = 0}, one vector per free column,
/// with that free coordinate set to 1.
template <typename T>
std::vector<std::vector<T>> kernel(Matrix<T> m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols());
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Determinant over a field by Gaussian elimination.
template <typename T>
T determinant(Matrix<T> m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return T(0);
    if (p != k) {
      m.swap_rows(p, k);
      det = -det;
    }
    det *= m(k, k);
    const T inv = m(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const T f = m(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

/// Fraction-free (Bareiss) determinant; needs only exact division, so it
/// works over polynomial rings.
template <typename T>
T bareiss_determinant(Matrix<T> m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return T(0);
    if (p != k) {
      m.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = v / prev;
      }
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? -det : det;
}

/// Inverse over a field; throws DivisionByZeroError when singular.
template <typename T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw DivisionByZeroError("matrix is singular");
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Adjugate (transposed cofactor matrix), computed with Bareiss minors so
/// it is valid over rings without division.
template <typename T>
Matrix<T> adjugate(const Matrix<T>& m) {
  if (!m.is_square()) throw DimensionError("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> adj(n, n);
  if (n == 1) {
    adj(0, 0) = T(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rs, cs;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) rs.push_back(k);
        if (k != i) cs.push_back(k);
      }
      T c = bareiss_determinant(m.minor_matrix(rs, cs));
      adj(i, j) = ((i + j) % 2 == 0) ? c : -c;
    }
  }
  return adj;
}

/// Unique solution of m x = b over a field; throws when m is singular.
template <typename T>
std::vector<T> solve(const Matrix<T>& m, const std::vector<T>& b) {
  if (!m.is_square() || b.size() != m.rows()) throw DimensionError("solve shape mismatch");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw DivisionByZeroError("linear system is singular");
  std::vector<T> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

/// Signature (positive, negative, zero) of a symmetric matrix with real
/// entries, by exact congruence diagonalization.
std::tuple<int, int, int> signature(const ScalarMatrix& symmetric);

}  // namespace g2nil

#endif  // G2NIL_MATRIX_HPP
