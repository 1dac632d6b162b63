#pragma once

// Exact integer and rational linear algebra over GMP. No floating point.

#include <binsimplex/bitcore.hpp>

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace binsimplex {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<T> row_sums() const {
    std::vector<T> s(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) s[i] += (*this)(i, j);
    return s;
  }

  std::vector<T> col_sums() const {
    std::vector<T> s(cols_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) s[j] += (*this)(i, j);
    return s;
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
    Matrix c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] - b.data_[k];
    return c;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<mpz_class>;
using ExactMatrix = Matrix<mpq_class>;
using ExactVector = std::vector<mpq_class>;

IntMatrix to_int_matrix(const BinMatrix& m);
ExactMatrix to_exact(const IntMatrix& m);

// Fraction-free (Bareiss) elimination.
mpz_class determinant(const IntMatrix& m);
mpz_class determinant(const BinMatrix& m);

// Rank of the column set (equivalently of the matrix).
std::size_t rank(const BinMatrix& m);

// Xᵀ X for an n x k matrix: k x k, symmetric positive semidefinite.
IntMatrix gram(const BinMatrix& x);

struct Adjugate {
  IntMatrix adj;
  mpz_class det;
};

// adj(M) and det(M) by fraction-free Gauss-Jordan; throws SingularMatrixError
// when det(M) = 0.
Adjugate adjugate(const IntMatrix& m);

ExactMatrix inverse(const IntMatrix& m);

// (XᵀX)⁻¹; X may be rectangular with full column rank.
ExactMatrix gram_inverse(const BinMatrix& x);

// Q = P⁻ᵀ, so that Qᵀ P = I. Column j of Q is the inward normal to the facet
// opposite column j of P.
ExactMatrix transposed_inverse(const BinMatrix& p);

// "p/q" (or "p" when the denominator is 1).
std::string to_string(const mpq_class& x);
mpq_class parse_rational(const std::string& text);

namespace detail {

// Signs of (XᵀX)⁻¹ computed with machine integers. Valid whenever X has at
// most kSmallGramLimit columns; returns false (and leaves outputs untouched)
// when X is rank deficient. Entries of `signs` are -1, 0, +1; `row_sum_signs`
// likewise.
inline constexpr std::size_t kSmallGramLimit = 10;
bool small_gram_inverse_signs(const BinMatrix& x, std::vector<int>& signs, std::vector<int>& row_sum_signs);

// Exact rank with machine integers for matrices with at most 32 columns or
// rows; falls back to GMP above that.
std::size_t small_rank(const BinMatrix& m);

}  // namespace detail

}  // namespace binsimplex
