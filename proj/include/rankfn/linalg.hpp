#pragma once

#include "rankfn/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace rankfn {

/// Dense row-major matrix over the rationals. Sizes are desk scale, so
/// everything is exact and nothing is pivoted for stability.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form; `pivots` receives the pivot column of each
/// nonzero row.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Matrix& m);

/// Columns form a basis of {x : m x = 0}.
Matrix nullspace(const Matrix& m);

/// Linearly independent subset of the columns spanning the column space.
Matrix column_basis(const Matrix& m);

Matrix select_rows(const Matrix& m, std::span<const std::size_t> rows);

/// [a | b]
Matrix hconcat(const Matrix& a, const Matrix& b);

/// Block diagonal sum.
Matrix block_diagonal(const Matrix& a, const Matrix& b);

}  // namespace rankfn
