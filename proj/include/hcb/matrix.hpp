#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hcb/rational.hpp"

namespace hcb {

/// Dense row-major matrix over the rationals. Zero-sized dimensions are legal
/// and common: a map into or out of a zero vector space.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols_if_empty = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  Matrix transpose() const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Rational& s) const;
  bool operator==(const Matrix& rhs) const = default;

  /// Columns [c0, c0 + n) as a new matrix.
  Matrix columns(std::size_t c0, std::size_t n) const;
  Matrix rows_range(std::size_t r0, std::size_t n) const;
  Matrix column(std::size_t c) const { return columns(c, 1); }

  std::size_t rank() const;
  /// Basis of {x : A x = 0}, one column per basis vector.
  Matrix nullspace() const;
  /// Linearly independent columns of A spanning its column space (taken from A itself).
  Matrix column_basis() const;
  std::optional<Matrix> inverse() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, in row order
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RowEchelon rref(Matrix m);

/// Some X with A X = B, or nothing if the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
/// Block-diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Columns extending the columns of `basis` (assumed independent) to a basis of Q^n,
/// chosen among the standard unit vectors in index order.
Matrix complement_basis(const Matrix& basis, std::size_t n);

/// Basis of the intersection of the column spaces of a and b (same row count).
Matrix intersect_spaces(const Matrix& a, const Matrix& b);

}  // namespace hcb
