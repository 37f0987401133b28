#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "negalcd/field.hpp"

namespace negalcd {

/// Row-major dense matrix of field indices. The field is supplied to each operation.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  std::span<Elem> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }

  /// Rows of this followed by rows of below; column counts must agree.
  Matrix stacked(const Matrix& below) const;
  Matrix columns(std::span<const std::size_t> idx) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

/// Gaussian elimination in place to reduced row echelon form; returns the rank.
std::size_t row_reduce(const Field& f, Matrix& m);

std::size_t rank(const Field& f, Matrix m);

/// Basis of { x : m x^T = 0 } as rows.
Matrix nullspace(const Field& f, const Matrix& m);

/// Standard bilinear form sum x_i y_i.
Elem dot(const Field& f, std::span<const Elem> x, std::span<const Elem> y);

}  // namespace negalcd
