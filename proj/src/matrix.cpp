#include "negalcd/matrix.hpp"

#include <stdexcept>

namespace negalcd {

Matrix Matrix::stacked(const Matrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (below.cols_ != cols_) throw std::invalid_argument("stacked: column count mismatch");
  Matrix out(rows_ + below.rows_, cols_);
  std::copy(a_.begin(), a_.end(), out.a_.begin());
  std::copy(below.a_.begin(), below.a_.end(), out.a_.begin() + static_cast<std::ptrdiff_t>(a_.size()));
  return out;
}

Matrix Matrix::columns(std::span<const std::size_t> idx) const {
  Matrix out(rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = (*this)(r, idx[c]);
  return out;
}

std::size_t row_reduce(const Field& f, Matrix& m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(rank, c));
    const Elem inv = f.inv(m(rank, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(rank, c) = f.mul(m(rank, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, col) == 0) continue;
      const Elem factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(rank, c)));
    }
    ++rank;
  }
  return rank;
}

std::size_t rank(const Field& f, Matrix m) { return row_reduce(f, m); }

Matrix nullspace(const Field& f, const Matrix& m) {
  Matrix r = m;
  const std::size_t rk = row_reduce(f, r);
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t i = 0; i < rk; ++i) {
    std::size_t c = 0;
    while (r(i, c) == 0) ++c;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  Matrix basis(m.cols() - rk, m.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(out, free) = 1;
    for (std::size_t i = 0; i < rk; ++i) basis(out, pivot_col[i]) = f.neg(r(i, free));
    ++out;
  }
  return basis;
}

Elem dot(const Field& f, std::span<const Elem> x, std::span<const Elem> y) {
  Elem acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x[i], y[i]));
  return acc;
}

}  // namespace negalcd
