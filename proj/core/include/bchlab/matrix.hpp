#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bchlab/field.hpp"

namespace bchlab {

/// Row-major dense matrix of field elements.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, kZero) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(const FieldContext& ctx, Matrix& m);
std::size_t rank(const FieldContext& ctx, Matrix m);
/// Basis of the right kernel {x : m x = 0}, one vector per row.
Matrix nullspace(const FieldContext& ctx, Matrix m);

}  // namespace bchlab
