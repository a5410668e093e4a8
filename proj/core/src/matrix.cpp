#include "bchlab/matrix.hpp"

#include <algorithm>

namespace bchlab {

std::vector<std::size_t> row_reduce(const FieldContext& ctx, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const Elem scale = ctx.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = ctx.mul(m(r, j), scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Elem f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = ctx.sub(m(i, j), ctx.mul(f, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const FieldContext& ctx, Matrix m) { return row_reduce(ctx, m).size(); }

Matrix nullspace(const FieldContext& ctx, Matrix m) {
  const auto pivots = row_reduce(ctx, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis(m.cols() - pivots.size(), m.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(out, free) = kOne;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(out, pivots[i]) = ctx.neg(m(i, free));
    ++out;
  }
  return basis;
}

}  // namespace bchlab
