#include "bchlab/bch_code.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bchlab {

BchCode build_bch(FieldPtr ctx, std::uint32_t delta, std::uint32_t h) {
  if (!ctx) throw std::invalid_argument("build_bch: null field context");
  const std::uint32_t q = ctx->q();
  const std::uint32_t n = q + 1;
  if (h > q) throw std::invalid_argument("build_bch: h = " + std::to_string(h) + " outside [0, q]");
  if (delta < 2 || delta > n)
    throw std::invalid_argument("build_bch: delta = " + std::to_string(delta) + " outside [2, q+1]");

  BchCode code;
  code.ctx_ = std::move(ctx);
  code.n_ = n;
  code.delta_ = delta;
  code.h_ = h;
  const FieldContext& f = *code.ctx_;

  Polynomial g = Polynomial::constant(FieldTag::Fq, kOne);
  for (std::uint32_t j = 0; j + 1 < delta; ++j) g = poly_lcm(f, g, minimal_polynomial(f, h + j, n));
  code.g_ = std::move(g);

  const Elem beta = f.beta();
  for (std::uint32_t j = 0; j + 1 < delta; ++j) {
    const Elem root = f.pow(beta, h + j);
    std::vector<Elem> row(n);
    Elem cur = kOne;
    for (std::uint32_t i = 0; i < n; ++i) {
      row[i] = cur;
      cur = f.mul(cur, root);
    }
    code.parity_rows_.push_back(std::move(row));
  }
  return code;
}

bool BchCode::contains(std::span<const Elem> word) const {
  if (word.size() != n_) return false;
  const FieldContext& f = *ctx_;
  for (Elem c : word)
    if (!f.in_subfield(c)) return false;
  for (const auto& row : parity_rows_) {
    Elem acc = kZero;
    for (std::uint32_t i = 0; i < n_; ++i) acc = f.add(acc, f.mul(word[i], row[i]));
    if (!acc.is_zero()) return false;
  }
  return true;
}

bool BchCode::dual_contains(std::span<const Elem> word) const {
  if (word.size() != n_) return false;
  const FieldContext& f = *ctx_;
  for (Elem c : word)
    if (!f.in_subfield(c)) return false;
  const Matrix gm = generator_matrix(*this);
  for (std::size_t r = 0; r < gm.rows(); ++r) {
    Elem acc = kZero;
    for (std::uint32_t i = 0; i < n_; ++i) acc = f.add(acc, f.mul(word[i], gm(r, i)));
    if (!acc.is_zero()) return false;
  }
  return true;
}

Matrix generator_matrix(const BchCode& code) {
  const std::uint32_t k = code.k();
  Matrix m(k, code.n());
  const auto& g = code.generator().coeffs();
  for (std::uint32_t r = 0; r < k; ++r)
    for (std::size_t i = 0; i < g.size(); ++i) m(r, r + i) = g[i];
  return m;
}

Matrix expanded_parity_matrix(const BchCode& code) {
  const FieldContext& f = code.field();
  const auto& rows = code.parity_rows();
  Matrix m(2 * rows.size(), code.n());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (std::uint32_t i = 0; i < code.n(); ++i) {
      const auto [c0, c1] = f.coordinates(rows[j][i]);
      m(2 * j, i) = c0;
      m(2 * j + 1, i) = c1;
    }
  }
  return m;
}

DualCodeword dual_codeword(const BchCode& code, Elem a, Elem b) {
  if (code.delta() != 3) throw std::invalid_argument("dual_codeword: trace form needs delta = 3");
  const FieldContext& f = code.field();
  const auto& r0 = code.parity_rows()[0];
  const auto& r1 = code.parity_rows()[1];
  DualCodeword out{a, b, std::vector<Elem>(code.n())};
  for (std::uint32_t i = 0; i < code.n(); ++i) out.word[i] = f.trace(f.add(f.mul(a, r0[i]), f.mul(b, r1[i])));
  return out;
}

std::size_t hamming_weight(std::span<const Elem> word) {
  return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Elem e) { return !e.is_zero(); }));
}

}  // namespace bchlab
