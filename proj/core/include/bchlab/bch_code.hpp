#pragma once

// BCH codes C_(q, q+1, delta, h) over GF(q): the cyclic code of length
// n = q + 1 whose generator polynomial is the lcm of the minimal polynomials
// of beta^h, ..., beta^(h + delta - 2), beta = alpha^(q-1).

#include <cstdint>
#include <span>
#include <vector>

#include "bchlab/field.hpp"
#include "bchlab/matrix.hpp"
#include "bchlab/polynomial.hpp"

namespace bchlab {

class BchCode {
 public:
  const FieldContext& field() const { return *ctx_; }
  const FieldPtr& field_ptr() const { return ctx_; }
  std::uint32_t q() const { return ctx_->q(); }
  std::uint32_t n() const { return n_; }
  std::uint32_t delta() const { return delta_; }
  std::uint32_t h() const { return h_; }
  const Polynomial& generator() const { return g_; }
  std::uint32_t k() const { return n_ - static_cast<std::uint32_t>(g_.degree()); }
  std::uint32_t k_dual() const { return n_ - k(); }

  /// Row j is [(beta^(h+j))^i] for i = 0..n-1, j = 0..delta-2, over GF(q^2).
  const std::vector<std::vector<Elem>>& parity_rows() const { return parity_rows_; }

  /// True if every entry lies in GF(q) and the word is annihilated by every parity row.
  bool contains(std::span<const Elem> word) const;
  /// True if every entry lies in GF(q) and the word is orthogonal to every generator-matrix row.
  bool dual_contains(std::span<const Elem> word) const;

 private:
  friend BchCode build_bch(FieldPtr, std::uint32_t, std::uint32_t);
  FieldPtr ctx_;
  std::uint32_t n_ = 0, delta_ = 0, h_ = 0;
  Polynomial g_;
  std::vector<std::vector<Elem>> parity_rows_;
};

/// Throws std::invalid_argument unless 0 <= h <= q and 2 <= delta <= q + 1.
BchCode build_bch(FieldPtr ctx, std::uint32_t delta, std::uint32_t h);

/// k x n matrix whose rows are the coefficient vectors of x^i g(x), i < k.
Matrix generator_matrix(const BchCode& code);

/// 2(delta-1) x n matrix over GF(q): each parity row expanded into its
/// coordinates in the basis {1, alpha} of GF(q^2) over GF(q). Its right
/// kernel over GF(q) is the code.
Matrix expanded_parity_matrix(const BchCode& code);

/// Trace word c_(a,b) = (Tr(a beta^(hi) + b beta^((h+1)i)))_{i=0..q}.
struct DualCodeword {
  Elem a, b;
  std::vector<Elem> word;
};

/// Requires delta = 3 (throws std::invalid_argument otherwise).
DualCodeword dual_codeword(const BchCode& code, Elem a, Elem b);

std::size_t hamming_weight(std::span<const Elem> word);

}  // namespace bchlab
