#pragma once

// Table-driven arithmetic in GF(p^(2s)), the quadratic extension of GF(q),
// q = p^s. Elements are indices into the canonical enumeration: the value
// v = c_0 + c_1 p + ... + c_{2s-1} p^{2s-1} stands for the residue
// c_0 + c_1 x + ... modulo the field's defining polynomial. Zero is 0 and
// never enters the log domain.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace bchlab {

struct Elem {
  std::uint32_t v = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t value) : v(value) {}

  constexpr bool is_zero() const { return v == 0; }
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr Elem kZero{0};
inline constexpr Elem kOne{1};

/// Raised when a requested object would exceed a configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FieldOptions {
  /// Largest subfield size q accepted by build_field.
  std::uint64_t max_q = 1u << 12;
};

class FieldContext;
using FieldPtr = std::shared_ptr<const FieldContext>;

/// Builds GF(p^(2s)). The modulus is the lexicographically smallest monic
/// irreducible of degree 2s (coefficients compared from degree 0 upwards);
/// alpha is the first element in canonical order of multiplicative order
/// q^2 - 1. Throws std::invalid_argument for a non-prime p or s == 0 and
/// CapExceeded when q > options.max_q.
FieldPtr build_field(std::uint32_t p, std::uint32_t s, const FieldOptions& options = {});

class FieldContext {
 public:
  std::uint32_t p() const { return p_; }
  std::uint32_t s() const { return s_; }
  std::uint32_t q() const { return q_; }
  /// Number of elements of the extension, q^2.
  std::uint32_t size() const { return size_; }
  /// Order of the multiplicative group, q^2 - 1.
  std::uint32_t group_order() const { return order_; }
  /// Defining polynomial over F_p, lowest degree first, monic of degree 2s.
  std::span<const std::uint32_t> modulus() const { return modulus_; }

  Elem alpha() const { return alpha_; }
  Elem beta() const { return Elem{exp_[q_ - 1]}; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return Elem{a.v ^ b.v};
    const std::uint32_t alo = a.v % q_, ahi = a.v / q_;
    const std::uint32_t blo = b.v % q_, bhi = b.v / q_;
    return Elem{std::uint32_t(add_q_[alo * q_ + blo]) +
                q_ * std::uint32_t(add_q_[ahi * q_ + bhi])};
  }
  Elem neg(Elem a) const {
    if (p_ == 2) return a;
    return Elem{std::uint32_t(neg_q_[a.v % q_]) + q_ * std::uint32_t(neg_q_[a.v / q_])};
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a.is_zero() || b.is_zero()) return kZero;
    return Elem{exp_[log_[a.v] + log_[b.v]]};
  }
  /// Throws std::domain_error on division by zero.
  Elem div(Elem a, Elem b) const;
  /// Throws std::domain_error for zero.
  Elem inv(Elem a) const;
  /// a^e for any integer e; 0^0 = 1, and 0 raised to a negative power throws.
  Elem pow(Elem a, std::int64_t e) const;

  /// Discrete log base alpha, in [0, q^2 - 1). Throws std::domain_error for zero.
  std::uint32_t log(Elem a) const;
  /// alpha^e for e reduced modulo q^2 - 1.
  Elem exp(std::int64_t e) const;
  /// Unchecked fast paths for inner loops: e must be in [0, 2(q^2 - 1)).
  Elem exp_unchecked(std::uint32_t e) const { return Elem{exp_[e]}; }
  std::uint32_t log_unchecked(Elem a) const { return log_[a.v]; }

  Elem frobenius(Elem a) const { return pow(a, q_); }
  /// Relative trace x + x^q, an element of GF(q).
  Elem trace(Elem a) const { return add(a, frobenius(a)); }
  bool in_subfield(Elem a) const { return a.is_zero() || log_[a.v] % (q_ + 1) == 0; }

  /// GF(q) in canonical order: 0, then alpha^(j(q+1)) for j = 0..q-2.
  const std::vector<Elem>& subfield() const { return subfield_; }
  /// Position of a subfield element within subfield(). Throws for elements outside GF(q).
  std::uint32_t subfield_index(Elem a) const;

  /// The norm-one subgroup U_{q+1} as [beta^0, beta^1, ..., beta^q].
  std::vector<Elem> unit_circle() const;

  /// Coordinates (c0, c1) in GF(q) with a = c0 + c1 * alpha.
  std::pair<Elem, Elem> coordinates(Elem a) const;

  /// Multiplicative order of a nonzero element, from its discrete log.
  std::uint64_t order_of(Elem a) const;

  bool operator==(const FieldContext& other) const;

 private:
  friend FieldPtr build_field(std::uint32_t, std::uint32_t, const FieldOptions&);
  FieldContext() = default;

  std::uint32_t p_ = 0, s_ = 0, q_ = 0, size_ = 0, order_ = 0;
  std::vector<std::uint32_t> modulus_;
  Elem alpha_;
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<std::uint32_t> exp_;  // length 2 * order_
  std::vector<std::uint16_t> add_q_;
  std::vector<std::uint16_t> neg_q_;
  std::vector<Elem> subfield_;
  Elem coord_denominator_inv_;  // 1 / (alpha - alpha^q)
};

/// True if n is prime (trial division).
bool is_prime(std::uint64_t n);
/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// p^s with overflow checking; returns 0 on overflow of 64 bits.
std::uint64_t checked_pow(std::uint64_t p, std::uint32_t s);

}  // namespace bchlab
