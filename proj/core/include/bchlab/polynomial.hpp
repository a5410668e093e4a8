#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bchlab/field.hpp"

namespace bchlab {

/// Which field the coefficients are declared to live in. Subfield
/// coefficients are stored as elements of the ambient GF(q^2).
enum class FieldTag { Fq, Fq2 };

/// Dense univariate polynomial, lowest degree first. The leading
/// coefficient is nonzero unless the polynomial is zero (empty).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(FieldTag tag, std::vector<Elem> coeffs);

  FieldTag tag() const { return tag_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Elem lead() const { return c_.empty() ? kZero : c_.back(); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

  static Polynomial constant(FieldTag tag, Elem c) { return Polynomial(tag, {c}); }
  /// x^n - 1.
  static Polynomial x_pow_minus_one(const FieldContext& ctx, FieldTag tag, std::size_t n);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  FieldTag tag_ = FieldTag::Fq;
  std::vector<Elem> c_;
};

// Binary operations throw std::invalid_argument when the tags differ.
Polynomial poly_add(const FieldContext& ctx, const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const FieldContext& ctx, const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const FieldContext& ctx, const Polynomial& a, const Polynomial& b);
/// (quotient, remainder) with deg remainder < deg b. Throws std::domain_error for b = 0.
std::pair<Polynomial, Polynomial> poly_divmod(const FieldContext& ctx, const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial poly_gcd(const FieldContext& ctx, const Polynomial& a, const Polynomial& b);
/// Monic lcm; zero if either argument is zero.
Polynomial poly_lcm(const FieldContext& ctx, const Polynomial& a, const Polynomial& b);
Polynomial make_monic(const FieldContext& ctx, const Polynomial& a);
Elem poly_eval(const FieldContext& ctx, const Polynomial& a, Elem x);

/// Retags an F_{q^2} polynomial as F_q after checking that every
/// coefficient is fixed by Frobenius. Throws std::logic_error otherwise.
Polynomial project_to_subfield(const FieldContext& ctx, const Polynomial& a);

/// Primitive n-th root of unity alpha^((q^2-1)/n). For n = q + 1 this is beta.
/// Throws std::invalid_argument unless n divides q^2 - 1.
Elem root_of_unity(const FieldContext& ctx, std::uint32_t n);

/// Minimal polynomial over F_q of zeta^e, zeta = root_of_unity(ctx, n):
/// the product of (x - zeta^i) over the q-cyclotomic coset of e mod n,
/// formed in F_{q^2}[x] and projected to F_q.
Polynomial minimal_polynomial(const FieldContext& ctx, std::int64_t e, std::uint32_t n);

}  // namespace bchlab
