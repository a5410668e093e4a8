#pragma once

// Polynomials over the prime field F_p with plain integer coefficients.
// Used to pick the defining polynomial of GF(p^(2s)) before any tables exist.

#include <cstdint>
#include <vector>

namespace bchlab {

/// Coefficients lowest degree first, each in [0, p). Trailing zeros trimmed.
class PrimePoly {
 public:
  PrimePoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  std::uint32_t p() const { return p_; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  friend bool operator==(const PrimePoly&, const PrimePoly&) = default;

  PrimePoly operator+(const PrimePoly& o) const;
  PrimePoly operator-(const PrimePoly& o) const;
  PrimePoly operator*(const PrimePoly& o) const;
  /// Remainder modulo a nonzero polynomial.
  PrimePoly operator%(const PrimePoly& o) const;

  static PrimePoly x(std::uint32_t p) { return PrimePoly(p, {0, 1}); }

 private:
  void trim();
  std::uint32_t p_;
  std::vector<std::uint32_t> c_;
};

PrimePoly gcd(PrimePoly a, PrimePoly b);
/// base^e mod m.
PrimePoly powmod(const PrimePoly& base, std::uint64_t e, const PrimePoly& m);

/// Rabin's test: a monic f of degree n is irreducible over F_p iff
/// gcd(x^(p^i) - x mod f, f) = 1 for every 1 <= i <= n/2.
/// Degree-1 polynomials are irreducible; constants are not.
bool is_irreducible(const PrimePoly& f);

}  // namespace bchlab
