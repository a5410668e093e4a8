#pragma once

// Closed-form predictions for C_(q,q+1,3,h) and the algebraic identities
// they rest on. Elements of U_{q+1} are passed as field elements.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "bchlab/field.hpp"

namespace bchlab {

/// Dimension of C_(q,q+1,3,h) from the case table. Throws std::invalid_argument for h > q.
std::uint32_t predict_dimension(std::uint32_t q, std::uint32_t h);
std::uint32_t predict_dual_dimension(std::uint32_t q, std::uint32_t h);

/// gcd(2h+1, q+1) > 1.
bool d3_criterion(std::uint32_t q, std::uint32_t h);

/// D(x,y) = x^h y^h (y - x).
Elem d_big(const FieldContext& ctx, Elem x, Elem y, std::uint32_t h);
/// E(x,y) = (x^(2h+1) - y^(2h+1)) / (x - y). Throws std::invalid_argument for x = y.
Elem e_ratio(const FieldContext& ctx, Elem x, Elem y, std::uint32_t h);

/// D(x,y)^q == -x^(-2h-1) y^(-2h-1) D(x,y)
bool d_frobenius_holds(const FieldContext& ctx, Elem x, Elem y, std::uint32_t h);
/// E(x,y)^q == x^(-2h) y^(-2h) E(x,y)
bool e_frobenius_holds(const FieldContext& ctx, Elem x, Elem y, std::uint32_t h);

/// 3x3 determinant with rows (v^-e), (v^h), (v^(h+1)) over v = x, y, z,
/// where e = h (first_row_h_plus_1 false) or e = h + 1.
Elem det3_direct(const FieldContext& ctx, Elem x, Elem y, Elem z, std::uint32_t h, bool first_row_h_plus_1 = false);
/// The same determinant through its product formula.
Elem det3_factored(const FieldContext& ctx, Elem x, Elem y, Elem z, std::uint32_t h, bool first_row_h_plus_1 = false);

/// For distinct x, y, z in U_{q+1} with vanishing determinant: x^(2h+1) = y^(2h+1) = z^(2h+1)
/// or x^(2h') = y^(2h') = z^(2h') with 2h' = 2h (resp. 2h + 2). Returns true when
/// the determinant is nonzero or one of the alternatives holds.
bool dichotomy_holds(const FieldContext& ctx, Elem x, Elem y, Elem z, std::uint32_t h, bool first_row_h_plus_1 = false);

using Quadruple = std::array<Elem, 4>;  // (x, y, z, w)

/// Pairwise distinct, all in U_{q+1}, and E(x,z) E(y,w) = E(y,z) E(x,w) with nonzero denominators.
bool validate_quadruple(const FieldContext& ctx, std::uint32_t h, const Quadruple& quad);

/// Collision search over ordered pairs (z, w) of U_{q+1} for x != y with
/// E(x,z)/E(x,w) = E(y,z)/E(y,w). The reported quadruple minimises the
/// exponents of (z, w, y) lexicographically, x being the smallest partner of y.
/// Throws std::invalid_argument unless gcd(2h+1, q+1) = 1.
std::optional<Quadruple> exists_e_quadruple(const FieldContext& ctx, std::uint32_t h);

/// (x, x^-1, 1, -1) for x in U_{q+1} outside {1, -1}; q odd.
Quadruple odd_q_quadruple(const FieldContext& ctx, Elem x);

enum class DOutcome { Exactly3, Exactly4, FourOrFive };
std::string_view to_string(DOutcome o);

struct DistancePrediction {
  DOutcome outcome = DOutcome::FourOrFive;
  /// 3 or 4 when forced; 4 or 5 when four-or-five was resolved by the quadruple search.
  std::optional<std::uint32_t> resolved;
  std::optional<Quadruple> quadruple;
};

/// exactly-3 iff d3_criterion, else exactly-4 for q odd, else four-or-five
/// (resolved to 4 if a quadruple exists and to 5 otherwise when resolve is set).
DistancePrediction predict_min_distance(const FieldContext& ctx, std::uint32_t h, bool resolve = true);

struct DualBounds {
  bool applicable = false;
  std::int64_t lo = 0, hi = 0;
  std::uint32_t m = 0;
};

/// (q - 2h - 1, q + 1 - m), m = max(gcd(2h, q+1), gcd(2h+2, q+1)); not
/// applicable for h in {0, (q-1)/2, q/2, (q+1)/2, q}.
DualBounds dual_distance_bounds(std::uint32_t q, std::uint32_t h);

enum class CodeClass { MDS, AMDS, NMDS, Other, Undetermined };
std::string_view to_string(CodeClass c);

/// MDS if d = n-k+1, NMDS if d = n-k and d_dual = n-k_dual, AMDS if d = n-k,
/// otherwise Other; Undetermined when d is unknown.
CodeClass classify(std::uint32_t n, std::uint32_t k, std::optional<std::uint32_t> d, std::uint32_t k_dual,
                   std::optional<std::uint32_t> d_dual);

/// n - k - ceil(k/r) + 2. Throws std::invalid_argument for r = 0.
std::int64_t singleton_like_max_d(std::uint32_t n, std::uint32_t k, std::uint32_t r);
/// r + (n - (r+1) - d + 1), the t = 1 term with k_opt(n', d) <= n' - d + 1.
std::int64_t cm_rhs_t1(std::uint32_t n, std::uint32_t d, std::uint32_t r);
/// k >= cm_rhs_t1(n, d, r). q is accepted for interface symmetry.
bool cm_k_optimal(std::uint32_t n, std::uint32_t k, std::uint32_t d, std::uint32_t r, std::uint32_t q);
/// d_dual - 1. Throws std::invalid_argument when the result would be 0.
std::uint32_t locality(std::uint32_t d_dual);

struct LrcAudit {
  std::uint32_t r = 0;
  bool d_optimal = false;
  bool k_optimal = false;
  std::int64_t singleton_like_rhs = 0;
  std::int64_t cm_rhs = 0;
};

LrcAudit lrc_audit(std::uint32_t n, std::uint32_t k, std::uint32_t d, std::uint32_t d_dual, std::uint32_t q);

struct Prediction {
  std::uint32_t k = 0, k_dual = 0;
  DistancePrediction d;
  DualBounds d_dual_bounds;
  CodeClass cls = CodeClass::Undetermined;
};

Prediction predict(const FieldContext& ctx, std::uint32_t h, bool resolve = true);

}  // namespace bchlab
