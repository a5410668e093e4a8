#include "bchlab/theory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace bchlab {

namespace {

void check_h(std::uint32_t q, std::uint32_t h) {
  if (h > q) throw std::invalid_argument("h = " + std::to_string(h) + " outside [0, q]");
}

bool in_unit_circle(const FieldContext& f, Elem a) {
  return !a.is_zero() && f.log_unchecked(a) % (f.q() - 1) == 0;
}

}  // namespace

std::uint32_t predict_dimension(std::uint32_t q, std::uint32_t h) {
  check_h(q, h);
  if (q % 2 == 0) {
    if (2 * h == q) return q - 1;
    if (h == 0 || h == q) return q - 2;
    return q - 3;
  }
  if (h == 0 || h == q || 2 * h + 1 == q || 2 * h == q + 1) return q - 2;
  return q - 3;
}

std::uint32_t predict_dual_dimension(std::uint32_t q, std::uint32_t h) { return q + 1 - predict_dimension(q, h); }

bool d3_criterion(std::uint32_t q, std::uint32_t h) {
  return std::gcd(2 * std::uint64_t(h) + 1, std::uint64_t(q) + 1) > 1;
}

Elem d_big(const FieldContext& f, Elem x, Elem y, std::uint32_t h) {
  return f.mul(f.mul(f.pow(x, h), f.pow(y, h)), f.sub(y, x));
}

Elem e_ratio(const FieldContext& f, Elem x, Elem y, std::uint32_t h) {
  if (x == y) throw std::invalid_argument("e_ratio: x = y");
  const std::int64_t e = 2 * std::int64_t(h) + 1;
  return f.div(f.sub(f.pow(x, e), f.pow(y, e)), f.sub(x, y));
}

bool d_frobenius_holds(const FieldContext& f, Elem x, Elem y, std::uint32_t h) {
  const Elem d = d_big(f, x, y, h);
  const std::int64_t e = -2 * std::int64_t(h) - 1;
  const Elem rhs = f.neg(f.mul(f.mul(f.pow(x, e), f.pow(y, e)), d));
  return f.frobenius(d) == rhs;
}

bool e_frobenius_holds(const FieldContext& f, Elem x, Elem y, std::uint32_t h) {
  const Elem v = e_ratio(f, x, y, h);
  const std::int64_t e = -2 * std::int64_t(h);
  const Elem rhs = f.mul(f.mul(f.pow(x, e), f.pow(y, e)), v);
  return f.frobenius(v) == rhs;
}

Elem det3_direct(const FieldContext& f, Elem x, Elem y, Elem z, std::uint32_t h, bool first_row_h_plus_1) {
  const std::int64_t e = first_row_h_plus_1 ? std::int64_t(h) + 1 : std::int64_t(h);
  const std::array<Elem, 3> v{x, y, z};
  std::array<std::array<Elem, 3>, 3> m{};
  for (int c = 0; c < 3; ++c) {
    m[0][c] = f.pow(v[c], -e);
    m[1][c] = f.pow(v[c], h);
    m[2][c] = f.pow(v[c], std::int64_t(h) + 1);
  }
  auto minor = [&](int a, int b) { return f.sub(f.mul(m[1][a], m[2][b]), f.mul(m[1][b], m[2][a])); };
  Elem det = f.mul(m[0][0], minor(1, 2));
  det = f.sub(det, f.mul(m[0][1], minor(0, 2)));
  return f.add(det, f.mul(m[0][2], minor(0, 1)));
}

Elem det3_factored(const FieldContext& f, Elem x, Elem y, Elem z, std::uint32_t h, bool first_row_h_plus_1) {
  const std::int64_t e = first_row_h_plus_1 ? std::int64_t(h) + 1 : std::int64_t(h);
  const std::int64_t a = std::int64_t(h) + e + 1, b = std::int64_t(h) + e;
  auto diff = [&](Elem u, std::int64_t k) { return f.sub(f.pow(u, k), f.pow(y, k)); };
  const Elem bracket = f.sub(f.mul(diff(x, a), diff(z, b)), f.mul(diff(z, a), diff(x, b)));
  return f.mul(f.mul(f.mul(f.pow(x, -e), f.pow(y, -e)), f.pow(z, -e)), bracket);
}

bool dichotomy_holds(const FieldContext& f, Elem x, Elem y, Elem z, std::uint32_t h, bool first_row_h_plus_1) {
  if (!det3_direct(f, x, y, z, h, first_row_h_plus_1).is_zero()) return true;
  const std::int64_t e = first_row_h_plus_1 ? std::int64_t(h) + 1 : std::int64_t(h);
  auto all_equal = [&](std::int64_t k) { return f.pow(x, k) == f.pow(y, k) && f.pow(y, k) == f.pow(z, k); };
  return all_equal(std::int64_t(h) + e + 1) || all_equal(std::int64_t(h) + e);
}

bool validate_quadruple(const FieldContext& f, std::uint32_t h, const Quadruple& quad) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (!in_unit_circle(f, quad[i])) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (quad[i] == quad[j]) return false;
  }
  const auto [x, y, z, w] = quad;
  const Elem exw = e_ratio(f, x, w, h), eyw = e_ratio(f, y, w, h);
  if (exw.is_zero() || eyw.is_zero()) return false;
  return f.mul(e_ratio(f, x, z, h), eyw) == f.mul(e_ratio(f, y, z, h), exw);
}

std::optional<Quadruple> exists_e_quadruple(const FieldContext& f, std::uint32_t h) {
  const std::uint32_t q = f.q();
  if (d3_criterion(q, h))
    throw std::invalid_argument("exists_e_quadruple: needs gcd(2h+1, q+1) = 1");
  const std::uint32_t u_size = q + 1;
  if (u_size < 4) return std::nullopt;
  const std::vector<Elem> u = f.unit_circle();
  std::vector<Elem> p(u_size);
  for (std::uint32_t j = 0; j < u_size; ++j) p[j] = f.pow(u[j], 2 * std::int64_t(h) + 1);
  auto e = [&](std::uint32_t a, std::uint32_t b) { return f.div(f.sub(p[a], p[b]), f.sub(u[a], u[b])); };

  std::vector<std::uint32_t> stamp(f.size(), 0), who(f.size(), 0);
  std::uint32_t gen = 0;
  for (std::uint32_t z = 0; z < u_size; ++z) {
    for (std::uint32_t w = 0; w < u_size; ++w) {
      if (w == z) continue;
      ++gen;
      for (std::uint32_t x = 0; x < u_size; ++x) {
        if (x == z || x == w) continue;
        const Elem r = f.div(e(x, z), e(x, w));
        if (stamp[r.v] == gen) return Quadruple{u[who[r.v]], u[x], u[z], u[w]};
        stamp[r.v] = gen;
        who[r.v] = x;
      }
    }
  }
  return std::nullopt;
}

Quadruple odd_q_quadruple(const FieldContext& f, Elem x) {
  if (f.p() == 2) throw std::invalid_argument("odd_q_quadruple: q must be odd");
  const Elem minus_one = f.neg(kOne);
  if (!in_unit_circle(f, x) || x == kOne || x == minus_one)
    throw std::invalid_argument("odd_q_quadruple: x must lie in U_{q+1} outside {1, -1}");
  return Quadruple{x, f.inv(x), kOne, minus_one};
}

std::string_view to_string(DOutcome o) {
  switch (o) {
    case DOutcome::Exactly3: return "exactly-3";
    case DOutcome::Exactly4: return "exactly-4";
    case DOutcome::FourOrFive: return "four-or-five";
  }
  return "unknown";
}

DistancePrediction predict_min_distance(const FieldContext& f, std::uint32_t h, bool resolve) {
  check_h(f.q(), h);
  DistancePrediction out;
  if (d3_criterion(f.q(), h)) {
    out.outcome = DOutcome::Exactly3;
    out.resolved = 3;
  } else if (f.p() != 2) {
    out.outcome = DOutcome::Exactly4;
    out.resolved = 4;
  } else {
    out.outcome = DOutcome::FourOrFive;
    if (resolve) {
      out.quadruple = exists_e_quadruple(f, h);
      out.resolved = out.quadruple ? 4 : 5;
    }
  }
  return out;
}

DualBounds dual_distance_bounds(std::uint32_t q, std::uint32_t h) {
  check_h(q, h);
  DualBounds b;
  const std::uint64_t q1 = std::uint64_t(q) + 1;
  if (h == 0 || h == q || 2 * h + 1 == q || 2 * h == q || 2 * h == q + 1) return b;
  b.applicable = true;
  b.m = static_cast<std::uint32_t>(std::max(std::gcd(2 * std::uint64_t(h), q1), std::gcd(2 * std::uint64_t(h) + 2, q1)));
  b.lo = std::int64_t(q) - 2 * std::int64_t(h) - 1;
  b.hi = std::int64_t(q1) - b.m;
  return b;
}

std::string_view to_string(CodeClass c) {
  switch (c) {
    case CodeClass::MDS: return "MDS";
    case CodeClass::AMDS: return "AMDS";
    case CodeClass::NMDS: return "NMDS";
    case CodeClass::Other: return "other";
    case CodeClass::Undetermined: return "undetermined";
  }
  return "unknown";
}

CodeClass classify(std::uint32_t n, std::uint32_t k, std::optional<std::uint32_t> d, std::uint32_t k_dual,
                   std::optional<std::uint32_t> d_dual) {
  if (!d) return CodeClass::Undetermined;
  if (*d == n - k + 1) return CodeClass::MDS;
  if (*d == n - k) return d_dual && *d_dual == n - k_dual ? CodeClass::NMDS : CodeClass::AMDS;
  return CodeClass::Other;
}

std::int64_t singleton_like_max_d(std::uint32_t n, std::uint32_t k, std::uint32_t r) {
  if (r == 0) throw std::invalid_argument("singleton_like_max_d: r = 0");
  const std::int64_t ceil_kr = (std::int64_t(k) + r - 1) / r;
  return std::int64_t(n) - k - ceil_kr + 2;
}

std::int64_t cm_rhs_t1(std::uint32_t n, std::uint32_t d, std::uint32_t r) {
  if (r == 0) throw std::invalid_argument("cm_rhs_t1: r = 0");
  const std::int64_t k_opt = std::max<std::int64_t>(0, std::int64_t(n) - (std::int64_t(r) + 1) - d + 1);
  return std::int64_t(r) + k_opt;
}

bool cm_k_optimal(std::uint32_t n, std::uint32_t k, std::uint32_t d, std::uint32_t r, std::uint32_t) {
  return std::int64_t(k) >= cm_rhs_t1(n, d, r);
}

std::uint32_t locality(std::uint32_t d_dual) {
  if (d_dual < 2) throw std::invalid_argument("locality: dual distance must be at least 2");
  return d_dual - 1;
}

LrcAudit lrc_audit(std::uint32_t n, std::uint32_t k, std::uint32_t d, std::uint32_t d_dual, std::uint32_t q) {
  LrcAudit a;
  a.r = locality(d_dual);
  a.singleton_like_rhs = singleton_like_max_d(n, k, a.r);
  a.d_optimal = std::int64_t(d) == a.singleton_like_rhs;
  a.cm_rhs = cm_rhs_t1(n, d, a.r);
  a.k_optimal = cm_k_optimal(n, k, d, a.r, q);
  return a;
}

Prediction predict(const FieldContext& f, std::uint32_t h, bool resolve) {
  Prediction p;
  const std::uint32_t q = f.q();
  p.k = predict_dimension(q, h);
  p.k_dual = predict_dual_dimension(q, h);
  p.d = predict_min_distance(f, h, resolve);
  p.d_dual_bounds = dual_distance_bounds(q, h);
  std::optional<std::uint32_t> d_dual;
  if (p.d_dual_bounds.applicable && p.d_dual_bounds.lo == p.d_dual_bounds.hi)
    d_dual = static_cast<std::uint32_t>(p.d_dual_bounds.lo);
  p.cls = p.k == 0 ? CodeClass::Undetermined : classify(q + 1, p.k, p.d.resolved, p.k_dual, d_dual);
  return p;
}

}  // namespace bchlab
