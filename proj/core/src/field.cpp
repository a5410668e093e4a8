#include "bchlab/field.hpp"

#include <numeric>
#include <string>

#include "bchlab/prime_poly.hpp"

namespace bchlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t checked_pow(std::uint64_t p, std::uint32_t s) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < s; ++i) {
    if (r > UINT64_MAX / p) return 0;
    r *= p;
  }
  return r;
}

namespace {

// Polynomial-basis conversions used only while bootstrapping the tables.
PrimePoly to_poly(std::uint32_t v, std::uint32_t p) {
  std::vector<std::uint32_t> c;
  for (; v; v /= p) c.push_back(v % p);
  return PrimePoly(p, std::move(c));
}

std::uint32_t from_poly(const PrimePoly& f) {
  std::uint32_t v = 0;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) v = v * f.p() + f.coeffs()[i];
  return v;
}

PrimePoly find_modulus(std::uint32_t p, std::uint32_t degree) {
  const std::uint64_t count = checked_pow(p, degree);
  std::vector<std::uint32_t> c(degree + 1, 0);
  c[degree] = 1;
  for (std::uint64_t t = 0; t < count; ++t) {
    // t enumerates (c_0, ..., c_{n-1}) with c_0 as the most significant digit.
    std::uint64_t rest = t;
    for (std::uint32_t i = degree; i-- > 0;) {
      c[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (c[0] == 0) continue;
    PrimePoly f(p, c);
    if (is_irreducible(f)) return f;
  }
  throw std::logic_error("build_field: no irreducible polynomial found");
}

}  // namespace

FieldPtr build_field(std::uint32_t p, std::uint32_t s, const FieldOptions& options) {
  if (!is_prime(p)) throw std::invalid_argument("build_field: p = " + std::to_string(p) + " is not prime");
  if (s == 0) throw std::invalid_argument("build_field: s must be positive");
  const std::uint64_t q64 = checked_pow(p, s);
  if (q64 == 0 || q64 > options.max_q || q64 > 0xFFFF)
    throw CapExceeded("build_field: q = " + std::to_string(p) + "^" + std::to_string(s) +
                      " exceeds the table cap q <= " + std::to_string(options.max_q));

  std::shared_ptr<FieldContext> ctx(new FieldContext());
  FieldContext& f = *ctx;
  f.p_ = p;
  f.s_ = s;
  f.q_ = static_cast<std::uint32_t>(q64);
  f.size_ = f.q_ * f.q_;
  f.order_ = f.size_ - 1;
  const std::uint32_t q = f.q_;

  const PrimePoly modulus = find_modulus(p, 2 * s);
  f.modulus_ = modulus.coeffs();

  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    return from_poly((to_poly(a, p) * to_poly(b, p)) % modulus);
  };

  const auto factors = prime_factors(f.order_);
  std::uint32_t alpha = 0;
  for (std::uint32_t v = 1; v < f.size_ && alpha == 0; ++v) {
    const PrimePoly g = to_poly(v, p);
    bool generator = true;
    for (auto r : factors) {
      if (from_poly(powmod(g, f.order_ / r, modulus)) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) alpha = v;
  }
  if (alpha == 0) throw std::logic_error("build_field: no generator found");
  f.alpha_ = Elem{alpha};

  if (p != 2) {
    // Digit-wise addition on the low and high halves of the canonical index.
    f.add_q_.resize(std::size_t(q) * q);
    f.neg_q_.resize(q);
    std::vector<std::uint32_t> pw(s);
    for (std::uint32_t i = 0, x = 1; i < s; ++i, x *= p) pw[i] = x;
    for (std::uint32_t a = 0; a < q; ++a) {
      std::uint32_t n = 0;
      for (std::uint32_t i = 0; i < s; ++i) n += ((p - (a / pw[i]) % p) % p) * pw[i];
      f.neg_q_[a] = static_cast<std::uint16_t>(n);
      for (std::uint32_t b = 0; b < q; ++b) {
        std::uint32_t sum = 0;
        for (std::uint32_t i = 0; i < s; ++i) sum += (((a / pw[i]) % p + (b / pw[i]) % p) % p) * pw[i];
        f.add_q_[std::size_t(a) * q + b] = static_cast<std::uint16_t>(sum);
      }
    }
  }

  // Multiplication by alpha is F_p-linear, so it splits over the two halves.
  std::vector<std::uint32_t> times_alpha_lo(q), times_alpha_hi(q);
  for (std::uint32_t v = 0; v < q; ++v) {
    times_alpha_lo[v] = slow_mul(alpha, v);
    times_alpha_hi[v] = slow_mul(alpha, v * q);
  }

  constexpr std::uint32_t kUnset = UINT32_MAX;
  f.log_.assign(f.size_, kUnset);
  f.exp_.assign(2 * std::size_t(f.order_), 0);
  std::uint32_t cur = 1;
  for (std::uint32_t i = 0; i < f.order_; ++i) {
    if (cur == 0 || f.log_[cur] != kUnset) throw std::logic_error("build_field: alpha is not a generator");
    f.exp_[i] = f.exp_[i + f.order_] = cur;
    f.log_[cur] = i;
    cur = f.add(Elem{times_alpha_lo[cur % q]}, Elem{times_alpha_hi[cur / q]}).v;
  }
  if (cur != 1) throw std::logic_error("build_field: exp table does not close");
  f.log_[0] = 0;

  f.subfield_.reserve(q);
  f.subfield_.push_back(kZero);
  for (std::uint32_t j = 0; j + 1 < q; ++j) f.subfield_.push_back(Elem{f.exp_[j * (q + 1)]});

  f.coord_denominator_inv_ = f.inv(f.sub(f.alpha_, f.frobenius(f.alpha_)));
  return ctx;
}

Elem FieldContext::div(Elem a, Elem b) const {
  if (b.is_zero()) throw std::domain_error("field: division by zero");
  if (a.is_zero()) return kZero;
  return Elem{exp_[log_[a.v] + order_ - log_[b.v]]};
}

Elem FieldContext::inv(Elem a) const {
  if (a.is_zero()) throw std::domain_error("field: zero has no inverse");
  return Elem{exp_[order_ - log_[a.v]]};
}

Elem FieldContext::pow(Elem a, std::int64_t e) const {
  if (a.is_zero()) {
    if (e == 0) return kOne;
    if (e < 0) throw std::domain_error("field: zero raised to a negative power");
    return kZero;
  }
  std::int64_t r = e % std::int64_t(order_);
  if (r < 0) r += order_;
  return Elem{exp_[std::uint64_t(log_[a.v]) * std::uint64_t(r) % order_]};
}

std::uint32_t FieldContext::log(Elem a) const {
  if (a.is_zero()) throw std::domain_error("field: log of zero");
  return log_[a.v];
}

Elem FieldContext::exp(std::int64_t e) const {
  std::int64_t r = e % std::int64_t(order_);
  if (r < 0) r += order_;
  return Elem{exp_[r]};
}

std::uint32_t FieldContext::subfield_index(Elem a) const {
  if (a.is_zero()) return 0;
  const std::uint32_t l = log_[a.v];
  if (l % (q_ + 1) != 0) throw std::domain_error("field: element is not in GF(q)");
  return l / (q_ + 1) + 1;
}

std::vector<Elem> FieldContext::unit_circle() const {
  std::vector<Elem> u;
  u.reserve(q_ + 1);
  for (std::uint32_t j = 0; j <= q_; ++j) u.push_back(Elem{exp_[j * (q_ - 1)]});
  return u;
}

std::pair<Elem, Elem> FieldContext::coordinates(Elem a) const {
  const Elem c1 = mul(sub(a, frobenius(a)), coord_denominator_inv_);
  const Elem c0 = sub(a, mul(c1, alpha_));
  return {c0, c1};
}

std::uint64_t FieldContext::order_of(Elem a) const {
  if (a.is_zero()) throw std::domain_error("field: zero has no multiplicative order");
  return order_ / std::gcd<std::uint64_t, std::uint64_t>(log_[a.v], order_);
}

bool FieldContext::operator==(const FieldContext& o) const {
  return p_ == o.p_ && s_ == o.s_ && modulus_ == o.modulus_ && alpha_ == o.alpha_ && log_ == o.log_ &&
         exp_ == o.exp_;
}

}  // namespace bchlab
