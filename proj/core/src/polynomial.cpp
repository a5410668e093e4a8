#include "bchlab/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "bchlab/cosets.hpp"

namespace bchlab {

namespace {

void trim(std::vector<Elem>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

void check_tags(const Polynomial& a, const Polynomial& b) {
  if (a.tag() != b.tag()) throw std::invalid_argument("polynomial: operands live over different fields");
}

}  // namespace

Polynomial::Polynomial(FieldTag tag, std::vector<Elem> coeffs) : tag_(tag), c_(std::move(coeffs)) { trim(c_); }

Polynomial Polynomial::x_pow_minus_one(const FieldContext& ctx, FieldTag tag, std::size_t n) {
  std::vector<Elem> c(n + 1, kZero);
  c[0] = ctx.neg(kOne);
  c[n] = ctx.add(c[n], kOne);
  return Polynomial(tag, std::move(c));
}

Polynomial poly_add(const FieldContext& ctx, const Polynomial& a, const Polynomial& b) {
  check_tags(a, b);
  std::vector<Elem> r(std::max(a.coeffs().size(), b.coeffs().size()), kZero);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = ctx.add(a.coeff(i), b.coeff(i));
  return Polynomial(a.tag(), std::move(r));
}

Polynomial poly_sub(const FieldContext& ctx, const Polynomial& a, const Polynomial& b) {
  check_tags(a, b);
  std::vector<Elem> r(std::max(a.coeffs().size(), b.coeffs().size()), kZero);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = ctx.sub(a.coeff(i), b.coeff(i));
  return Polynomial(a.tag(), std::move(r));
}

Polynomial poly_mul(const FieldContext& ctx, const Polynomial& a, const Polynomial& b) {
  check_tags(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.tag(), {});
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Elem> r(x.size() + y.size() - 1, kZero);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = ctx.add(r[i + j], ctx.mul(x[i], y[j]));
  }
  return Polynomial(a.tag(), std::move(r));
}

std::pair<Polynomial, Polynomial> poly_divmod(const FieldContext& ctx, const Polynomial& a, const Polynomial& b) {
  check_tags(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial: division by the zero polynomial");
  if (a.degree() < b.degree()) return {Polynomial(a.tag(), {}), a};
  std::vector<Elem> rem = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  const Elem lead_inv = ctx.inv(b.lead());
  std::vector<Elem> quot(rem.size() - db, kZero);
  for (std::size_t k = rem.size(); k-- > db;) {
    const Elem factor = ctx.mul(rem[k], lead_inv);
    quot[k - db] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] = ctx.sub(rem[k - db + i], ctx.mul(factor, d[i]));
  }
  rem.resize(db);
  return {Polynomial(a.tag(), std::move(quot)), Polynomial(a.tag(), std::move(rem))};
}

Polynomial make_monic(const FieldContext& ctx, const Polynomial& a) {
  if (a.is_zero()) return a;
  const Elem lead_inv = ctx.inv(a.lead());
  std::vector<Elem> c(a.coeffs());
  for (auto& x : c) x = ctx.mul(x, lead_inv);
  return Polynomial(a.tag(), std::move(c));
}

Polynomial poly_gcd(const FieldContext& ctx, const Polynomial& a, const Polynomial& b) {
  check_tags(a, b);
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = poly_divmod(ctx, x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(ctx, x);
}

Polynomial poly_lcm(const FieldContext& ctx, const Polynomial& a, const Polynomial& b) {
  check_tags(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.tag(), {});
  const Polynomial g = poly_gcd(ctx, a, b);
  return make_monic(ctx, poly_mul(ctx, poly_divmod(ctx, a, g).first, b));
}

Elem poly_eval(const FieldContext& ctx, const Polynomial& a, Elem x) {
  Elem acc = kZero;
  const auto& c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = ctx.add(ctx.mul(acc, x), c[i]);
  return acc;
}

Polynomial project_to_subfield(const FieldContext& ctx, const Polynomial& a) {
  for (Elem c : a.coeffs())
    if (!ctx.in_subfield(c)) throw std::logic_error("polynomial: coefficient outside GF(q)");
  return Polynomial(FieldTag::Fq, a.coeffs());
}

Elem root_of_unity(const FieldContext& ctx, std::uint32_t n) {
  if (n == 0 || ctx.group_order() % n != 0)
    throw std::invalid_argument("root_of_unity: n must divide q^2 - 1");
  return ctx.exp(ctx.group_order() / n);
}

Polynomial minimal_polynomial(const FieldContext& ctx, std::int64_t e, std::uint32_t n) {
  const Elem zeta = root_of_unity(ctx, n);
  std::int64_t r = e % std::int64_t(n);
  if (r < 0) r += n;
  const CyclotomicCoset coset = coset_of(static_cast<std::uint32_t>(r), n, ctx.q());
  Polynomial acc = Polynomial::constant(FieldTag::Fq2, kOne);
  for (std::uint32_t i : coset.members) {
    const Polynomial factor(FieldTag::Fq2, {ctx.neg(ctx.pow(zeta, i)), kOne});
    acc = poly_mul(ctx, acc, factor);
  }
  return project_to_subfield(ctx, acc);
}

}  // namespace bchlab
