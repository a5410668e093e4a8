#include "bchlab/prime_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bchlab {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2) is the inverse.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

PrimePoly make_monic(const PrimePoly& f) {
  if (f.is_zero()) return f;
  const std::uint32_t p = f.p();
  const std::uint64_t lead_inv = inv_mod(f.coeffs().back(), p);
  std::vector<std::uint32_t> c(f.coeffs());
  for (auto& x : c) x = static_cast<std::uint32_t>(x * lead_inv % p);
  return PrimePoly(p, std::move(c));
}

}  // namespace

PrimePoly::PrimePoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 2) throw std::invalid_argument("PrimePoly: characteristic must be at least 2");
  for (auto& x : c_) x %= p_;
  trim();
}

void PrimePoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PrimePoly PrimePoly::operator+(const PrimePoly& o) const {
  std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = (r[i] + o.c_[i]) % p_;
  return PrimePoly(p_, std::move(r));
}

PrimePoly PrimePoly::operator-(const PrimePoly& o) const {
  std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = (r[i] + p_ - o.c_[i]) % p_;
  return PrimePoly(p_, std::move(r));
}

PrimePoly PrimePoly::operator*(const PrimePoly& o) const {
  if (is_zero() || o.is_zero()) return PrimePoly(p_, {});
  std::vector<std::uint64_t> acc(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      acc[i + j] = (acc[i + j] + std::uint64_t(c_[i]) * o.c_[j]) % p_;
  return PrimePoly(p_, std::vector<std::uint32_t>(acc.begin(), acc.end()));
}

PrimePoly PrimePoly::operator%(const PrimePoly& m) const {
  if (m.is_zero()) throw std::domain_error("PrimePoly: reduction modulo zero");
  std::vector<std::uint64_t> r(c_.begin(), c_.end());
  const std::size_t dm = m.c_.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.c_.back(), p_);
  for (std::size_t d = r.size(); d-- > dm;) {
    const std::uint64_t factor = r[d] * lead_inv % p_;
    if (factor == 0) continue;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::size_t k = d - dm + i;
      r[k] = (r[k] + p_ - factor * m.c_[i] % p_) % p_;
    }
  }
  r.resize(std::min(r.size(), dm));
  return PrimePoly(p_, std::vector<std::uint32_t>(r.begin(), r.end()));
}

PrimePoly gcd(PrimePoly a, PrimePoly b) {
  while (!b.is_zero()) {
    PrimePoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

PrimePoly powmod(const PrimePoly& base, std::uint64_t e, const PrimePoly& m) {
  PrimePoly result(base.p(), {1});
  result = result % m;
  PrimePoly b = base % m;
  for (; e; e >>= 1) {
    if (e & 1) result = (result * b) % m;
    b = (b * b) % m;
  }
  return result;
}

bool is_irreducible(const PrimePoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const PrimePoly x = PrimePoly::x(f.p());
  PrimePoly frob = x % f;  // x^(p^i) mod f
  for (int i = 1; i <= n / 2; ++i) {
    frob = powmod(frob, f.p(), f);
    if (gcd(f, frob - x).degree() != 0) return false;
  }
  return true;
}

}  // namespace bchlab
