#include <random>

#include "doctest.h"
#include "bchlab/cosets.hpp"
#include "bchlab/polynomial.hpp"
#include "bchlab/prime_poly.hpp"

using namespace bchlab;

namespace {

std::size_t count_irreducible_monic(std::uint32_t p, std::uint32_t degree) {
  std::size_t count = 0;
  std::uint64_t total = checked_pow(p, degree);
  for (std::uint64_t v = 0; v < total; ++v) {
    std::vector<std::uint32_t> c(degree + 1, 0);
    std::uint64_t t = v;
    for (std::uint32_t i = 0; i < degree; ++i, t /= p) c[i] = static_cast<std::uint32_t>(t % p);
    c[degree] = 1;
    count += is_irreducible(PrimePoly(p, c));
  }
  return count;
}

Polynomial random_poly(const FieldContext& f, std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<std::uint32_t> dist(0, f.size() - 1);
  std::vector<Elem> c(degree + 1);
  for (auto& e : c) e = Elem{dist(rng)};
  if (c.back().is_zero()) c.back() = kOne;
  return Polynomial(FieldTag::Fq2, c);
}

}  // namespace

TEST_CASE("irreducible counts over prime fields") {
  CHECK(count_irreducible_monic(2, 2) == 1);
  CHECK(count_irreducible_monic(2, 4) == 3);
  CHECK(count_irreducible_monic(2, 6) == 9);
  CHECK(count_irreducible_monic(3, 2) == 3);
  CHECK(count_irreducible_monic(3, 4) == 18);
  CHECK(count_irreducible_monic(5, 2) == 10);
}

TEST_CASE("prime polynomial arithmetic") {
  const PrimePoly a(3, {1, 0, 1});  // x^2 + 1
  CHECK(is_irreducible(a));
  CHECK_FALSE(is_irreducible(PrimePoly(2, {1, 0, 1})));
  CHECK(is_irreducible(PrimePoly(5, {3, 1})));
  CHECK_FALSE(is_irreducible(PrimePoly(5, {3})));
  const PrimePoly b(3, {2, 1});  // x + 2
  CHECK((a * b) % a == PrimePoly(3, {}));
  CHECK(gcd(a * b, b * b).degree() == 1);
  CHECK(powmod(PrimePoly::x(3), 9, a) == PrimePoly::x(3));
  CHECK(powmod(PrimePoly::x(3), 4, a) == PrimePoly(3, {1}));
  CHECK((a + b) - b == a);
}

TEST_CASE("division identity and gcd over GF(q^2)") {
  std::mt19937_64 rng(3);
  const auto f = build_field(3, 2);
  for (int i = 0; i < 200; ++i) {
    const Polynomial a = random_poly(*f, rng, 7), b = random_poly(*f, rng, 3);
    const auto [quo, rem] = poly_divmod(*f, a, b);
    CHECK(rem.degree() < b.degree());
    CHECK(poly_add(*f, poly_mul(*f, quo, b), rem) == a);
    const Polynomial c = random_poly(*f, rng, 2);
    const Polynomial g = poly_gcd(*f, poly_mul(*f, a, c), poly_mul(*f, b, c));
    CHECK(poly_divmod(*f, g, make_monic(*f, c)).second.is_zero());
    const Polynomial l = poly_lcm(*f, a, b);
    CHECK(poly_divmod(*f, l, a).second.is_zero());
    CHECK(poly_divmod(*f, l, b).second.is_zero());
  }
}

TEST_CASE("polynomial errors") {
  const auto f = build_field(2, 2);
  const Polynomial a(FieldTag::Fq, {kOne, kOne});
  const Polynomial b(FieldTag::Fq2, {kOne, f->alpha()});
  CHECK_THROWS_AS(poly_add(*f, a, b), std::invalid_argument);
  CHECK_THROWS_AS(poly_divmod(*f, a, Polynomial(FieldTag::Fq, {})), std::domain_error);
  CHECK_THROWS_AS(project_to_subfield(*f, b), std::logic_error);
  CHECK_THROWS_AS(root_of_unity(*f, 7), std::invalid_argument);
  CHECK(poly_gcd(*f, Polynomial(FieldTag::Fq, {}), Polynomial(FieldTag::Fq, {})).is_zero());
}

TEST_CASE("minimal polynomials factor x^(q+1) - 1") {
  for (auto [p, s] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}, {5u, 2u}}) {
    const auto f = build_field(p, s);
    const std::uint32_t n = f->q() + 1;
    CHECK(root_of_unity(*f, n) == f->beta());
    Polynomial prod = Polynomial::constant(FieldTag::Fq, kOne);
    for (const auto& c : all_cosets(n, f->q())) {
      const Polynomial m = minimal_polynomial(*f, c.leader, n);
      CHECK(m.tag() == FieldTag::Fq);
      CHECK(m.degree() == static_cast<int>(c.size()));
      CHECK(m.lead() == kOne);
      for (Elem e : m.coeffs()) CHECK(f->in_subfield(e));
      for (auto e : c.members) CHECK(poly_eval(*f, m, f->pow(f->beta(), e)) == kZero);
      prod = poly_mul(*f, prod, m);
    }
    CHECK(prod == Polynomial::x_pow_minus_one(*f, FieldTag::Fq, n));
  }
}

TEST_CASE("cyclotomic cosets") {
  const auto cosets = all_cosets(10, 9);
  REQUIRE(cosets.size() == 6);
  CHECK(cosets[1] == CyclotomicCoset{1, {1, 9}});
  CHECK(cosets[4] == CyclotomicCoset{4, {4, 6}});
  CHECK(coset_of(5, 10, 9) == CyclotomicCoset{5, {5}});
  CHECK(coset_of(7, 10, 9).leader == 3);
  CHECK(multiplicative_order(9, 10) == 2);
  CHECK(multiplicative_order(2, 9) == 6);
  std::size_t total = 0;
  for (const auto& c : all_cosets(65, 8)) total += c.size();
  CHECK(total == 65);
  CHECK_THROWS_AS(coset_of(1, 10, 5), std::invalid_argument);
  CHECK_THROWS_AS(coset_of(10, 10, 9), std::invalid_argument);
  CHECK_THROWS_AS(all_cosets(6, 4), std::invalid_argument);
}
