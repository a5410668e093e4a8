#include "bchlab/cosets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bchlab {

namespace {

void require_coprime(std::uint32_t n, std::uint64_t q) {
  if (n == 0) throw std::invalid_argument("cosets: modulus must be positive");
  if (std::gcd<std::uint64_t, std::uint64_t>(n, q) != 1)
    throw std::invalid_argument("cosets: gcd(n, q) != 1 for n = " + std::to_string(n) + ", q = " + std::to_string(q));
}

}  // namespace

CyclotomicCoset coset_of(std::uint32_t e, std::uint32_t n, std::uint64_t q) {
  require_coprime(n, q);
  if (e >= n) throw std::invalid_argument("cosets: representative out of range");
  CyclotomicCoset c;
  const std::uint64_t qm = q % n;
  std::uint64_t x = e;
  do {
    c.members.push_back(static_cast<std::uint32_t>(x));
    x = x * qm % n;
  } while (x != e);
  std::sort(c.members.begin(), c.members.end());
  c.leader = c.members.front();
  return c;
}

std::vector<CyclotomicCoset> all_cosets(std::uint32_t n, std::uint64_t q) {
  require_coprime(n, q);
  std::vector<CyclotomicCoset> out;
  std::vector<bool> seen(n, false);
  for (std::uint32_t e = 0; e < n; ++e) {
    if (seen[e]) continue;
    out.push_back(coset_of(e, n, q));
    for (auto m : out.back().members) seen[m] = true;
  }
  return out;
}

std::uint32_t multiplicative_order(std::uint64_t q, std::uint32_t n) {
  require_coprime(n, q);
  if (n == 1) return 1;
  std::uint64_t x = q % n;
  std::uint32_t ord = 1;
  while (x != 1) {
    x = x * (q % n) % n;
    ++ord;
  }
  return ord;
}

}  // namespace bchlab
