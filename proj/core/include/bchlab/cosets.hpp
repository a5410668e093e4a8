#pragma once

#include <cstdint>
#include <vector>

namespace bchlab {

/// Orbit of an integer modulo n under multiplication by q.
struct CyclotomicCoset {
  std::uint32_t leader = 0;
  std::vector<std::uint32_t> members;  // sorted ascending

  std::size_t size() const { return members.size(); }
  friend bool operator==(const CyclotomicCoset&, const CyclotomicCoset&) = default;
};

/// q-cyclotomic coset of e modulo n. Requires gcd(n, q) = 1 and 0 <= e < n;
/// throws std::invalid_argument otherwise.
CyclotomicCoset coset_of(std::uint32_t e, std::uint32_t n, std::uint64_t q);

/// All q-cyclotomic cosets modulo n, sorted by leader. They partition Z_n.
std::vector<CyclotomicCoset> all_cosets(std::uint32_t n, std::uint64_t q);

/// Multiplicative order of q modulo n (gcd(n, q) = 1, n >= 1).
std::uint32_t multiplicative_order(std::uint64_t q, std::uint32_t n);

}  // namespace bchlab
