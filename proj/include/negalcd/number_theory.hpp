#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace negalcd {

bool is_prime(std::uint64_t x);

/// (p, s) with q = p^s, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q);

bool is_odd_prime_power(std::uint64_t q);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t x);

std::uint64_t ipow(std::uint64_t base, unsigned exp);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// Least nonnegative residue of x modulo m for signed x.
inline std::uint64_t mod(std::int64_t x, std::uint64_t m) {
  const auto r = x % static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

/// Integer square root when x is a perfect square.
std::optional<std::uint64_t> exact_sqrt(std::uint64_t x);

/// Odd prime powers in [lo, hi], increasing.
std::vector<std::uint64_t> odd_prime_powers(std::uint64_t lo, std::uint64_t hi);

/// Positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t x);

}  // namespace negalcd
