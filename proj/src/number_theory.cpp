#include "negalcd/number_theory.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace negalcd {

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  if (x % 2 == 0) return x == 2;
  for (std::uint64_t d = 3; d * d <= x; d += 2)
    if (x % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto primes = prime_divisors(q);
  if (primes.size() != 1) return std::nullopt;
  unsigned s = 0;
  for (std::uint64_t r = q; r > 1; r /= primes[0]) ++s;
  return std::make_pair(static_cast<std::uint32_t>(primes[0]), s);
}

bool is_odd_prime_power(std::uint64_t q) {
  const auto pp = prime_power(q);
  return pp && pp->first != 2;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d != 0) continue;
    out.push_back(d);
    while (x % d == 0) x /= d;
  }
  if (x > 1) out.push_back(x);
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  unsigned __int128 r = 1, b = base % m;
  while (exp > 0) {
    if (exp & 1U) r = r * b % m;
    b = b * b % m;
    exp >>= 1U;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (std::gcd(a, m) != 1) throw std::invalid_argument("multiplicative_order: gcd(a, m) != 1");
  if (m == 1) return 1;
  std::uint64_t x = a % m, ord = 1;
  while (x != 1) {
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * a % m);
    ++ord;
  }
  return ord;
}

std::optional<std::uint64_t> exact_sqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  if (r * r != x) return std::nullopt;
  return r;
}

std::vector<std::uint64_t> odd_prime_powers(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = lo; q <= hi; ++q)
    if (is_odd_prime_power(q)) out.push_back(q);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= x; ++d)
    if (x % d == 0) out.push_back(d);
  return out;
}

}  // namespace negalcd
