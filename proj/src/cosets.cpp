#include "negalcd/cosets.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "negalcd/errors.hpp"
#include "negalcd/number_theory.hpp"

namespace negalcd {

OddResidueSystem OddResidueSystem::make(std::uint32_t n, std::uint64_t base) {
  if (n == 0) throw ParameterError("length n must be positive");
  const std::uint64_t two_n = 2ULL * n;
  if (std::gcd(base % two_n, two_n) != 1)
    throw ParameterError("gcd(" + std::to_string(base) + ", " + std::to_string(two_n) + ") != 1");
  return {n, static_cast<std::uint32_t>(two_n), base};
}

std::vector<Residue> OddResidueSystem::residues() const {
  std::vector<Residue> r(n);
  for (std::uint32_t j = 0; j < n; ++j) r[j] = residue_at(j);
  return r;
}

bool CyclotomicCoset::contains(Residue s) const { return std::binary_search(members.begin(), members.end(), s); }

CyclotomicCoset coset(Residue s, const OddResidueSystem& sys) {
  if (!sys.contains(s))
    throw ParameterError("residue " + std::to_string(s) + " is not an odd residue modulo " + std::to_string(sys.two_n));
  const std::uint64_t b = sys.base % sys.two_n;
  CyclotomicCoset c;
  std::uint64_t x = s;
  do {
    c.members.push_back(static_cast<Residue>(x));
    x = x * b % sys.two_n;
  } while (x != s);
  std::sort(c.members.begin(), c.members.end());
  c.representative = c.members.front();
  return c;
}

std::vector<CyclotomicCoset> all_cosets(const OddResidueSystem& sys) {
  std::vector<bool> seen(sys.two_n, false);
  std::vector<CyclotomicCoset> out;
  for (Residue s = 1; s < sys.two_n; s += 2) {
    if (seen[s]) continue;
    auto c = coset(s, sys);
    for (const Residue x : c.members) seen[x] = true;
    out.push_back(std::move(c));
  }
  return out;
}

CyclotomicCoset negate_coset(const CyclotomicCoset& c, const OddResidueSystem& sys) {
  return coset(sys.two_n - c.representative, sys);
}

CyclotomicCoset negate_q_coset(const CyclotomicCoset& c, const OddResidueSystem& sys, std::uint64_t q) {
  if ((q % sys.two_n) * (q % sys.two_n) % sys.two_n != sys.base % sys.two_n)
    throw ParameterError("Hermitian negation needs base = q^2 (mod 2n)");
  const auto s = static_cast<Residue>(mod(-static_cast<std::int64_t>((q % sys.two_n) * c.representative % sys.two_n), sys.two_n));
  return coset(s, sys);
}

bool lcd_coset_test(const CyclotomicCoset& c, const OddResidueSystem& sys, InnerProduct mode, std::uint64_t q) {
  if (mode == InnerProduct::Euclidean) return negate_coset(c, sys) == c;
  return negate_q_coset(c, sys, q) == c;
}

std::vector<Residue> negate_set(const std::vector<Residue>& set, std::uint32_t two_n, std::uint64_t multiplier) {
  std::vector<Residue> out;
  out.reserve(set.size());
  const std::uint64_t m = multiplier % two_n;
  for (const Residue s : set) out.push_back(static_cast<Residue>((two_n - m * s % two_n) % two_n));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_coset_union(const std::vector<Residue>& set, const OddResidueSystem& sys) {
  for (const Residue s : set) {
    if (!sys.contains(s)) return false;
    const auto t = static_cast<Residue>(sys.base % sys.two_n * s % sys.two_n);
    if (!std::binary_search(set.begin(), set.end(), t)) return false;
  }
  return true;
}

std::uint64_t count_lcd_formula(std::uint32_t n) {
  const unsigned e = n % 2 == 0 ? (n - 2) / 2 : (n - 1) / 2;
  return 2 * ((1ULL << e) - 1);
}

std::uint64_t count_lcd_negacyclic(std::uint32_t n, std::uint64_t q) {
  if (!is_odd_prime_power(q)) throw ParameterError("q must be an odd prime power");
  if (n < 3 || (q - 1) / 2 % n != 0)
    throw ParameterError("count requires n >= 3 and n | (q - 1)/2 (n = " + std::to_string(n) +
                         ", q = " + std::to_string(q) + ")");
  if (n > 30) throw ParameterError("subset enumeration is limited to n <= 30");
  const auto sys = OddResidueSystem::make(n, q);
  const auto cosets = all_cosets(sys);
  const std::size_t c = cosets.size();

  auto closed = [&](const std::vector<Residue>& z) { return negate_set(z, sys.two_n, 1) == z; };
  auto union_of = [&](auto&& pick) {
    std::vector<Residue> z;
    for (std::size_t i = 0; i < c; ++i)
      if (pick(i)) z.insert(z.end(), cosets[i].members.begin(), cosets[i].members.end());
    std::sort(z.begin(), z.end());
    return z;
  };

  std::uint64_t count = 0;
  if (c <= 20) {
    // every subset of the partition
    for (std::uint64_t mask = 1; mask + 1 < (1ULL << c); ++mask)
      if (closed(union_of([&](std::size_t i) { return (mask >> i) & 1U; }))) ++count;
    return count;
  }
  // Larger partitions: a negation-closed union is a union of orbits {C, -C}; enumerate
  // those unions and still check each one explicitly.
  std::vector<int> orbit(c, -1);
  int orbits = 0;
  for (std::size_t i = 0; i < c; ++i) {
    if (orbit[i] >= 0) continue;
    orbit[i] = orbits;
    const auto neg = negate_coset(cosets[i], sys);
    for (std::size_t k = 0; k < c; ++k)
      if (cosets[k] == neg) orbit[k] = orbits;
    ++orbits;
  }
  for (std::uint64_t mask = 1; mask + 1 < (1ULL << orbits); ++mask)
    if (closed(union_of([&](std::size_t i) { return (mask >> orbit[i]) & 1U; }))) ++count;
  return count;
}

}  // namespace negalcd
