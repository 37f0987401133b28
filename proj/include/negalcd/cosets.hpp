#pragma once

#include <cstdint>
#include <vector>

namespace negalcd {

using Residue = std::uint32_t;

/// The odd residues O_{2,n}(1) = {1 + 2i : 0 <= i < n} modulo 2n, acted on by
/// multiplication with base (q for the Euclidean case, q^2 for the Hermitian case).
struct OddResidueSystem {
  std::uint32_t n = 0;
  std::uint32_t two_n = 0;
  std::uint64_t base = 0;

  /// Throws ParameterError unless n >= 1 and gcd(base, 2n) = 1.
  static OddResidueSystem make(std::uint32_t n, std::uint64_t base);

  std::vector<Residue> residues() const;
  bool contains(Residue s) const { return s < two_n && s % 2 == 1; }
  /// Index j of the residue 1 + 2j.
  static std::uint32_t index_of(Residue s) { return (s - 1) / 2; }
  static Residue residue_at(std::uint32_t j) { return 1 + 2 * j; }
};

struct CyclotomicCoset {
  Residue representative = 0;   // minimum member
  std::vector<Residue> members;  // sorted

  bool contains(Residue s) const;
  friend bool operator==(const CyclotomicCoset&, const CyclotomicCoset&) = default;
};

/// Orbit of s under multiplication by sys.base; throws ParameterError for even or
/// out-of-range s.
CyclotomicCoset coset(Residue s, const OddResidueSystem& sys);

/// Partition of O_{2,n}(1), ordered by representative.
std::vector<CyclotomicCoset> all_cosets(const OddResidueSystem& sys);

/// Coset of -s.
CyclotomicCoset negate_coset(const CyclotomicCoset& c, const OddResidueSystem& sys);

/// Coset of -q s. Requires sys.base = q^2 modulo 2n.
CyclotomicCoset negate_q_coset(const CyclotomicCoset& c, const OddResidueSystem& sys, std::uint64_t q);

enum class InnerProduct { Euclidean, Hermitian };

/// Euclidean: c = -c. Hermitian(q): c = -q c.
bool lcd_coset_test(const CyclotomicCoset& c, const OddResidueSystem& sys, InnerProduct mode, std::uint64_t q = 0);

/// { -multiplier * s mod 2n : s in set }, sorted.
std::vector<Residue> negate_set(const std::vector<Residue>& set, std::uint32_t two_n, std::uint64_t multiplier);

/// True when the set is a union of cosets of sys.
bool is_coset_union(const std::vector<Residue>& set, const OddResidueSystem& sys);

/// Nontrivial (Z != empty, Z != O_{2,n}(1)) LCD negacyclic codes of length n over GF(q),
/// counted by enumerating unions of cosets. Requires q an odd prime power,
/// n | (q - 1)/2 and 3 <= n <= 30.
std::uint64_t count_lcd_negacyclic(std::uint32_t n, std::uint64_t q);

/// 2(2^{(n-2)/2} - 1) for even n, 2(2^{(n-1)/2} - 1) for odd n.
std::uint64_t count_lcd_formula(std::uint32_t n);

}  // namespace negalcd
