#pragma once

// Closed-form descriptions of the cyclotomic cosets (and their negations) that the
// code families rely on, checked member-for-member against direct orbit computation.

#include <cstdint>
#include <string>
#include <vector>

namespace negalcd {

enum class CosetLemma {
  SingletonsQMinus1,   // n | (q-1)/2: singletons, -C_{1+2j} = C_{1+2(n-j-1)}
  PairsQPlus1,         // n | (q+1)/2: pairs {1+2j, 1+2(n-1-j)}, every coset self-negating
  LengthQPlus1,        // n = q+1, 4 | n: two pair families, -C_{1+2j} = C_{1+2((q+1)/2+j)}
  HermitianQMinus1,    // n = (q-1)/gamma under q^2: singletons, -q C_{1+2j} by parity of gamma
  HermitianQSquared1,  // n = q^2+1 under q^2: pairs and two singletons; q = 3 mod 4 conjugation facts
};

std::string to_string(CosetLemma lemma);

/// Whether (q, n) satisfies the lemma's hypothesis (q an odd prime power).
bool lemma_applies(CosetLemma lemma, std::uint64_t q, std::uint32_t n);

struct LemmaCheck {
  CosetLemma lemma;
  std::uint64_t q = 0;
  std::uint32_t n = 0;
  std::size_t statements = 0;           // individual closed-form claims compared
  std::vector<std::string> mismatches;  // empty when every claim matched
};

LemmaCheck check_lemma(CosetLemma lemma, std::uint64_t q, std::uint32_t n);

/// Every applicable (lemma, q, n) with q <= q_max and 2n <= two_n_max.
std::vector<LemmaCheck> check_all_lemmas(std::uint64_t q_max, std::uint32_t two_n_max);

}  // namespace negalcd
