#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "negalcd/matrix.hpp"
#include "negalcd/negacyclic_code.hpp"

namespace negalcd {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultMinorBudget = 1'000'000;

/// (Q^k - 1)/(Q - 1), saturating at UINT64_MAX.
std::uint64_t projective_count(std::uint64_t field_size, std::uint32_t k);

struct WeightSearch {
  std::uint32_t min_weight = 0;
  std::uint64_t words = 0;                  // projective messages examined
  std::vector<std::uint64_t> distribution;  // projective codewords per weight 0..n
};

/// Weight distribution and minimum nonzero weight of the row space of a full-rank k x n generator matrix.
/// One message per projective point, walked in p-ary Gray order; split across threads
/// (0 = hardware concurrency).
WeightSearch min_weight_exhaustive(const Field& f, const Matrix& g, unsigned threads = 0);

/// Minimum distance of the k-dimensional dual of a code whose projective weight
/// distribution is given, by the MacWilliams identities in exact integer arithmetic.
std::uint32_t macwilliams_min_distance(const std::vector<std::uint64_t>& dual_projective, std::uint64_t field_size,
                                       std::uint32_t k);

struct DistanceResult {
  std::optional<std::uint32_t> exact;
  std::uint32_t lower = 0;  // equals upper when exact
  std::uint32_t upper = 0;
  std::optional<std::uint32_t> dual_distance;
  std::string method;  // "enumeration", "MacWilliams", "minors", "bracket"
  std::uint64_t words = 0;
};

/// Direct enumeration if (Q^k - 1)/(Q - 1) <= budget; else the dual weight distribution
/// pushed through MacWilliams; else the column-minor MDS test when C(n, k) <= minor_budget;
/// otherwise [bch, n - k + 1]. Throws ParameterError for k = 0.
DistanceResult minimum_distance(const NegacyclicCode& c, std::uint64_t budget = kDefaultBudget,
                                std::uint64_t minor_budget = kDefaultMinorBudget);

/// Every k columns of the generator matrix are independent. nullopt when C(n, k) > limit.
std::optional<bool> all_minors_nonsingular(const Field& f, const Matrix& g, std::uint64_t limit);

enum class MdsVerdict { True, False, Unverified };
std::string to_string(MdsVerdict v);
MdsVerdict mds_verdict(const NegacyclicCode& c, const DistanceResult& d);
MdsVerdict is_mds(const NegacyclicCode& c, std::uint64_t budget = kDefaultBudget);

}  // namespace negalcd
