#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "negalcd/report.hpp"

namespace negalcd {

inline constexpr std::uint64_t kSearchQCap = 100;

struct SearchOptions {
  std::uint64_t q_min = 3;
  std::uint64_t q_max = 3;
  InnerProduct mode = InnerProduct::Euclidean;
  /// Restricts to one family; E1odd/E1even (and E2odd/E2even) match each other.
  std::optional<Family> family;
  AnalyzeOptions analyze;
};

/// Every admissible family member with q in [q_min, q_max]; Euclidean mode covers E1-E3,
/// Hermitian mode H1-H3. Identical (Q, n, Z) are kept once. Ordered by (Q, n, k, family, Z).
/// Throws ParameterError when q_max exceeds kSearchQCap or the range is empty.
std::vector<DefiningSet> search_sets(const SearchOptions& opt);
std::vector<CodeReport> search(const SearchOptions& opt);

}  // namespace negalcd
