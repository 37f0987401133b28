#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "negalcd/defining_set.hpp"
#include "negalcd/distance.hpp"

namespace negalcd {

struct Evidence {
  std::string claim;
  std::string method;
  friend bool operator==(const Evidence&, const Evidence&) = default;
};

/// Verification certificate for one code.
struct CodeReport {
  std::string family;
  std::uint64_t q = 0;
  std::uint64_t field_size = 0;
  std::uint32_t n = 0;
  FamilyParams params;
  std::string inner_product;
  std::vector<Residue> z;
  std::vector<std::vector<std::uint32_t>> g;  // coefficient tuples, constant term first
  std::vector<std::uint32_t> delta;           // tuple over GF(p) in the splitting field
  unsigned splitting_degree = 0;
  std::string parameters;  // "[n, k, d]_Q" or "[n, k, >=b]_Q"
  std::uint32_t k = 0;
  std::uint32_t set_size = 0;
  std::uint32_t longest_run = 0;
  std::uint32_t bch_bound = 0;
  std::optional<std::uint32_t> d_exact;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> d_bracket;
  std::optional<std::uint32_t> dual_distance;
  std::string distance_method;
  bool lcd_euclidean = false;
  std::optional<bool> lcd_hermitian;
  std::optional<std::uint32_t> hull_euclidean;
  std::optional<std::uint32_t> hull_hermitian;
  std::string mds;  // "true" | "false" | "unverified"
  std::optional<ParameterClaim> claim;
  std::string claim_status;  // "holds" | "fails" | "undecided" | "" (no claim)
  std::vector<Evidence> evidence;
  std::vector<std::string> notes;

  friend bool operator==(const CodeReport&, const CodeReport&) = default;
};

struct AnalyzeOptions {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t minor_budget = kDefaultMinorBudget;
  std::uint32_t hull_max_length = 512;
  bool compute_distance = true;
};

CodeReport analyze(const DefiningSet& z, const AnalyzeOptions& opt = {});

/// "holds" when the derived values prove the claim, "fails" when they refute it.
std::string claim_status(const ParameterClaim& claim, const CodeReport& r);

nlohmann::ordered_json to_json(const CodeReport& r);
CodeReport report_from_json(const nlohmann::ordered_json& j);

}  // namespace negalcd
