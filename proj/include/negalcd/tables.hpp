#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "negalcd/report.hpp"

namespace negalcd {

/// One reproduced table entry. The verdict is computed from the claims and the derived report.
struct TableRow {
  std::string table;  // "1".."6" or "example29"
  DefiningSet input;
  ParameterClaim published;
  ParameterClaim theorem;
  CodeReport report;
  std::string verdict;  // "match" | "mismatch" | "paper-typo-suspected"
  std::vector<std::string> notes;
};

/// Exact claims need n, k and an exact d; lower-bound claims need n, k and a proven
/// lower bound at least the claimed one.
bool claim_matches(const ParameterClaim& claim, const CodeReport& r);

/// "match" if the published value matches, else "paper-typo-suspected" if the governing
/// formula matches, else "mismatch".
std::string verdict(const ParameterClaim& published, const ParameterClaim& theorem, const CodeReport& r);

std::vector<std::string> table_ids();
/// Throws ParameterError for an unknown id.
std::vector<TableRow> reproduce_table(const std::string& id, const AnalyzeOptions& opt = {});

nlohmann::ordered_json to_json(const TableRow& row);
std::string csv_header();
std::string to_csv(const TableRow& row);

}  // namespace negalcd
