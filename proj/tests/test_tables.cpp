#include <map>

#include "doctest.h"
#include "negalcd/errors.hpp"
#include "negalcd/tables.hpp"

using namespace negalcd;

namespace {

std::map<std::string, int> verdict_counts(const std::vector<TableRow>& rows) {
  std::map<std::string, int> out;
  for (const auto& r : rows) ++out[r.verdict];
  return out;
}

}  // namespace

TEST_CASE("row counts") {
  const std::map<std::string, std::size_t> expected = {{"1", 15}, {"2", 21}, {"3", 9},         {"4", 14},
                                                       {"5", 18}, {"6", 20}, {"example29", 17}};
  for (const auto& id : table_ids()) {
    CAPTURE(id);
    CHECK(reproduce_table(id).size() == expected.at(id));
  }
  CHECK_THROWS_AS(reproduce_table("7"), ParameterError);
}

TEST_CASE("Euclidean MDS tables match with exact distances") {
  for (const std::string id : {"1", "2"}) {
    for (const auto& r : reproduce_table(id)) {
      CAPTURE(r.published.to_string(r.input.field_size));
      CHECK(r.verdict == "match");
      CHECK(r.report.d_exact.has_value());
      CHECK(r.report.mds == "true");
      CHECK(r.report.lcd_euclidean);
    }
  }
  for (const auto& r : reproduce_table("1")) {
    if (r.input.n % 2 == 0) {
      REQUIRE_FALSE(r.notes.empty());
      CHECK(r.notes.front().find(r.theorem.to_string(r.input.field_size)) != std::string::npos);
    }
  }
}

TEST_CASE("Table 3 bounds and LCD") {
  for (const auto& r : reproduce_table("3")) {
    const int q = static_cast<int>(r.input.q);
    const int lam = *r.input.params.lambda;
    CHECK(r.verdict == "match");
    CHECK(r.report.k == static_cast<std::uint32_t>(4 * lam));
    CHECK(r.report.bch_bound >= static_cast<std::uint32_t>((q + 3) / 2 - 2 * lam));
    CHECK(r.report.lcd_euclidean);
    CHECK(r.report.hull_euclidean == 0u);
  }
}

TEST_CASE("Hermitian MDS tables") {
  const auto t4 = reproduce_table("4");
  CHECK(t4.front().verdict == "paper-typo-suspected");
  CHECK(t4.front().report.parameters == "[4, 2, 3]_25");
  CHECK(verdict_counts(t4) == std::map<std::string, int>{{"match", 13}, {"paper-typo-suspected", 1}});
  CHECK(verdict_counts(reproduce_table("5")) == std::map<std::string, int>{{"match", 18}});
  for (const std::string id : {"4", "5"})
    for (const auto& r : reproduce_table(id)) {
      CHECK(r.report.d_exact.has_value());
      CHECK(r.report.lcd_hermitian == true);
      CHECK(r.report.mds == "true");
    }
}

TEST_CASE("Table 6 cardinalities and bounds") {
  for (const auto& r : reproduce_table("6")) {
    const long q = static_cast<long>(r.input.q), l = *r.input.params.l;
    CHECK(r.verdict == "match");
    CHECK(r.report.k == static_cast<std::uint32_t>(q % 4 == 1 ? 4 * l : 4 * l + 1));
    CHECK(r.report.set_size == static_cast<std::uint32_t>(q % 4 == 1 ? q * q - 4 * l + 1 : q * q - 4 * l));
    CHECK(r.report.lcd_hermitian == true);
    CHECK(r.report.hull_hermitian == 0u);
    CHECK(r.report.bch_bound >= static_cast<std::uint32_t>((q * q - 4 * l + 3) / 2));
  }
}

TEST_CASE("worked example over GF(29^2)") {
  const auto rows = reproduce_table("example29");
  CHECK(verdict_counts(rows) == std::map<std::string, int>{{"match", 16}, {"paper-typo-suspected", 1}});
  CHECK(rows.back().report.parameters == "[4, 2, 3]_841");
  CHECK(rows[13].report.parameters == "[7, 6, 2]_841");
}

TEST_CASE("verdict logic") {
  CodeReport r;
  r.n = 6;
  r.k = 3;
  r.d_exact = 4;
  CHECK(verdict({6, 3, 4, false}, {6, 3, 4, false}, r) == "match");
  CHECK(verdict({6, 3, 3, true}, {6, 3, 4, false}, r) == "match");
  CHECK(verdict({7, 3, 4, false}, {6, 3, 4, false}, r) == "paper-typo-suspected");
  CHECK(verdict({7, 3, 4, false}, {6, 2, 5, false}, r) == "mismatch");
  CodeReport b;
  b.n = 10;
  b.k = 4;
  b.d_bracket = std::make_pair(5u, 7u);
  CHECK(claim_matches({10, 4, 5, true}, b));
  CHECK_FALSE(claim_matches({10, 4, 6, true}, b));
  CHECK_FALSE(claim_matches({10, 4, 5, false}, b));
}

TEST_CASE("CSV output") {
  CHECK(csv_header() == "table,q,n,gamma,param,published,theorem,derived,verdict,notes");
  const auto rows = reproduce_table("2");
  CHECK(to_csv(rows.front()) == "2,5,3,,lambda=1,\"[3, 2, 2]_5\",\"[3, 2, 2]_5\",\"[3, 2, 2]_5\",match,");
  const auto j = to_json(rows.front());
  CHECK(j["verdict"] == "match");
  CHECK(j["published"] == "[3, 2, 2]_5");
  CHECK(j["report"]["parameters"] == "[3, 2, 2]_5");
}
