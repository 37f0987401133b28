#include "negalcd/tables.hpp"

#include <array>
#include <functional>
#include <sstream>

#include "negalcd/errors.hpp"

namespace negalcd {

using json = nlohmann::ordered_json;

namespace {

struct RowPlan {
  std::function<DefiningSet()> build;
  ParameterClaim published;
  std::optional<ParameterClaim> theorem;  // defaults to the family claim
  std::vector<std::string> notes;
};

ParameterClaim exact(int n, int k, int d) { return {n, k, d, false}; }
ParameterClaim bound(int n, int k, int d) { return {n, k, d, true}; }

std::vector<RowPlan> table1() {
  struct R {
    std::uint64_t q;
    std::uint32_t n;
    int lo, hi;
  };
  std::vector<RowPlan> out;
  for (const R r : {R{7, 3, 0, 0}, R{9, 4, 1, 1}, R{11, 5, 0, 1}, R{13, 6, 1, 2}, R{17, 8, 1, 3}, R{17, 4, 1, 1},
                    R{19, 9, 0, 3}, R{19, 3, 0, 0}}) {
    const int n = static_cast<int>(r.n);
    for (int lam = r.lo; lam <= r.hi; ++lam) {
      RowPlan s;
      s.build = [r, lam] { return euclidean_family1(r.q, r.n, lam); };
      if (n % 2 == 1) {
        s.published = exact(n, n - 1 - 2 * lam, 2 * (lam + 1));
        s.theorem = s.published;
      } else {
        s.published = exact(n, n - 2 * lam, 2 * lam + 1);
        s.theorem = exact(n, n - 2 * lam - 2, 2 * lam + 3);
        s.notes.push_back("the even-n statement with i = 0..lambda reads " + s.theorem->to_string(r.q) +
                          "; the row is built with i = 0..lambda-1, which the printed value follows");
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<RowPlan> table2() {
  struct R {
    std::uint64_t q;
    std::uint32_t n;
    int lo, hi;
  };
  std::vector<RowPlan> out;
  for (const R r : {R{5, 3, 1, 1}, R{7, 4, 1, 1}, R{9, 5, 1, 2}, R{11, 6, 1, 2}, R{11, 3, 1, 1}, R{13, 7, 1, 3},
                    R{17, 9, 1, 4}, R{17, 3, 1, 1}, R{19, 10, 1, 4}, R{19, 5, 1, 2}}) {
    const int n = static_cast<int>(r.n);
    for (int lam = r.lo; lam <= r.hi; ++lam) {
      RowPlan s;
      s.build = [r, lam] { return euclidean_family2(r.q, r.n, lam); };
      s.published = exact(n, 2 * lam, n - 2 * lam + 1);
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<RowPlan> table3() {
  std::vector<RowPlan> out;
  for (const auto& [q, hi] : {std::pair<int, int>{19, 4}, {23, 5}}) {
    for (int lam = 1; lam <= hi; ++lam) {
      RowPlan s;
      const auto qq = static_cast<std::uint64_t>(q);
      s.build = [qq, lam] { return euclidean_family3(qq, lam); };
      s.published = bound(q + 1, 4 * lam, (q + 3) / 2 - 2 * lam);
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<RowPlan> hermitian_mds_table(const std::vector<std::array<int, 4>>& rows, bool q1) {
  std::vector<RowPlan> out;
  for (const auto& [q, n, gamma, hi] : rows) {
    for (int l = 0; l <= hi; ++l) {
      RowPlan s;
      const auto qq = static_cast<std::uint64_t>(q);
      const int g = gamma;
      if (q1) {
        s.build = [qq, g, l] { return hermitian_family1(qq, g, l); };
        s.published = exact(n, n - 2 * l - 2, 2 * l + 3);
      } else {
        s.build = [qq, g, l] { return hermitian_family2(qq, g, l); };
        s.published = exact(n, n - 2 * l - 1, 2 * l + 2);
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<RowPlan> table4() {
  auto out = hermitian_mds_table({{13, 12, 1, 2}, {13, 6, 2, 1}, {17, 16, 1, 3}, {17, 8, 2, 2}, {17, 4, 4, 0}}, true);
  RowPlan first;
  first.build = [] { return hermitian_family1(5, 1, 0); };
  first.published = exact(5, 4, 2);
  first.notes.push_back("printed value [5, 4, 2] has length 5 although n = (q - 1)/gamma = 4");
  out.insert(out.begin(), std::move(first));
  return out;
}

std::vector<RowPlan> table5() {
  return hermitian_mds_table(
      {{7, 6, 1, 1}, {11, 10, 1, 2}, {11, 5, 2, 1}, {19, 18, 1, 4}, {19, 9, 2, 3}, {19, 6, 3, 1}}, false);
}

std::vector<RowPlan> table6() {
  std::vector<RowPlan> out;
  for (const auto& [q, lo, hi] : {std::array<int, 3>{3, 0, 2}, {5, 4, 6}, {7, 6, 12}, {13, 36, 42}}) {
    for (int l = lo; l <= hi; ++l) {
      RowPlan s;
      const auto qq = static_cast<std::uint64_t>(q);
      s.build = [qq, l] { return hermitian_family3(qq, l); };
      const int k = q % 4 == 1 ? 4 * l : 4 * l + 1;
      s.published = bound(q * q + 1, k, (q * q - 4 * l + 3) / 2);
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<RowPlan> example29() {
  const std::vector<std::array<int, 3>> printed = {
      {28, 26, 3}, {28, 24, 5}, {28, 22, 7}, {28, 20, 9}, {28, 18, 11}, {28, 16, 13}, {28, 14, 15}, {14, 12, 3}, {14, 10, 5},
      {14, 8, 7},  {14, 6, 9},  {14, 4, 11}, {14, 2, 13}, {7, 6, 2},    {7, 4, 4},    {7, 2, 6},    {4, 3, 2}};
  std::vector<std::pair<int, int>> params;  // (gamma, l)
  for (int l = 0; l <= 6; ++l) params.emplace_back(1, l);
  for (int l = 0; l <= 5; ++l) params.emplace_back(2, l);
  for (int l = 0; l <= 2; ++l) params.emplace_back(4, l);
  params.emplace_back(7, 0);
  std::vector<RowPlan> out;
  for (std::size_t i = 0; i < printed.size(); ++i) {
    RowPlan s;
    const auto [g, l] = params[i];
    s.build = [g, l] { return hermitian_family1(29, g, l); };
    s.published = exact(printed[i][0], printed[i][1], printed[i][2]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<RowPlan> plans(const std::string& id) {
  if (id == "1") return table1();
  if (id == "2") return table2();
  if (id == "3") return table3();
  if (id == "4") return table4();
  if (id == "5") return table5();
  if (id == "6") return table6();
  if (id == "example29") return example29();
  throw ParameterError("unknown table '" + id + "' (expected 1-6 or example29)");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string param_text(const FamilyParams& p) {
  std::ostringstream os;
  if (p.lambda) os << "lambda=" << *p.lambda;
  if (p.l) os << "l=" << *p.l;
  return os.str();
}

}  // namespace

bool claim_matches(const ParameterClaim& claim, const CodeReport& r) {
  if (claim.n != static_cast<int>(r.n) || claim.k != static_cast<int>(r.k)) return false;
  const auto lo = r.d_exact ? *r.d_exact : r.d_bracket->first;
  const auto hi = r.d_exact ? *r.d_exact : r.d_bracket->second;
  const auto d = static_cast<std::uint32_t>(claim.d);
  if (claim.d_is_lower_bound) return lo >= d;
  return lo == d && hi == d;
}

std::string verdict(const ParameterClaim& published, const ParameterClaim& theorem, const CodeReport& r) {
  if (claim_matches(published, r)) return "match";
  if (claim_matches(theorem, r)) return "paper-typo-suspected";
  return "mismatch";
}

std::vector<std::string> table_ids() { return {"1", "2", "3", "4", "5", "6", "example29"}; }

std::vector<TableRow> reproduce_table(const std::string& id, const AnalyzeOptions& opt) {
  std::vector<TableRow> rows;
  for (auto& s : plans(id)) {
    TableRow row;
    row.table = id;
    row.input = s.build();
    row.published = s.published;
    row.theorem = s.theorem ? *s.theorem : *family_claim(row.input);
    row.report = analyze(row.input, opt);
    row.verdict = verdict(row.published, row.theorem, row.report);
    row.notes = std::move(s.notes);
    if (row.verdict != "match")
      row.notes.push_back("printed " + row.published.to_string(row.input.field_size) + ", derived " +
                          row.report.parameters);
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const TableRow& row) {
  const auto& z = row.input;
  json j;
  j["table"] = row.table;
  j["q"] = z.q;
  j["n"] = z.n;
  if (z.params.gamma) j["gamma"] = *z.params.gamma;
  if (z.params.lambda) j["lambda"] = *z.params.lambda;
  if (z.params.l) j["l"] = *z.params.l;
  j["published"] = row.published.to_string(z.field_size);
  j["theorem"] = row.theorem.to_string(z.field_size);
  j["derived"] = row.report.parameters;
  j["verdict"] = row.verdict;
  j["notes"] = row.notes;
  j["report"] = to_json(row.report);
  return j;
}

std::string csv_header() { return "table,q,n,gamma,param,published,theorem,derived,verdict,notes"; }

std::string to_csv(const TableRow& row) {
  const auto& z = row.input;
  std::string notes;
  for (const auto& n : row.notes) notes += (notes.empty() ? "" : "; ") + n;
  std::ostringstream os;
  os << row.table << ',' << z.q << ',' << z.n << ',' << (z.params.gamma ? std::to_string(*z.params.gamma) : "")
     << ',' << param_text(z.params) << ',' << csv_field(row.published.to_string(z.field_size)) << ','
     << csv_field(row.theorem.to_string(z.field_size)) << ',' << csv_field(row.report.parameters) << ','
     << row.verdict << ',' << csv_field(notes);
  return os.str();
}

}  // namespace negalcd
