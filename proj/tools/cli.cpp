#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "negalcd/cosets.hpp"
#include "negalcd/defining_set.hpp"
#include "negalcd/errors.hpp"
#include "negalcd/report.hpp"
#include "negalcd/search.hpp"
#include "negalcd/tables.hpp"

namespace negalcd {

namespace {

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kBadParameters = 2;
constexpr int kMismatch = 3;

struct Options {
  std::string family;
  std::string table;
  std::uint64_t q = 0;
  std::optional<std::uint32_t> n;
  std::optional<int> lambda, gamma, l;
  std::string mode = "euclidean";
  std::uint64_t budget = kDefaultBudget;
  std::string format = "json";
  std::string out;
  std::string z;
  std::uint64_t q_min = 0, q_max = 0;
  std::string search_family;
};

InnerProduct parse_mode(const std::string& m) {
  if (m == "euclidean") return InnerProduct::Euclidean;
  if (m == "hermitian") return InnerProduct::Hermitian;
  throw ParameterError("mode must be euclidean or hermitian, got '" + m + "'");
}

std::vector<Residue> parse_residues(const std::string& s) {
  std::vector<Residue> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParameterError("bad residue '" + tok + "' in --z");
    out.push_back(static_cast<Residue>(v));
  }
  return out;
}

/// Writes to --out when given, otherwise to the command's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParameterError("cannot open output file '" + path + "'");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

int cmd_construct(const Options& o, std::ostream& out) {
  auto fam = family_from_string(o.family);
  if (!fam || *fam == Family::Custom) throw ParameterError("unknown family '" + o.family + "'");
  FamilyParams p{o.lambda, o.gamma, o.l};
  const DefiningSet z = build_family(*fam, o.q, o.n, p);
  AnalyzeOptions a;
  a.budget = o.budget;
  const CodeReport r = analyze(z, a);
  Sink sink(o.out, out);
  sink.stream() << to_json(r).dump(2) << '\n';
  return r.claim_status == "fails" ? kMismatch : kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (!o.n) throw ParameterError("verify needs --n");
  const InnerProduct mode = parse_mode(o.mode);
  const std::uint64_t field_size = mode == InnerProduct::Hermitian ? o.q * o.q : o.q;
  const DefiningSet z = custom_set(field_size, *o.n, parse_residues(o.z), mode);
  AnalyzeOptions a;
  a.budget = o.budget;
  const CodeReport r = analyze(z, a);
  Sink sink(o.out, out);
  sink.stream() << to_json(r).dump(2) << '\n';
  const bool lcd = mode == InnerProduct::Hermitian ? r.lcd_hermitian.value_or(false) : r.lcd_euclidean;
  return lcd ? kOk : kMismatch;
}

int cmd_table(const Options& o, std::ostream& out) {
  AnalyzeOptions a;
  a.budget = o.budget;
  const auto rows = reproduce_table(o.table, a);
  Sink sink(o.out, out);
  bool mismatch = false;
  if (o.format == "csv") {
    sink.stream() << csv_header() << '\n';
    for (const auto& r : rows) sink.stream() << to_csv(r) << '\n';
  } else {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : rows) j.push_back(to_json(r));
    sink.stream() << j.dump(2) << '\n';
  }
  for (const auto& r : rows) mismatch = mismatch || r.verdict == "mismatch";
  return mismatch ? kMismatch : kOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  SearchOptions s;
  s.q_min = o.q_min;
  s.q_max = o.q_max;
  s.mode = parse_mode(o.mode);
  s.analyze.budget = o.budget;
  if (!o.search_family.empty()) {
    s.family = family_from_string(o.search_family);
    if (!s.family || *s.family == Family::Custom) throw ParameterError("unknown family '" + o.search_family + "'");
    if (is_hermitian_family(*s.family) != (s.mode == InnerProduct::Hermitian))
      throw ParameterError("family " + o.search_family + " does not belong to mode " + o.mode);
  }
  const auto reports = search(s);
  Sink sink(o.out, out);
  for (const auto& r : reports) sink.stream() << to_json(r).dump() << '\n';
  return kOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  if (!o.n) throw ParameterError("count needs --n");
  const auto formula = count_lcd_formula(*o.n);
  const auto enumerated = count_lcd_negacyclic(*o.n, o.q);
  nlohmann::ordered_json j = {{"n", *o.n}, {"q", o.q}, {"formula", formula}, {"enumerated", enumerated},
                      {"agree", formula == enumerated}};
  Sink sink(o.out, out);
  sink.stream() << j.dump(2) << '\n';
  return formula == enumerated ? kOk : kMismatch;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Negacyclic LCD codes over GF(q): construction, verification and table reproduction"};
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "Build a family member and print its report");
  construct->add_option("family", o.family, "E1, E2, E3, H1, H1nonMDS, H2, H2nonMDS or H3")->required();
  construct->add_option("--q", o.q, "Field size q")->required();
  construct->add_option("--n", o.n, "Length (E1, E2)");
  construct->add_option("--lambda", o.lambda, "lambda (E1, E2, E3)");
  construct->add_option("--gamma", o.gamma, "gamma, n = (q - 1)/gamma (H1, H2)");
  construct->add_option("--l", o.l, "l (H1, H2, H3)");

  auto* verify = app.add_subcommand("verify", "Analyze a raw defining set");
  verify->add_option("--q", o.q, "q; the alphabet is q^2 in the Hermitian mode")->required();
  verify->add_option("--n", o.n, "Length")->required();
  verify->add_option("--z", o.z, "Comma-separated odd residues modulo 2n")->required();
  verify->add_option("--mode", o.mode, "euclidean or hermitian");

  auto* table = app.add_subcommand("table", "Reproduce a parameter table");
  table->add_option("id", o.table, "1-6 or example29")->required();
  table->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* srch = app.add_subcommand("search", "Enumerate admissible family members (JSON lines)");
  srch->add_option("--q-min", o.q_min, "Smallest q")->required();
  srch->add_option("--q-max", o.q_max, "Largest q")->required();
  srch->add_option("--mode", o.mode, "euclidean or hermitian");
  srch->add_option("--family", o.search_family, "Restrict to one family");

  auto* count = app.add_subcommand("count", "Count LCD negacyclic codes for n | (q - 1)/2");
  count->add_option("--n", o.n, "Length")->required();
  count->add_option("--q", o.q, "Field size")->required();

  for (auto* sub : {construct, verify, table, srch}) {
    sub->add_option("--budget", o.budget, "Projective messages per enumeration");
    sub->add_option("--out", o.out, "Output file");
  }
  for (auto* sub : {construct, verify, srch}) sub->add_option("--format", o.format, "json")->check(CLI::IsMember({"json"}));
  count->add_option("--out", o.out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadParameters;
  }

  try {
    if (*construct) return cmd_construct(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*table) return cmd_table(o, out);
    if (*srch) return cmd_search(o, out);
    if (*count) return cmd_count(o, out);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kBadParameters;
  } catch (const SubfieldError& e) {
    err << "error: " << e.what() << '\n';
    return kBadParameters;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kBadParameters;
}

}  // namespace negalcd
