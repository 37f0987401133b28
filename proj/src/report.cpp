#include "negalcd/report.hpp"

#include <sstream>

#include "negalcd/errors.hpp"
#include "negalcd/number_theory.hpp"

namespace negalcd {

using json = nlohmann::ordered_json;

namespace {

std::string mode_name(InnerProduct m) { return m == InnerProduct::Hermitian ? "hermitian" : "euclidean"; }

std::string bracket_text(std::uint32_t n, std::uint32_t k, std::uint32_t d, bool lower, std::uint64_t Q) {
  return ParameterClaim{static_cast<int>(n), static_cast<int>(k), static_cast<int>(d), lower}.to_string(Q);
}

}  // namespace

std::string claim_status(const ParameterClaim& claim, const CodeReport& r) {
  if (claim.n != static_cast<int>(r.n) || claim.k != static_cast<int>(r.k)) return "fails";
  const auto lo = r.d_exact ? *r.d_exact : r.d_bracket ? r.d_bracket->first : r.bch_bound;
  const auto hi = r.d_exact ? *r.d_exact : r.d_bracket ? r.d_bracket->second : r.n - r.k + 1;
  const auto d = static_cast<std::uint32_t>(claim.d);
  if (claim.d_is_lower_bound) {
    if (lo >= d) return "holds";
    if (hi < d) return "fails";
    return "undecided";
  }
  if (lo == d && hi == d) return "holds";
  if (d < lo || d > hi) return "fails";
  return "undecided";
}

CodeReport analyze(const DefiningSet& z, const AnalyzeOptions& opt) {
  const NegacyclicCode code = build_code(z);
  const Field& f = *code.field();
  const auto ctx = splitting_context(z.field_size, z.n);
  const Field& big = *ctx->extension->big();

  CodeReport r;
  r.family = to_string(z.family);
  r.q = z.q;
  r.field_size = z.field_size;
  r.n = z.n;
  r.params = z.params;
  r.inner_product = mode_name(z.inner_product);
  r.z = z.elements;
  for (Elem c : code.generator().coeffs()) r.g.push_back(f.coefficients(c));
  r.delta = big.coefficients(code.delta());
  r.splitting_degree = code.splitting_degree();
  r.k = code.k();
  const auto runs = run_analysis(z);
  r.set_size = runs.set_size;
  r.longest_run = runs.longest_run;
  r.bch_bound = runs.bch_bound;
  r.notes = z.notes;

  r.evidence.push_back({"g divides x^n + 1, deg g = |Z| = " + std::to_string(code.generator().degree()),
                        "product of (x - delta^s) over Z, exact division"});
  r.evidence.push_back({"k = " + std::to_string(r.k), "n - deg g"});
  r.evidence.push_back({"d >= " + std::to_string(r.bch_bound),
                        "BCH bound from a run of " + std::to_string(r.longest_run) + " consecutive roots"});

  // LCD: root sets against hull rank.
  r.lcd_euclidean = is_lcd(z, InnerProduct::Euclidean);
  r.evidence.push_back({std::string("Euclidean LCD ") + (r.lcd_euclidean ? "holds" : "fails"), "root set -Z vs Z"});
  const bool square = exact_sqrt(z.field_size).has_value();
  if (square) {
    r.lcd_hermitian = is_lcd(z, InnerProduct::Hermitian);
    r.evidence.push_back(
        {std::string("Hermitian LCD ") + (*r.lcd_hermitian ? "holds" : "fails"), "root set -qZ vs Z"});
  }
  if (z.n <= opt.hull_max_length) {
    r.hull_euclidean = static_cast<std::uint32_t>(hull_dimension(code, InnerProduct::Euclidean));
    r.evidence.push_back({"Euclidean hull dimension " + std::to_string(*r.hull_euclidean),
                          "rank of generator stacked on the dual generator"});
    if ((*r.hull_euclidean == 0) != r.lcd_euclidean) r.notes.push_back("Euclidean LCD oracles disagree");
    if (square) {
      r.hull_hermitian = static_cast<std::uint32_t>(hull_dimension(code, InnerProduct::Hermitian));
      r.evidence.push_back({"Hermitian hull dimension " + std::to_string(*r.hull_hermitian),
                            "rank of generator stacked on the conjugated dual generator"});
      if ((*r.hull_hermitian == 0) != *r.lcd_hermitian) r.notes.push_back("Hermitian LCD oracles disagree");
    }
  } else {
    r.notes.push_back("hull rank check skipped for n > " + std::to_string(opt.hull_max_length));
  }

  const std::uint32_t singleton = r.n - r.k + 1;
  if (opt.compute_distance) {
    const auto d = minimum_distance(code, opt.budget, opt.minor_budget);
    r.distance_method = d.method;
    r.dual_distance = d.dual_distance;
    if (d.exact) {
      r.d_exact = d.exact;
      std::string how;
      if (d.method == "enumeration")
        how = "exhaustive enumeration of " + std::to_string(d.words) + " projective messages";
      else if (d.method == "MacWilliams")
        how = "MacWilliams transform of the dual weight distribution (" + std::to_string(d.words) +
              " projective dual messages, d_perp = " + std::to_string(*d.dual_distance) + ")";
      else
        how = "every k columns of a generator matrix are independent";
      r.evidence.push_back({"d = " + std::to_string(*d.exact), how});
      if (*d.exact < r.bch_bound || *d.exact > singleton) r.notes.push_back("BCH/Singleton sandwich violated");
    } else {
      r.d_bracket = std::pair{d.lower, d.upper};
      if (d.upper < singleton)
        r.evidence.push_back({"d <= " + std::to_string(d.upper), "a singular k x k column minor"});
      else
        r.evidence.push_back({"d <= " + std::to_string(d.upper), "Singleton bound"});
    }
  } else {
    r.distance_method = "bracket";
    r.d_bracket = std::pair{r.bch_bound, singleton};
  }

  if (r.d_exact) {
    r.mds = *r.d_exact == singleton ? "true" : "false";
    r.parameters = bracket_text(r.n, r.k, *r.d_exact, false, r.field_size);
  } else {
    const auto [lo, hi] = *r.d_bracket;
    r.mds = hi < singleton ? "false" : lo >= singleton ? "true" : "unverified";
    if (lo == hi) {
      r.parameters = bracket_text(r.n, r.k, lo, false, r.field_size);
      if (r.mds == "true") r.evidence.push_back({"MDS", "BCH bound meets the Singleton bound"});
    } else {
      r.parameters = bracket_text(r.n, r.k, lo, true, r.field_size);
    }
  }

  r.claim = family_claim(z);
  if (r.claim) {
    r.claim_status = claim_status(*r.claim, r);
    std::ostringstream os;
    os << "family claim " << r.claim->to_string(r.field_size) << " " << r.claim_status;
    r.notes.push_back(os.str());
  }
  return r;
}

json to_json(const CodeReport& r) {
  json j;
  j["family"] = r.family;
  j["q"] = r.q;
  j["field_size"] = r.field_size;
  j["n"] = r.n;
  json p = json::object();
  if (r.params.lambda) p["lambda"] = *r.params.lambda;
  if (r.params.gamma) p["gamma"] = *r.params.gamma;
  if (r.params.l) p["l"] = *r.params.l;
  j["params"] = p;
  j["inner_product"] = r.inner_product;
  j["Z"] = r.z;
  const bool prime = is_prime(r.field_size);
  json g = json::array();
  for (const auto& c : r.g) {
    if (prime && c.size() == 1)
      g.push_back(c[0]);
    else
      g.push_back(c);
  }
  j["g"] = g;
  j["delta"] = r.delta;
  j["splitting_degree"] = r.splitting_degree;
  j["parameters"] = r.parameters;
  j["k"] = r.k;
  j["set_size"] = r.set_size;
  j["longest_run"] = r.longest_run;
  j["bch_bound"] = r.bch_bound;
  if (r.d_exact) j["d_exact"] = *r.d_exact;
  if (r.d_bracket) j["d_bracket"] = {r.d_bracket->first, r.d_bracket->second};
  if (r.dual_distance) j["dual_distance"] = *r.dual_distance;
  j["distance_method"] = r.distance_method;
  j["lcd"] = {{"euclidean", r.lcd_euclidean}};
  if (r.lcd_hermitian) j["lcd"]["hermitian"] = *r.lcd_hermitian;
  j["hull"] = json::object();
  if (r.hull_euclidean) j["hull"]["euclidean"] = *r.hull_euclidean;
  if (r.hull_hermitian) j["hull"]["hermitian"] = *r.hull_hermitian;
  j["mds"] = r.mds;
  if (r.claim) {
    j["claim"] = {{"n", r.claim->n},
                  {"k", r.claim->k},
                  {"d", r.claim->d},
                  {"d_is_lower_bound", r.claim->d_is_lower_bound},
                  {"text", r.claim->to_string(r.field_size)}};
    j["claim_status"] = r.claim_status;
  }
  j["evidence"] = json::array();
  for (const auto& e : r.evidence) j["evidence"].push_back({{"claim", e.claim}, {"method", e.method}});
  j["notes"] = r.notes;
  return j;
}

CodeReport report_from_json(const json& j) {
  try {
    CodeReport r;
    r.family = j.at("family").get<std::string>();
    r.q = j.at("q").get<std::uint64_t>();
    r.field_size = j.at("field_size").get<std::uint64_t>();
    r.n = j.at("n").get<std::uint32_t>();
    const auto& p = j.at("params");
    if (p.contains("lambda")) r.params.lambda = p["lambda"].get<int>();
    if (p.contains("gamma")) r.params.gamma = p["gamma"].get<int>();
    if (p.contains("l")) r.params.l = p["l"].get<int>();
    r.inner_product = j.at("inner_product").get<std::string>();
    r.z = j.at("Z").get<std::vector<Residue>>();
    for (const auto& c : j.at("g")) {
      if (c.is_array())
        r.g.push_back(c.get<std::vector<std::uint32_t>>());
      else
        r.g.push_back({c.get<std::uint32_t>()});
    }
    r.delta = j.at("delta").get<std::vector<std::uint32_t>>();
    r.splitting_degree = j.at("splitting_degree").get<unsigned>();
    r.parameters = j.at("parameters").get<std::string>();
    r.k = j.at("k").get<std::uint32_t>();
    r.set_size = j.at("set_size").get<std::uint32_t>();
    r.longest_run = j.at("longest_run").get<std::uint32_t>();
    r.bch_bound = j.at("bch_bound").get<std::uint32_t>();
    if (j.contains("d_exact")) r.d_exact = j["d_exact"].get<std::uint32_t>();
    if (j.contains("d_bracket")) r.d_bracket = std::pair{j["d_bracket"][0].get<std::uint32_t>(), j["d_bracket"][1].get<std::uint32_t>()};
    if (j.contains("dual_distance")) r.dual_distance = j["dual_distance"].get<std::uint32_t>();
    r.distance_method = j.at("distance_method").get<std::string>();
    r.lcd_euclidean = j.at("lcd").at("euclidean").get<bool>();
    if (j["lcd"].contains("hermitian")) r.lcd_hermitian = j["lcd"]["hermitian"].get<bool>();
    const auto& h = j.at("hull");
    if (h.contains("euclidean")) r.hull_euclidean = h["euclidean"].get<std::uint32_t>();
    if (h.contains("hermitian")) r.hull_hermitian = h["hermitian"].get<std::uint32_t>();
    r.mds = j.at("mds").get<std::string>();
    if (j.contains("claim")) {
      const auto& c = j["claim"];
      r.claim = ParameterClaim{c.at("n").get<int>(), c.at("k").get<int>(), c.at("d").get<int>(),
                               c.at("d_is_lower_bound").get<bool>()};
      r.claim_status = j.at("claim_status").get<std::string>();
    }
    for (const auto& e : j.at("evidence"))
      r.evidence.push_back({e.at("claim").get<std::string>(), e.at("method").get<std::string>()});
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace negalcd
