#include "negalcd/search.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "negalcd/errors.hpp"
#include "negalcd/number_theory.hpp"

namespace negalcd {

namespace {

bool same_family(Family a, Family b) {
  auto base = [](Family f) {
    if (f == Family::E1even) return Family::E1odd;
    if (f == Family::E2even) return Family::E2odd;
    return f;
  };
  return base(a) == base(b);
}

/// Calls build(v) for v in [lo, hi]; inadmissible values are skipped.
void sweep(int lo, int hi, const std::function<DefiningSet(int)>& build, std::vector<DefiningSet>& out) {
  for (int v = lo; v <= hi; ++v) {
    try {
      out.push_back(build(v));
    } catch (const ParameterError&) {
    }
  }
}

}  // namespace

std::vector<DefiningSet> search_sets(const SearchOptions& opt) {
  if (opt.q_max > kSearchQCap)
    throw ParameterError("q_max = " + std::to_string(opt.q_max) + " exceeds the search cap " +
                         std::to_string(kSearchQCap));
  if (opt.q_min > opt.q_max) throw ParameterError("empty q range");
  std::vector<DefiningSet> found;
  for (const std::uint64_t q : odd_prime_powers(opt.q_min, opt.q_max)) {
    const int qi = static_cast<int>(q);
    if (opt.mode == InnerProduct::Euclidean) {
      for (const auto n : divisors((q - 1) / 2))
        if (n >= 3) sweep(0, static_cast<int>(n), [&](int lam) { return euclidean_family1(q, n, lam); }, found);
      for (const auto n : divisors((q + 1) / 2))
        if (n >= 3) sweep(1, static_cast<int>(n), [&](int lam) { return euclidean_family2(q, n, lam); }, found);
      if ((q + 1) % 4 == 0) sweep(1, qi, [&](int lam) { return euclidean_family3(q, lam); }, found);
    } else {
      for (const auto g64 : divisors(q - 1)) {
        const int g = static_cast<int>(g64);
        if ((q - 1) / g64 <= 2) continue;
        const int n = static_cast<int>((q - 1) / g64);
        if (q % 4 == 1) {
          sweep(0, n, [&](int l) { return hermitian_family1(q, g, l); }, found);
          sweep(0, n, [&](int l) { return hermitian_family1_nonmds(q, g, l); }, found);
        } else {
          sweep(0, n, [&](int l) { return hermitian_family2(q, g, l); }, found);
          sweep(0, n, [&](int l) { return hermitian_family2_nonmds(q, g, l); }, found);
        }
      }
      const int lo = q % 4 == 1 ? (qi - 1) * (qi - 1) / 4 : (qi - 1) * (qi - 3) / 4;
      sweep(lo, (qi * qi - 1) / 4, [&](int l) { return hermitian_family3(q, l); }, found);
    }
  }
  if (opt.family)
    std::erase_if(found, [&](const DefiningSet& z) { return !same_family(z.family, *opt.family); });

  auto key = [](const DefiningSet& z) {
    return std::tuple{z.field_size, z.n, z.n - z.elements.size(), to_string(z.family), z.elements};
  };
  std::stable_sort(found.begin(), found.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  std::set<std::tuple<std::uint64_t, std::uint32_t, std::vector<Residue>>> seen;
  std::vector<DefiningSet> out;
  for (auto& z : found)
    if (seen.insert({z.field_size, z.n, z.elements}).second) out.push_back(std::move(z));
  return out;
}

std::vector<CodeReport> search(const SearchOptions& opt) {
  std::vector<CodeReport> out;
  for (const auto& z : search_sets(opt)) out.push_back(analyze(z, opt.analyze));
  return out;
}

}  // namespace negalcd
