#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "negalcd/cosets.hpp"

namespace negalcd {

enum class Family { E1odd, E1even, E2even, E2odd, E3, H1, H1nonMDS, H2, H2nonMDS, H3, Custom };

std::string to_string(Family f);
/// Accepts the tags above; "E1" and "E2" are resolved later by the parity of n.
std::optional<Family> family_from_string(const std::string& s);
bool is_hermitian_family(Family f);
/// Families whose governing statement asserts d = n - k + 1.
bool is_mds_family(Family f);

struct FamilyParams {
  std::optional<int> lambda;
  std::optional<int> gamma;
  std::optional<int> l;
  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// [n, k, d]_Q, or [n, k, >= d]_Q when only a lower bound is asserted.
struct ParameterClaim {
  int n = 0;
  int k = 0;
  int d = 0;
  bool d_is_lower_bound = false;
  std::string to_string(std::uint64_t field_size) const;
  friend bool operator==(const ParameterClaim&, const ParameterClaim&) = default;
};

/// A union of cyclotomic cosets inside O_{2,n}(1), with the family that produced it.
struct DefiningSet {
  std::uint32_t n = 0;
  std::uint64_t q = 0;           // the family's q
  std::uint64_t field_size = 0;  // alphabet of the code: q (Euclidean) or q^2 (Hermitian)
  InnerProduct inner_product = InnerProduct::Euclidean;
  Family family = Family::Custom;
  FamilyParams params;
  std::vector<Residue> elements;  // sorted
  std::vector<std::string> notes;

  OddResidueSystem system() const { return OddResidueSystem::make(n, field_size); }
  /// -Z = Z (Euclidean) or -qZ = Z (Hermitian) modulo 2n.
  bool lcd_closed() const;
  std::size_t size() const { return elements.size(); }
};

struct RunAnalysis {
  std::uint32_t set_size = 0;
  std::uint32_t longest_run = 0;  // consecutive residues 1+2j, j cyclic modulo n
  std::uint32_t bch_bound = 0;    // longest_run + 1
  friend bool operator==(const RunAnalysis&, const RunAnalysis&) = default;
};

/// Throws ParameterError for an empty set.
RunAnalysis run_analysis(const std::vector<Residue>& elements, std::uint32_t n);
inline RunAnalysis run_analysis(const DefiningSet& z) { return run_analysis(z.elements, z.n); }

/// n | (q-1)/2. Odd n: 0 <= lambda <= (n-3)/2, |Z| = 2 lambda + 1.
/// Even n: 1 <= lambda <= (n-2)/2, |Z| = 2 lambda.
DefiningSet euclidean_family1(std::uint64_t q, std::uint32_t n, int lambda);
/// n | (q+1)/2, Z = {1+2 lambda, ..., 1+2(n-1-lambda)}.
DefiningSet euclidean_family2(std::uint64_t q, std::uint32_t n, int lambda);
/// n = q+1 with 4 | n, 1 <= lambda <= (q-3)/4.
DefiningSet euclidean_family3(std::uint64_t q, int lambda);
/// q = 1 mod 4, n = (q-1)/gamma > 2; the case is selected by the parities of gamma and n.
DefiningSet hermitian_family1(std::uint64_t q, int gamma, int l);
DefiningSet hermitian_family1_nonmds(std::uint64_t q, int gamma, int l);
/// q = 3 mod 4, n = (q-1)/gamma > 2.
DefiningSet hermitian_family2(std::uint64_t q, int gamma, int l);
DefiningSet hermitian_family2_nonmds(std::uint64_t q, int gamma, int l);
/// n = q^2 + 1, Z = Z1 u -qZ1 with Z1 = U_{j=l}^{(q^2-1)/4} C_{1+2j}.
DefiningSet hermitian_family3(std::uint64_t q, int l);

/// Raw set over GF(field_size) (q = sqrt(field_size) for the Hermitian mode); must be a
/// union of cosets.
DefiningSet custom_set(std::uint64_t field_size, std::uint32_t n, std::vector<Residue> elements, InnerProduct mode);

/// Builds a family by tag from CLI-style parameters (n is required only for E1/E2).
DefiningSet build_family(Family f, std::uint64_t q, std::optional<std::uint32_t> n, const FamilyParams& p);

/// Parameters asserted for the family at its parameters; nullopt for Custom.
std::optional<ParameterClaim> family_claim(const DefiningSet& z);

}  // namespace negalcd
