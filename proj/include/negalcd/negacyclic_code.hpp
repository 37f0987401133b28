#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "negalcd/defining_set.hpp"
#include "negalcd/field.hpp"
#include "negalcd/matrix.hpp"
#include "negalcd/polynomial.hpp"

namespace negalcd {

/// GF(Q) inside the splitting field GF(Q^m) of x^n + 1, with the canonical delta.
struct SplittingContext {
  FieldPtr code_field;
  EmbeddingPtr extension;  // code_field -> GF(Q^m)
  unsigned degree = 0;     // m = ord_{2n}(Q)
  Elem delta = 0;          // in extension->big()
};

/// Cached per (Q, n). Throws ParameterError when gcd(n, Q) != 1 or Q^m exceeds 2^32.
std::shared_ptr<const SplittingContext> splitting_context(std::uint64_t field_size, std::uint32_t n);

/// prod_{s in Z} (x - delta^s) over GF(Q). Z = O_{2,n}(1) yields x^n + 1.
/// Throws SubfieldError when Z is not a union of cosets.
Polynomial generator_poly(std::uint64_t field_size, std::uint32_t n, const std::vector<Residue>& z);

class NegacyclicCode {
 public:
  const DefiningSet& defining_set() const { return z_; }
  const FieldPtr& field() const { return field_; }
  std::uint64_t field_size() const { return z_.field_size; }
  std::uint32_t n() const { return z_.n; }
  std::uint32_t k() const { return k_; }
  const Polynomial& generator() const { return g_; }
  /// h = (x^n + 1)/g.
  const Polynomial& check_poly() const { return h_; }
  /// Monic reciprocal of h; generates the Euclidean dual.
  const Polynomial& dual_generator() const { return hstar_; }
  Elem delta() const { return delta_; }
  unsigned splitting_degree() const { return m_; }

  /// Rows x^i g(x), 0 <= i < k.
  Matrix generator_matrix() const;
  /// Rows x^i h*(x), 0 <= i < n - k.
  Matrix dual_generator_matrix() const;
  /// Hermitian dual: the Euclidean dual rows raised entrywise to the q-th power.
  Matrix hermitian_dual_matrix() const;

  /// m(x) g(x); throws ParameterError unless the message has length k.
  std::vector<Elem> encode(const std::vector<Elem>& message) const;
  /// Zero syndrome against the Euclidean dual.
  bool contains(const std::vector<Elem>& word) const;

 private:
  friend NegacyclicCode build_code(const DefiningSet& z);
  NegacyclicCode(DefiningSet z, FieldPtr f, Polynomial g, Polynomial h, Polynomial hs, Elem delta, unsigned m);

  DefiningSet z_;
  FieldPtr field_;
  Polynomial g_, h_, hstar_;
  std::uint32_t k_ = 0;
  Elem delta_ = 0;
  unsigned m_ = 0;
};

/// Throws ParameterError for Z empty or Z = O_{2,n}(1).
NegacyclicCode build_code(const DefiningSet& z);

/// Root-set criterion: -Z = Z (Euclidean) or -qZ = Z (Hermitian, Q = q^2).
/// Throws ParameterError for the Hermitian mode over a non-square field.
bool is_lcd(const DefiningSet& z, InnerProduct mode);

/// dim(C cap C^perp) = n - rank of the stacked generator and dual matrices.
std::size_t hull_dimension(const NegacyclicCode& c, InnerProduct mode);

/// (-c_{n-1}, c_0, ..., c_{n-2})
std::vector<Elem> negacyclic_shift(const Field& f, const std::vector<Elem>& c);

}  // namespace negalcd
