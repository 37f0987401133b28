#pragma once

// Exact arithmetic in GF(p^m), p odd.
//
// Elements are indices: the polynomial-basis coefficient vector (c_0, ..., c_{m-1})
// is stored as the integer c_0 + c_1 p + ... + c_{m-1} p^{m-1}. The constant c in
// GF(p) therefore has index c in every field of characteristic p.

#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

namespace negalcd {

using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  /// Cached, so two calls with the same (p, m) return the same object.
  static FieldPtr make(std::uint32_t p, unsigned m);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint64_t order() const { return order_; }
  bool is_prime_field() const { return m_ == 1; }
  /// Monic modulus, constant term first (length m + 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool contains(Elem a) const { return a < order_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws ArithmeticError for a = 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// Any integer exponent; negative exponents go through the inverse.
  Elem pow(Elem a, std::int64_t e) const;

  /// Image of an integer under Z -> GF(p) -> GF(p^m).
  Elem from_int(std::int64_t c) const;
  std::vector<std::uint32_t> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const std::uint32_t> c) const;

  /// First index (from 2 upward) of multiplicative order p^m - 1.
  Elem primitive_element() const { return primitive_; }

  Field(std::uint32_t p, unsigned m);  // use make()

 private:
  Elem slow_mul(Elem a, Elem b) const;
  Elem slow_pow(Elem a, std::uint64_t e) const;
  Elem digit_add(Elem a, Elem b) const;
  void find_primitive();
  void build_tables();

  std::uint32_t p_;
  unsigned m_;
  std::uint64_t order_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> pw_;  // p^i
  Elem primitive_ = 0;
  std::vector<Elem> exp_;           // exp_[i] = alpha^i, i < 2(order-1)
  std::vector<std::uint32_t> log_;  // log_[alpha^i] = i
  std::vector<std::uint16_t> add_;  // full addition table for small extension fields
};

FieldPtr make_field(std::uint32_t p, unsigned m);

/// Lexicographically smallest monic irreducible of degree m over GF(p) (index order
/// of the coefficient vector of the non-leading terms).
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, unsigned m);

/// Rabin's test for a monic polynomial over GF(p), constant term first.
bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p);

/// Value type with an owning field; arithmetic between different owners throws.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement inverse() const;
  FieldElement pow(std::int64_t e) const;
  FieldElement operator-() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  FieldPtr field_;
  Elem value_;
};

FieldElement primitive_element(const FieldPtr& field);

/// delta = alpha^((|F| - 1) / 2n) for the canonical primitive alpha: ord(delta) = 2n and
/// delta^n = -1. Throws ParameterError when 2n does not divide |F| - 1.
FieldElement primitive_2n_root(const FieldPtr& field, std::uint64_t n);

/// ord_{2n}(q): x^n + 1 splits over GF(q^m). Throws ParameterError when gcd(n, q) != 1.
unsigned splitting_degree(std::uint64_t q, std::uint64_t n);

/// Explicit injection GF(p^s) -> GF(p^{s t}).
class Embedding {
 public:
  /// Throws ParameterError unless both fields share p and s | m.
  static std::shared_ptr<const Embedding> make(FieldPtr small, FieldPtr big);

  const FieldPtr& small() const { return small_; }
  const FieldPtr& big() const { return big_; }
  Elem embed(Elem a) const { return image_[a]; }
  bool in_image(Elem x) const { return preimage_.contains(x); }
  /// Throws SubfieldError when x is outside the embedded subfield.
  Elem project(Elem x) const;

  Embedding(FieldPtr small, FieldPtr big);  // use make()

 private:
  FieldPtr small_, big_;
  std::vector<Elem> image_;
  std::unordered_map<Elem, Elem> preimage_;
};

using EmbeddingPtr = std::shared_ptr<const Embedding>;

/// GF(p^{s t}) together with its embedding of base = GF(p^s).
EmbeddingPtr make_extension(const FieldPtr& base, unsigned t);

FieldElement subfield_project(const Embedding& emb, const FieldElement& x);

}  // namespace negalcd
