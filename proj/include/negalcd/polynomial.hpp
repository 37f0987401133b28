#pragma once

#include <string>
#include <utility>
#include <vector>

#include "negalcd/field.hpp"

namespace negalcd {

/// Dense polynomial over a Field, constant term first, trailing zeros trimmed.
class Polynomial {
 public:
  explicit Polynomial(FieldPtr field, std::vector<Elem> coeffs = {});

  static Polynomial monomial(FieldPtr field, std::size_t degree, Elem coeff = 1);
  /// x^n + 1
  static Polynomial negacyclic_modulus(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem leading() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Elem evaluate(Elem x) const;
  Polynomial scaled(Elem a) const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  std::string to_string() const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<Elem> c_;
};

/// Quotient and remainder; throws ArithmeticError for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Product reduced modulo x^n + 1.
Polynomial mul_negacyclic(const Polynomial& a, const Polynomial& b, std::size_t n);

/// g(0)^{-1} x^{deg g} g(1/x). Throws ParameterError when g(0) = 0.
Polynomial reciprocal(const Polynomial& g);

/// Coefficient-wise image under x -> x^e (e.g. the q-power conjugation over GF(q^2)).
Polynomial map_power(const Polynomial& g, std::int64_t e);

/// Pull a polynomial over emb.big() back to emb.small(); throws SubfieldError when some
/// coefficient is outside the subfield.
Polynomial project(const Polynomial& g, const Embedding& emb);

}  // namespace negalcd
