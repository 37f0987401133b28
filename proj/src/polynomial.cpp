#include "negalcd/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "negalcd/errors.hpp"

namespace negalcd {

Polynomial::Polynomial(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (const Elem c : c_)
    if (!field_->contains(c)) throw ParameterError("polynomial coefficient outside the field");
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::monomial(FieldPtr field, std::size_t degree, Elem coeff) {
  std::vector<Elem> c(degree + 1, 0);
  c[degree] = coeff;
  return Polynomial(std::move(field), std::move(c));
}

Polynomial Polynomial::negacyclic_modulus(FieldPtr field, std::size_t n) {
  std::vector<Elem> c(n + 1, 0);
  c[n] = 1;
  c[0] = field->add(c[0], 1);
  return Polynomial(std::move(field), std::move(c));
}

Elem Polynomial::evaluate(Elem x) const {
  const Field& f = *field_;
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), c_[i]);
  return acc;
}

Polynomial Polynomial::scaled(Elem a) const {
  std::vector<Elem> c(c_.size());
  std::transform(c_.begin(), c_.end(), c.begin(), [&](Elem x) { return field_->mul(x, a); });
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

namespace {
const FieldPtr& same_field(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field()) throw ArithmeticError("polynomials over different fields");
  return a.field();
}
}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const auto& f = same_field(a, b);
  std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f->add(a.coeff(i), b.coeff(i));
  return Polynomial(f, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  const auto& f = same_field(a, b);
  std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f->sub(a.coeff(i), b.coeff(i));
  return Polynomial(f, std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const auto& f = same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(f);
  std::vector<Elem> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = f->add(c[i + j], f->mul(a.c_[i], b.c_[j]));
  }
  return Polynomial(f, std::move(c));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c_[i] != 1 || i == 0) os << c_[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  const auto& f = same_field(a, b);
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  std::vector<Elem> r = a.coeffs();
  if (r.size() < b.coeffs().size()) return {Polynomial(f), a};
  const Elem lead_inv = f->inv(b.leading());
  const std::size_t db = b.coeffs().size() - 1;
  std::vector<Elem> q(r.size() - db, 0);
  for (std::size_t i = r.size(); i-- > db;) {
    const Elem c = f->mul(r[i], lead_inv);
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f->sub(r[i - db + j], f->mul(c, b.coeffs()[j]));
  }
  r.resize(db);
  return {Polynomial(f, std::move(q)), Polynomial(f, std::move(r))};
}

Polynomial mul_negacyclic(const Polynomial& a, const Polynomial& b, std::size_t n) {
  const auto& f = same_field(a, b);
  std::vector<Elem> c(n, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const Elem ai = a.coeffs()[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      const Elem t = f->mul(ai, b.coeffs()[j]);
      const std::size_t d = i + j;
      // x^n = -1, so x^{d} = (-1)^{d / n} x^{d mod n}
      if ((d / n) % 2 == 0)
        c[d % n] = f->add(c[d % n], t);
      else
        c[d % n] = f->sub(c[d % n], t);
    }
  }
  return Polynomial(f, std::move(c));
}

Polynomial reciprocal(const Polynomial& g) {
  if (g.is_zero() || g.coeff(0) == 0) throw ParameterError("reciprocal requires g(0) != 0");
  std::vector<Elem> c(g.coeffs().rbegin(), g.coeffs().rend());
  return Polynomial(g.field(), std::move(c)).scaled(g.field()->inv(g.coeff(0)));
}

Polynomial map_power(const Polynomial& g, std::int64_t e) {
  std::vector<Elem> c(g.coeffs().size());
  std::transform(g.coeffs().begin(), g.coeffs().end(), c.begin(), [&](Elem x) { return g.field()->pow(x, e); });
  return Polynomial(g.field(), std::move(c));
}

Polynomial project(const Polynomial& g, const Embedding& emb) {
  if (g.field() != emb.big()) throw ArithmeticError("polynomial is not over the extension field");
  std::vector<Elem> c(g.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!emb.in_image(g.coeffs()[i]))
      throw SubfieldError("coefficients not in base field: coefficient of x^" + std::to_string(i) +
                          " lies outside GF(" + std::to_string(emb.small()->order()) + ")");
    c[i] = emb.project(g.coeffs()[i]);
  }
  return Polynomial(emb.small(), std::move(c));
}

}  // namespace negalcd
