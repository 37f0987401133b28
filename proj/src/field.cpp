#include "negalcd/field.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "negalcd/errors.hpp"
#include "negalcd/number_theory.hpp"

namespace negalcd {

namespace {

constexpr std::uint64_t kTableLimit = 1ULL << 21;
constexpr std::uint64_t kAddTableLimit = 1024;

// Dense polynomials over GF(p), constant term first, no trailing zeros.
using PolyP = std::vector<std::uint64_t>;

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP poly_mod(PolyP a, const PolyP& f, std::uint64_t p) {
  trim(a);
  const std::uint64_t lead_inv = powmod(f.back(), p - 2, p);
  while (a.size() >= f.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i < f.size(); ++i)
      a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
    trim(a);
  }
  return a;
}

PolyP poly_mulmod(const PolyP& a, const PolyP& b, const PolyP& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), f, p);
}

PolyP poly_powmod(PolyP base, std::uint64_t e, const PolyP& f, std::uint64_t p) {
  PolyP r{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1U) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1U;
  }
  return r;
}

PolyP poly_gcd(PolyP a, PolyP b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyP r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& coeffs, std::uint32_t p) {
  PolyP f(coeffs.begin(), coeffs.end());
  trim(f);
  if (f.size() < 2) return false;
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  if (m == 1) return true;
  // h_k = x^{p^k} mod f
  std::vector<PolyP> h(m + 1);
  h[0] = poly_mod(PolyP{0, 1}, f, p);
  for (unsigned k = 1; k <= m; ++k) h[k] = poly_powmod(h[k - 1], p, f, p);
  auto minus_x = [&](PolyP a) {
    a.resize(std::max<std::size_t>(a.size(), 2), 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
  };
  if (!minus_x(h[m]).empty()) return false;
  for (const auto r : prime_divisors(m)) {
    const PolyP g = poly_gcd(f, minus_x(h[m / r]), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, unsigned m) {
  const std::uint64_t count = ipow(p, m);
  std::vector<std::uint32_t> f(m + 1, 0);
  f[m] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t t = idx;
    for (unsigned i = 0; i < m; ++i, t /= p) f[i] = static_cast<std::uint32_t>(t % p);
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

// ---------------------------------------------------------------------------

Field::Field(std::uint32_t p, unsigned m) : p_(p), m_(m) {
  if (!is_prime(p) || p == 2)
    throw ParameterError("field characteristic must be an odd prime, got " + std::to_string(p));
  if (m == 0) throw ParameterError("field degree must be at least 1");
  order_ = 1;
  for (unsigned i = 0; i < m; ++i) {
    pw_.push_back(order_);
    order_ *= p;
    if (order_ > (1ULL << 32))
      throw ParameterError("field GF(" + std::to_string(p) + "^" + std::to_string(m) +
                           ") exceeds the 32-bit element index range");
  }
  modulus_ = smallest_irreducible(p, m);
  find_primitive();
  build_tables();
}

FieldPtr Field::make(std::uint32_t p, unsigned m) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, unsigned>, FieldPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, m}];
  if (!slot) {
    try {
      slot = std::make_shared<const Field>(p, m);
    } catch (...) {
      cache.erase({p, m});
      throw;
    }
  }
  return slot;
}

FieldPtr make_field(std::uint32_t p, unsigned m) { return Field::make(p, m); }

Elem Field::digit_add(Elem a, Elem b) const {
  if (m_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) + b) % p_);
  std::uint64_t r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint64_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    r += ((da + db) % p_) * pw_[i];
  }
  return static_cast<Elem>(r);
}

Elem Field::add(Elem a, Elem b) const {
  if (!add_.empty()) return add_[static_cast<std::size_t>(a) * order_ + b];
  return digit_add(a, b);
}

Elem Field::neg(Elem a) const {
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  std::uint64_t r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint64_t d = a % p_;
    a /= p_;
    r += ((p_ - d) % p_) * pw_[i];
  }
  return static_cast<Elem>(r);
}

Elem Field::slow_mul(Elem a, Elem b) const {
  if (m_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  std::vector<std::uint64_t> da(m_), db(m_), prod(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    da[i] = a % p_;
    db[i] = b % p_;
    a /= p_;
    b /= p_;
  }
  for (unsigned i = 0; i < m_; ++i)
    for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  // modulus is monic: x^m = -(f_0 + ... + f_{m-1} x^{m-1})
  for (std::size_t d = prod.size() - 1; d >= m_; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (unsigned i = 0; i < m_; ++i)
      prod[d - m_ + i] = (prod[d - m_ + i] + (p_ - c) * modulus_[i]) % p_;
  }
  std::uint64_t r = 0;
  for (unsigned i = 0; i < m_; ++i) r += prod[i] * pw_[i];
  return static_cast<Elem>(r);
}

Elem Field::slow_pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e > 0) {
    if (e & 1U) r = slow_mul(r, a);
    a = slow_mul(a, a);
    e >>= 1U;
  }
  return r;
}

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (!log_.empty()) return exp_[log_[a] + log_[b]];
  return slow_mul(a, b);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw ArithmeticError("inverse of zero");
  if (!log_.empty()) return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
  return slow_pow(a, order_ - 2);
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (e < 0) return pow(inv(a), -e);
  if (a == 0) return e == 0 ? 1 : 0;
  const auto ue = static_cast<std::uint64_t>(e);
  if (!log_.empty()) return exp_[static_cast<std::uint64_t>(log_[a]) * (ue % (order_ - 1)) % (order_ - 1)];
  return slow_pow(a, ue % (order_ - 1));
}

Elem Field::from_int(std::int64_t c) const { return static_cast<Elem>(mod(c, p_)); }

std::vector<std::uint32_t> Field::coefficients(Elem a) const {
  std::vector<std::uint32_t> c(m_);
  for (unsigned i = 0; i < m_; ++i, a /= p_) c[i] = a % p_;
  return c;
}

Elem Field::from_coefficients(std::span<const std::uint32_t> c) const {
  if (c.size() > m_) throw ParameterError("too many coefficients for field element");
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= p_) throw ParameterError("coefficient out of range [0, p)");
    r += c[i] * pw_[i];
  }
  return static_cast<Elem>(r);
}

void Field::find_primitive() {
  const std::uint64_t group = order_ - 1;
  const auto primes = prime_divisors(group);
  for (std::uint64_t cand = 2; cand < order_; ++cand) {
    bool ok = true;
    for (const auto r : primes) {
      if (slow_pow(static_cast<Elem>(cand), group / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      primitive_ = static_cast<Elem>(cand);
      return;
    }
  }
  throw std::logic_error("no primitive element");  // unreachable for odd p
}

void Field::build_tables() {
  if (order_ > kTableLimit) return;
  const std::uint64_t group = order_ - 1;
  exp_.resize(2 * group);
  log_.assign(order_, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    exp_[i] = x;
    exp_[i + group] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = slow_mul(x, primitive_);
  }
  if (m_ > 1 && order_ <= kAddTableLimit) {
    add_.resize(order_ * order_);
    for (Elem a = 0; a < order_; ++a)
      for (Elem b = 0; b < order_; ++b) add_[a * order_ + b] = static_cast<std::uint16_t>(digit_add(a, b));
  }
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) throw ArithmeticError("field element without owner");
  if (!field_->contains(value_)) throw ParameterError("element index outside the field");
}

namespace {
const Field& common(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) throw ArithmeticError("operands belong to different fields");
  return *a.field();
}
}  // namespace

FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return {a.field(), common(a, b).add(a.value(), b.value())};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return {a.field(), common(a, b).sub(a.value(), b.value())};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return {a.field(), common(a, b).mul(a.value(), b.value())};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return {a.field(), common(a, b).div(a.value(), b.value())};
}

FieldElement primitive_element(const FieldPtr& field) { return {field, field->primitive_element()}; }

FieldElement primitive_2n_root(const FieldPtr& field, std::uint64_t n) {
  const std::uint64_t group = field->order() - 1;
  if (n == 0 || group % (2 * n) != 0)
    throw ParameterError("2n = " + std::to_string(2 * n) + " does not divide |F| - 1 = " + std::to_string(group) +
                         "; the splitting field of x^n + 1 is a proper extension");
  return primitive_element(field).pow(static_cast<std::int64_t>(group / (2 * n)));
}

unsigned splitting_degree(std::uint64_t q, std::uint64_t n) {
  if (n == 0) throw ParameterError("length must be positive");
  const auto pp = prime_power(q);
  if (!pp) throw ParameterError("q = " + std::to_string(q) + " is not a prime power");
  if (n % pp->first == 0)
    throw ParameterError("gcd(n, q) != 1 (n = " + std::to_string(n) + ", q = " + std::to_string(q) +
                         "): x^n + 1 has repeated roots");
  return static_cast<unsigned>(multiplicative_order(q % (2 * n), 2 * n));
}

// ---------------------------------------------------------------------------

Embedding::Embedding(FieldPtr small, FieldPtr big) : small_(std::move(small)), big_(std::move(big)) {
  const Field& s = *small_;
  const Field& b = *big_;
  if (s.characteristic() != b.characteristic() || b.degree() % s.degree() != 0)
    throw ParameterError("no embedding GF(" + std::to_string(s.order()) + ") -> GF(" + std::to_string(b.order()) + ")");
  image_.resize(s.order());
  if (small_ == big_ || s.degree() == 1) {
    for (Elem a = 0; a < s.order(); ++a) image_[a] = a;
  } else {
    // theta: the first element alpha^(t e), t = 1, 2, ..., of the subgroup of order |small| - 1
    // that is a root of the small field's modulus.
    const std::uint64_t e = (b.order() - 1) / (s.order() - 1);
    const Elem step = b.pow(b.primitive_element(), static_cast<std::int64_t>(e));
    const auto& f = s.modulus();
    Elem theta = 0;
    bool found = false;
    Elem cand = step;
    for (std::uint64_t t = 1; t < s.order() && !found; ++t, cand = b.mul(cand, step)) {
      Elem acc = 0;
      for (std::size_t i = f.size(); i-- > 0;) acc = b.add(b.mul(acc, cand), f[i]);
      if (acc == 0) {
        theta = cand;
        found = true;
      }
    }
    if (!found) throw std::logic_error("subfield modulus has no root in the extension");
    std::vector<Elem> theta_pow(s.degree());
    theta_pow[0] = 1;
    for (unsigned i = 1; i < s.degree(); ++i) theta_pow[i] = b.mul(theta_pow[i - 1], theta);
    for (Elem a = 0; a < s.order(); ++a) {
      const auto c = s.coefficients(a);
      Elem x = 0;
      for (unsigned i = 0; i < s.degree(); ++i) x = b.add(x, b.mul(c[i], theta_pow[i]));
      image_[a] = x;
    }
  }
  preimage_.reserve(image_.size());
  for (Elem a = 0; a < image_.size(); ++a) preimage_.emplace(image_[a], a);
}

std::shared_ptr<const Embedding> Embedding::make(FieldPtr small, FieldPtr big) {
  static std::mutex mutex;
  static std::map<std::pair<const Field*, const Field*>, std::shared_ptr<const Embedding>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{small.get(), big.get()}];
  if (!slot) slot = std::make_shared<const Embedding>(std::move(small), std::move(big));
  return slot;
}

Elem Embedding::project(Elem x) const {
  const auto it = preimage_.find(x);
  if (it == preimage_.end())
    throw SubfieldError("element " + std::to_string(x) + " of GF(" + std::to_string(big_->order()) +
                        ") is not in the subfield GF(" + std::to_string(small_->order()) + ")");
  return it->second;
}

EmbeddingPtr make_extension(const FieldPtr& base, unsigned t) {
  if (t == 0) throw ParameterError("extension degree must be at least 1");
  if (t == 1) return Embedding::make(base, base);
  return Embedding::make(base, make_field(base->characteristic(), base->degree() * t));
}

FieldElement subfield_project(const Embedding& emb, const FieldElement& x) {
  if (x.field() != emb.big()) throw ArithmeticError("element does not belong to the extension field");
  return {emb.small(), emb.project(x.value())};
}

}  // namespace negalcd
