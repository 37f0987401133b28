#include "negalcd/negacyclic_code.hpp"

#include <map>
#include <mutex>

#include "negalcd/errors.hpp"
#include "negalcd/number_theory.hpp"

namespace negalcd {

namespace {

FieldPtr field_of_size(std::uint64_t q) {
  const auto pp = prime_power(q);
  if (!pp || pp->first == 2) throw ParameterError("field size " + std::to_string(q) + " is not an odd prime power");
  return make_field(pp->first, pp->second);
}

}  // namespace

std::shared_ptr<const SplittingContext> splitting_context(std::uint64_t field_size, std::uint32_t n) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, std::uint32_t>, std::shared_ptr<const SplittingContext>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({field_size, n}); it != cache.end()) return it->second;
  }
  auto ctx = std::make_shared<SplittingContext>();
  ctx->code_field = field_of_size(field_size);
  ctx->degree = splitting_degree(field_size, n);
  const unsigned total = ctx->code_field->degree() * ctx->degree;
  const auto p = ctx->code_field->characteristic();
  std::uint64_t size = 1;
  for (unsigned i = 0; i < total; ++i) {
    size *= p;
    if (size > (1ULL << 32))
      throw ParameterError("splitting field of x^" + std::to_string(n) + " + 1 over GF(" + std::to_string(field_size) +
                           ") has degree " + std::to_string(ctx->degree) + " and exceeds 2^32 elements");
  }
  ctx->extension = make_extension(ctx->code_field, ctx->degree);
  ctx->delta = primitive_2n_root(ctx->extension->big(), n).value();
  std::lock_guard lock(mutex);
  return cache.emplace(std::pair{field_size, n}, std::move(ctx)).first->second;
}

Polynomial generator_poly(std::uint64_t field_size, std::uint32_t n, const std::vector<Residue>& z) {
  const auto ctx = splitting_context(field_size, n);
  const FieldPtr& big = ctx->extension->big();
  const Field& f = *big;
  std::vector<Elem> acc{1};
  for (Residue s : z) {
    if (s % 2 == 0 || s >= 2 * n) throw ParameterError("residue " + std::to_string(s) + " is not in O_{2,n}(1)");
    const Elem root = f.neg(f.pow(ctx->delta, s));
    // acc *= (x - delta^s)
    acc.push_back(0);
    for (std::size_t i = acc.size() - 1; i > 0; --i) acc[i] = f.add(acc[i - 1], f.mul(acc[i], root));
    acc[0] = f.mul(acc[0], root);
  }
  try {
    return project(Polynomial(big, std::move(acc)), *ctx->extension);
  } catch (const SubfieldError&) {
    throw SubfieldError("coefficients not in base field: the defining set is not a union of cyclotomic cosets");
  }
}

NegacyclicCode::NegacyclicCode(DefiningSet z, FieldPtr f, Polynomial g, Polynomial h, Polynomial hs, Elem delta,
                               unsigned m)
    : z_(std::move(z)),
      field_(std::move(f)),
      g_(std::move(g)),
      h_(std::move(h)),
      hstar_(std::move(hs)),
      k_(static_cast<std::uint32_t>(z_.n - z_.elements.size())),
      delta_(delta),
      m_(m) {}

NegacyclicCode build_code(const DefiningSet& z) {
  if (z.elements.empty()) throw ParameterError("empty defining set: the code is the whole space");
  if (z.elements.size() >= z.n) throw ParameterError("defining set is all of O_{2,n}(1): the zero code");
  const auto ctx = splitting_context(z.field_size, z.n);
  Polynomial g = generator_poly(z.field_size, z.n, z.elements);
  auto [h, r] = divmod(Polynomial::negacyclic_modulus(ctx->code_field, z.n), g);
  if (!r.is_zero()) throw std::logic_error("generator polynomial does not divide x^n + 1");
  Polynomial hs = reciprocal(h);
  return NegacyclicCode(z, ctx->code_field, std::move(g), std::move(h), std::move(hs), ctx->delta, ctx->degree);
}

namespace {

Matrix shifts(const Polynomial& p, std::size_t rows, std::size_t n) {
  Matrix m(rows, n);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) m(i, i + j) = p.coeffs()[j];
  return m;
}

}  // namespace

Matrix NegacyclicCode::generator_matrix() const { return shifts(g_, k_, z_.n); }

Matrix NegacyclicCode::dual_generator_matrix() const { return shifts(hstar_, z_.n - k_, z_.n); }

Matrix NegacyclicCode::hermitian_dual_matrix() const {
  if (!exact_sqrt(z_.field_size)) throw ParameterError("Hermitian dual needs a square field size");
  return shifts(map_power(hstar_, static_cast<std::int64_t>(*exact_sqrt(z_.field_size))), z_.n - k_, z_.n);
}

std::vector<Elem> NegacyclicCode::encode(const std::vector<Elem>& message) const {
  if (message.size() != k_)
    throw ParameterError("message length " + std::to_string(message.size()) + " != k = " + std::to_string(k_));
  const Field& f = *field_;
  std::vector<Elem> c(z_.n, 0);
  for (std::size_t i = 0; i < k_; ++i) {
    if (!f.contains(message[i])) throw ParameterError("message symbol outside the field");
    if (message[i] == 0) continue;
    for (std::size_t j = 0; j < g_.coeffs().size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(message[i], g_.coeffs()[j]));
  }
  return c;
}

bool NegacyclicCode::contains(const std::vector<Elem>& word) const {
  if (word.size() != z_.n) return false;
  const Matrix d = dual_generator_matrix();
  for (std::size_t i = 0; i < d.rows(); ++i)
    if (dot(*field_, d.row(i), word) != 0) return false;
  return true;
}

bool is_lcd(const DefiningSet& z, InnerProduct mode) {
  std::uint64_t mult = 1;
  if (mode == InnerProduct::Hermitian) {
    const auto r = exact_sqrt(z.field_size);
    if (!r) throw ParameterError("Hermitian LCD test needs a square field size, got " + std::to_string(z.field_size));
    mult = *r;
  }
  return negate_set(z.elements, 2 * z.n, mult) == z.elements;
}

std::size_t hull_dimension(const NegacyclicCode& c, InnerProduct mode) {
  const Matrix dual = mode == InnerProduct::Hermitian ? c.hermitian_dual_matrix() : c.dual_generator_matrix();
  return c.n() - rank(*c.field(), c.generator_matrix().stacked(dual));
}

std::vector<Elem> negacyclic_shift(const Field& f, const std::vector<Elem>& c) {
  if (c.empty()) return {};
  std::vector<Elem> s(c.size());
  s[0] = f.neg(c.back());
  for (std::size_t i = 1; i < c.size(); ++i) s[i] = c[i - 1];
  return s;
}

}  // namespace negalcd
