#include "negalcd/defining_set.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "negalcd/errors.hpp"
#include "negalcd/number_theory.hpp"

namespace negalcd {

namespace {

using i64 = std::int64_t;

i64 floor_div(i64 a, i64 b) {
  i64 d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
  return d;
}

std::string fmt(const std::string& what, i64 lo, i64 hi, i64 got) {
  std::ostringstream os;
  os << what << " must lie in [" << lo << ", " << hi << "], got " << got;
  return os.str();
}

void require_range(const std::string& what, i64 lo, i64 hi, i64 got) {
  if (got < lo || got > hi) throw ParameterError(fmt(what, lo, hi, got));
}

void require_odd_prime_power(std::uint64_t q) {
  if (!is_odd_prime_power(q)) throw ParameterError("q = " + std::to_string(q) + " is not an odd prime power");
}

struct Builder {
  DefiningSet z;
  OddResidueSystem sys;
  std::set<Residue> acc;

  Builder(Family f, std::uint64_t q, std::uint32_t n, InnerProduct mode, FamilyParams p) {
    z.family = f;
    z.q = q;
    z.n = n;
    z.inner_product = mode;
    z.field_size = mode == InnerProduct::Hermitian ? q * q : q;
    z.params = p;
    sys = OddResidueSystem::make(n, z.field_size);
  }

  /// Adds C_{1+2j} for j in [lo, hi] (indices taken modulo n); empty when hi < lo.
  void add_range(i64 lo, i64 hi) {
    for (i64 j = lo; j <= hi; ++j) add_index(j);
  }
  void add_index(i64 j) {
    const auto s = OddResidueSystem::residue_at(static_cast<std::uint32_t>(mod(j, z.n)));
    for (Residue r : coset(s, sys).members) acc.insert(r);
  }

  DefiningSet finish() {
    z.elements.assign(acc.begin(), acc.end());
    if (z.elements.empty()) throw ParameterError("defining set is empty at these parameters");
    if (z.elements.size() == z.n) throw ParameterError("defining set is all of O_{2,n}(1) at these parameters");
    if (!z.lcd_closed()) throw std::logic_error("family produced a set that is not LCD-closed");
    return std::move(z);
  }
};

std::uint32_t checked_length(std::uint64_t n) {
  if (n > 0xFFFFFFFFull / 2) throw ParameterError("length too large");
  return static_cast<std::uint32_t>(n);
}

struct HermitianShape {
  std::uint64_t q;
  i64 gamma;
  std::uint32_t n;
};

HermitianShape hermitian_shape(std::uint64_t q, int gamma, std::uint64_t residue4, const char* label) {
  require_odd_prime_power(q);
  if (q % 4 != residue4)
    throw ParameterError(std::string(label) + " requires q = " + std::to_string(residue4) + " mod 4, got q = " +
                         std::to_string(q));
  if (gamma < 1 || (q - 1) % static_cast<std::uint64_t>(gamma) != 0)
    throw ParameterError("gamma must be a positive divisor of q - 1, got " + std::to_string(gamma));
  const auto n = (q - 1) / static_cast<std::uint64_t>(gamma);
  if (n <= 2) throw ParameterError("n = (q - 1)/gamma must exceed 2, got " + std::to_string(n));
  return {q, gamma, checked_length(n)};
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::E1odd: return "E1odd";
    case Family::E1even: return "E1even";
    case Family::E2even: return "E2even";
    case Family::E2odd: return "E2odd";
    case Family::E3: return "E3";
    case Family::H1: return "H1";
    case Family::H1nonMDS: return "H1nonMDS";
    case Family::H2: return "H2";
    case Family::H2nonMDS: return "H2nonMDS";
    case Family::H3: return "H3";
    case Family::Custom: return "Custom";
  }
  return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
  for (auto f : {Family::E1odd, Family::E1even, Family::E2even, Family::E2odd, Family::E3, Family::H1,
                 Family::H1nonMDS, Family::H2, Family::H2nonMDS, Family::H3, Family::Custom})
    if (to_string(f) == s) return f;
  if (s == "E1") return Family::E1odd;
  if (s == "E2") return Family::E2odd;
  return std::nullopt;
}

bool is_hermitian_family(Family f) {
  return f == Family::H1 || f == Family::H1nonMDS || f == Family::H2 || f == Family::H2nonMDS || f == Family::H3;
}

bool is_mds_family(Family f) {
  switch (f) {
    case Family::E1odd:
    case Family::E1even:
    case Family::E2even:
    case Family::E2odd:
    case Family::H1:
    case Family::H2: return true;
    default: return false;
  }
}

std::string ParameterClaim::to_string(std::uint64_t field_size) const {
  std::ostringstream os;
  os << '[' << n << ", " << k << ", " << (d_is_lower_bound ? ">=" : "") << d << "]_" << field_size;
  return os.str();
}

bool DefiningSet::lcd_closed() const {
  const std::uint64_t mult = inner_product == InnerProduct::Hermitian ? q : 1;
  return negate_set(elements, 2 * n, mult) == elements;
}

RunAnalysis run_analysis(const std::vector<Residue>& elements, std::uint32_t n) {
  if (elements.empty()) throw ParameterError("run analysis of an empty defining set");
  std::vector<char> in(n, 0);
  for (Residue s : elements) {
    if (s % 2 == 0 || s >= 2 * n) throw ParameterError("residue " + std::to_string(s) + " is not in O_{2,n}(1)");
    in[OddResidueSystem::index_of(s)] = 1;
  }
  RunAnalysis r;
  r.set_size = static_cast<std::uint32_t>(std::count(in.begin(), in.end(), 1));
  if (r.set_size == n) {
    r.longest_run = n;
  } else {
    // Start right after a gap so the cyclic scan needs one pass.
    std::uint32_t start = 0;
    while (in[start]) ++start;
    std::uint32_t cur = 0;
    for (std::uint32_t t = 1; t <= n; ++t) {
      if (in[(start + t) % n]) {
        r.longest_run = std::max(r.longest_run, ++cur);
      } else {
        cur = 0;
      }
    }
  }
  r.bch_bound = r.longest_run + 1;
  return r;
}

DefiningSet euclidean_family1(std::uint64_t q, std::uint32_t n, int lambda) {
  require_odd_prime_power(q);
  if (n < 3) throw ParameterError("n must be at least 3, got " + std::to_string(n));
  if (((q - 1) / 2) % n != 0) throw ParameterError("n must divide (q - 1)/2");
  const bool odd = n % 2 == 1;
  FamilyParams p;
  p.lambda = lambda;
  Builder b(odd ? Family::E1odd : Family::E1even, q, n, InnerProduct::Euclidean, p);
  if (odd) {
    require_range("lambda", 0, (n - 3) / 2, lambda);
    const i64 c = (n - 1) / 2;
    for (i64 i = 0; i <= lambda; ++i) {
      b.add_index(c + i);
      b.add_index(c - i);
    }
  } else {
    require_range("lambda", 1, (n - 2) / 2, lambda);
    const i64 c = n / 2;
    for (i64 i = 0; i < lambda; ++i) {
      b.add_index(c + i);
      b.add_index(c - 1 - i);
    }
    b.z.notes.push_back("even n: the shifted statement [n, n-2lambda-2, 2lambda+3] does not describe this set; "
                        "the set has |Z| = 2lambda and gives [n, n-2lambda, 2lambda+1]");
  }
  return b.finish();
}

DefiningSet euclidean_family2(std::uint64_t q, std::uint32_t n, int lambda) {
  require_odd_prime_power(q);
  if (n < 3) throw ParameterError("n must be at least 3, got " + std::to_string(n));
  if (((q + 1) / 2) % n != 0) throw ParameterError("n must divide (q + 1)/2");
  const bool odd = n % 2 == 1;
  require_range("lambda", 1, odd ? (n - 1) / 2 : n / 2 - 1, lambda);
  FamilyParams p;
  p.lambda = lambda;
  Builder b(odd ? Family::E2odd : Family::E2even, q, n, InnerProduct::Euclidean, p);
  b.add_range(lambda, static_cast<i64>(n) - 1 - lambda);
  return b.finish();
}

DefiningSet euclidean_family3(std::uint64_t q, int lambda) {
  require_odd_prime_power(q);
  if ((q + 1) % 4 != 0) throw ParameterError("n = q + 1 must be divisible by 4");
  const i64 top = static_cast<i64>(q - 3) / 4;
  require_range("lambda", 1, top, lambda);
  FamilyParams p;
  p.lambda = lambda;
  Builder b(Family::E3, q, checked_length(q + 1), InnerProduct::Euclidean, p);
  b.add_range(lambda, top);
  b.add_range(static_cast<i64>(q + 1) / 2 + lambda, static_cast<i64>(3 * q - 1) / 4);
  return b.finish();
}

DefiningSet hermitian_family1(std::uint64_t q, int gamma, int l) {
  const auto h = hermitian_shape(q, gamma, 1, "H1");
  const i64 Q = static_cast<i64>(q), g = h.gamma, n = h.n;
  FamilyParams p;
  p.gamma = gamma;
  p.l = l;
  Builder b(Family::H1, q, h.n, InnerProduct::Hermitian, p);
  if (g % 2 == 1) {
    require_range("l", 0, floor_div(Q - 4 * g - 1, 4 * g), l);
    b.add_range((Q - 4 * g - 1) / (4 * g) - l, (Q - 1) / (4 * g) + l);
  } else if (n % 2 == 0) {
    require_range("l", 0, floor_div(Q - 4 * g - 1, 2 * g), l);
    b.add_range((Q - 2 * g - 1) / (2 * g) - l, (Q - 1) / (2 * g) + l);
  } else {
    require_range("l", 0, floor_div(Q - 3 * g - 1, 2 * g), l);
    b.add_range((Q - g - 1) / (2 * g) - l, (Q - g - 1) / (2 * g) + l);
  }
  return b.finish();
}

namespace {

DefiningSet hermitian_nonmds(Family f, const HermitianShape& h, i64 l) {
  FamilyParams p;
  p.gamma = static_cast<int>(h.gamma);
  p.l = static_cast<int>(l);
  Builder b(f, h.q, h.n, InnerProduct::Hermitian, p);
  const i64 n = h.n;
  b.add_range(0, n / 2 - 1);
  b.add_range(n / 2, n / 2 + l);
  b.add_range(n - 1 - l, n - 1);
  b.z.notes.push_back("Z is a single cyclic run of length n/2 + 2l + 2, so the code meets the Singleton bound");
  return b.finish();
}

}  // namespace

DefiningSet hermitian_family1_nonmds(std::uint64_t q, int gamma, int l) {
  const auto h = hermitian_shape(q, gamma, 1, "H1nonMDS");
  if (gamma % 2 == 0) throw ParameterError("H1nonMDS requires odd gamma");
  if (h.n <= 4) throw ParameterError("H1nonMDS requires n > 4, got " + std::to_string(h.n));
  const i64 Q = static_cast<i64>(q), g = gamma;
  require_range("l", 0, floor_div(Q - 8 * g - 1, 4 * g), l);
  return hermitian_nonmds(Family::H1nonMDS, h, l);
}

DefiningSet hermitian_family2(std::uint64_t q, int gamma, int l) {
  const auto h = hermitian_shape(q, gamma, 3, "H2");
  const i64 Q = static_cast<i64>(q), g = h.gamma;
  FamilyParams p;
  p.gamma = gamma;
  p.l = l;
  Builder b(Family::H2, q, h.n, InnerProduct::Hermitian, p);
  if (g % 2 == 1) {
    const i64 c = (Q - 2 * g - 1) / (4 * g);
    require_range("l", 0, c, l);
    b.add_range(c - l, c + l);
  } else {
    require_range("l", 0, floor_div(Q - 3 * g - 1, 2 * g), l);
    const i64 c = (Q - g - 1) / (2 * g);
    b.add_range(c - l, c + l);
  }
  return b.finish();
}

DefiningSet hermitian_family2_nonmds(std::uint64_t q, int gamma, int l) {
  const auto h = hermitian_shape(q, gamma, 3, "H2nonMDS");
  if (gamma % 2 == 0) throw ParameterError("H2nonMDS requires odd gamma");
  if (h.n <= 4) throw ParameterError("H2nonMDS requires n > 4, got " + std::to_string(h.n));
  const i64 Q = static_cast<i64>(q), g = gamma;
  require_range("l", 0, floor_div(Q - 6 * g - 1, 4 * g), l);
  return hermitian_nonmds(Family::H2nonMDS, h, l);
}

DefiningSet hermitian_family3(std::uint64_t q, int l) {
  require_odd_prime_power(q);
  if (q > 255) throw ParameterError("q^4 must fit the field size limit; q <= 255");
  const i64 Q = static_cast<i64>(q);
  const i64 lo = q % 4 == 1 ? (Q - 1) * (Q - 1) / 4 : (Q - 1) * (Q - 3) / 4;
  const i64 hi = (Q * Q - 1) / 4;
  require_range("l", lo, hi, l);
  FamilyParams p;
  p.l = l;
  Builder b(Family::H3, q, checked_length(q * q + 1), InnerProduct::Hermitian, p);
  b.add_range(l, hi);
  const auto mirror = negate_set(std::vector<Residue>(b.acc.begin(), b.acc.end()), 2 * b.z.n, q);
  b.acc.insert(mirror.begin(), mirror.end());
  return b.finish();
}

DefiningSet custom_set(std::uint64_t field_size, std::uint32_t n, std::vector<Residue> elements, InnerProduct mode) {
  require_odd_prime_power(field_size);
  DefiningSet z;
  z.n = n;
  z.field_size = field_size;
  z.inner_product = mode;
  if (mode == InnerProduct::Hermitian) {
    const auto r = exact_sqrt(field_size);
    if (!r) throw ParameterError("Hermitian mode needs a square field size");
    z.q = *r;
  } else {
    z.q = field_size;
  }
  const auto sys = OddResidueSystem::make(n, field_size);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (Residue s : elements)
    if (!sys.contains(s)) throw ParameterError("residue " + std::to_string(s) + " is not in O_{2,n}(1)");
  if (!is_coset_union(elements, sys)) throw ParameterError("defining set is not a union of cyclotomic cosets");
  z.elements = std::move(elements);
  return z;
}

DefiningSet build_family(Family f, std::uint64_t q, std::optional<std::uint32_t> n, const FamilyParams& p) {
  auto need = [](const std::optional<int>& v, const char* name) {
    if (!v) throw ParameterError(std::string("missing parameter ") + name);
    return *v;
  };
  auto need_n = [&]() {
    if (!n) throw ParameterError("missing parameter n");
    return *n;
  };
  switch (f) {
    case Family::E1odd:
    case Family::E1even: return euclidean_family1(q, need_n(), need(p.lambda, "lambda"));
    case Family::E2odd:
    case Family::E2even: return euclidean_family2(q, need_n(), need(p.lambda, "lambda"));
    case Family::E3: return euclidean_family3(q, need(p.lambda, "lambda"));
    case Family::H1: return hermitian_family1(q, need(p.gamma, "gamma"), need(p.l, "l"));
    case Family::H1nonMDS: return hermitian_family1_nonmds(q, need(p.gamma, "gamma"), need(p.l, "l"));
    case Family::H2: return hermitian_family2(q, need(p.gamma, "gamma"), need(p.l, "l"));
    case Family::H2nonMDS: return hermitian_family2_nonmds(q, need(p.gamma, "gamma"), need(p.l, "l"));
    case Family::H3: return hermitian_family3(q, need(p.l, "l"));
    case Family::Custom: break;
  }
  throw ParameterError("a custom set has no family constructor");
}

std::optional<ParameterClaim> family_claim(const DefiningSet& z) {
  const int n = static_cast<int>(z.n);
  const int lam = z.params.lambda.value_or(0);
  const int l = z.params.l.value_or(0);
  const int q = static_cast<int>(z.q);
  switch (z.family) {
    case Family::E1odd: return ParameterClaim{n, n - 2 * lam - 1, 2 * lam + 2, false};
    case Family::E1even: return ParameterClaim{n, n - 2 * lam, 2 * lam + 1, false};
    case Family::E2odd:
    case Family::E2even: return ParameterClaim{n, 2 * lam, n - 2 * lam + 1, false};
    case Family::E3: return ParameterClaim{n, 4 * lam, (q + 3) / 2 - 2 * lam, true};
    case Family::H1: {
      const int g = z.params.gamma.value_or(1);
      if (g % 2 == 0 && n % 2 == 1) return ParameterClaim{n, n - 2 * l - 1, 2 * l + 2, false};
      return ParameterClaim{n, n - 2 * l - 2, 2 * l + 3, false};
    }
    case Family::H2: return ParameterClaim{n, n - 2 * l - 1, 2 * l + 2, false};
    case Family::H1nonMDS:
    case Family::H2nonMDS: return ParameterClaim{n, n - (n / 2 + 2 * l + 2), n / 2 + l + 2, true};
    case Family::H3: {
      const int k = q % 4 == 1 ? 4 * l : 4 * l + 1;
      return ParameterClaim{n, k, (q * q - 4 * l + 3) / 2, true};
    }
    case Family::Custom: break;
  }
  return std::nullopt;
}

}  // namespace negalcd
