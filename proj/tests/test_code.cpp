#include <algorithm>
#include <random>

#include "doctest.h"
#include "negalcd/errors.hpp"
#include "negalcd/negacyclic_code.hpp"
#include "negalcd/number_theory.hpp"

using namespace negalcd;

namespace {

DefiningSet raw(std::uint64_t field_size, std::uint32_t n, std::vector<Residue> z,
                InnerProduct mode = InnerProduct::Euclidean) {
  DefiningSet d;
  d.n = n;
  d.field_size = field_size;
  d.q = mode == InnerProduct::Hermitian ? *exact_sqrt(field_size) : field_size;
  d.inner_product = mode;
  d.elements = std::move(z);
  return d;
}

std::vector<Elem> random_word(const Field& f, std::size_t len, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(f.order() - 1));
  std::vector<Elem> w(len);
  for (auto& x : w) x = pick(rng);
  return w;
}

// Random nonempty proper union of cosets.
DefiningSet random_set(std::uint64_t Q, std::uint32_t n, InnerProduct mode, std::mt19937_64& rng) {
  const auto cs = all_cosets(OddResidueSystem::make(n, Q));
  for (;;) {
    std::vector<Residue> z;
    for (const auto& c : cs)
      if (rng() & 1) z.insert(z.end(), c.members.begin(), c.members.end());
    if (z.empty() || z.size() == n) continue;
    std::sort(z.begin(), z.end());
    return raw(Q, n, z, mode);
  }
}

// log_Q of |{c in C : <g_i, c> = 0 for every generator row}|, by enumerating C.
std::size_t brute_hull(const NegacyclicCode& code, InnerProduct mode) {
  const Field& f = *code.field();
  const Matrix g = code.generator_matrix();
  const std::uint64_t Q = f.order();
  const std::uint64_t conj = mode == InnerProduct::Hermitian ? *exact_sqrt(Q) : 1;
  std::uint64_t total = ipow(Q, code.k()), hits = 0;
  std::vector<Elem> msg(code.k(), 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t r = t;
    for (auto& m : msg) m = static_cast<Elem>(r % Q), r /= Q;
    auto c = code.encode(msg);
    for (auto& x : c) x = f.pow(x, static_cast<std::int64_t>(conj));
    bool orth = true;
    for (std::size_t i = 0; i < g.rows() && orth; ++i) orth = dot(f, g.row(i), c) == 0;
    hits += orth;
  }
  std::size_t h = 0;
  while (hits > 1) hits /= Q, ++h;
  return h;
}

std::size_t formula_hull(const DefiningSet& z, InnerProduct mode) {
  const auto neg = negate_set(z.elements, 2 * z.n, mode == InnerProduct::Hermitian ? z.q : 1);
  std::size_t common = 0;
  for (Residue s : z.elements) common += std::binary_search(neg.begin(), neg.end(), s);
  return z.size() - common;
}

}  // namespace

TEST_CASE("generator polynomial examples") {
  CHECK(generator_poly(5, 3, {3}).coeffs() == std::vector<Elem>{1, 1});
  CHECK(generator_poly(13, 6, {3, 5, 7, 9}).coeffs() == std::vector<Elem>{1, 9, 2, 9, 1});
  CHECK(generator_poly(7, 3, {1, 3, 5}).coeffs() == std::vector<Elem>{1, 0, 0, 1});
  try {
    generator_poly(5, 3, {1});
    FAIL("expected a projection failure");
  } catch (const SubfieldError& e) {
    CHECK(std::string(e.what()).find("coefficients not in base field") != std::string::npos);
  }
}

TEST_CASE("splitting context") {
  const auto ctx = splitting_context(5, 3);
  CHECK(ctx->degree == 2);
  CHECK(ctx->extension->big()->order() == 25);
  CHECK(splitting_context(5, 3) == ctx);
  CHECK(splitting_context(9, 10)->degree == 2);
  CHECK_THROWS_AS(splitting_context(9, 3), ParameterError);
}

TEST_CASE("encode examples") {
  const auto code = build_code(raw(5, 3, {3}));
  CHECK(code.k() == 2);
  CHECK(code.encode({1, 0}) == std::vector<Elem>{1, 1, 0});
  CHECK(code.encode({0, 1}) == std::vector<Elem>{0, 1, 1});
  CHECK(code.encode({0, 0}) == std::vector<Elem>{0, 0, 0});
  CHECK_THROWS_AS(code.encode({1}), ParameterError);
  CHECK_THROWS_AS(code.encode({1, 0, 0}), ParameterError);
}

TEST_CASE("trivial sets are rejected") {
  CHECK_THROWS_AS(build_code(raw(5, 3, {})), ParameterError);
  CHECK_THROWS_AS(build_code(raw(7, 3, {1, 3, 5})), ParameterError);
}

TEST_CASE("LCD by root sets") {
  CHECK(is_lcd(raw(5, 3, {3}), InnerProduct::Euclidean));
  CHECK_FALSE(is_lcd(raw(19, 20, {1, 3}), InnerProduct::Euclidean));
  CHECK(is_lcd(raw(9, 10, {5}, InnerProduct::Hermitian), InnerProduct::Hermitian));
  CHECK_THROWS_AS(is_lcd(raw(7, 3, {3}), InnerProduct::Hermitian), ParameterError);
}

TEST_CASE("hull dimension examples") {
  CHECK(hull_dimension(build_code(raw(5, 3, {3})), InnerProduct::Euclidean) == 0);
  const auto c15 = build_code(raw(5, 3, {1, 5}));
  CHECK(brute_hull(c15, InnerProduct::Euclidean) == 0);
  CHECK(hull_dimension(c15, InnerProduct::Euclidean) == 0);
  const auto c7 = build_code(raw(7, 3, {1, 5}));
  CHECK(c7.k() == 1);
  CHECK(hull_dimension(c7, InnerProduct::Euclidean) == 0);
  const auto not_lcd = build_code(raw(19, 20, {1, 19}));
  CHECK(hull_dimension(not_lcd, InnerProduct::Euclidean) == formula_hull(not_lcd.defining_set(), InnerProduct::Euclidean));
  CHECK(hull_dimension(not_lcd, InnerProduct::Euclidean) == 2);
}

TEST_CASE("structural properties on random codes") {
  std::mt19937_64 rng(99);
  struct Case {
    std::uint64_t Q;
    std::uint32_t n;
    InnerProduct mode;
  };
  const std::vector<Case> cases = {{5, 3, InnerProduct::Euclidean},  {5, 6, InnerProduct::Euclidean},
                                   {7, 4, InnerProduct::Euclidean},  {7, 8, InnerProduct::Euclidean},
                                   {9, 5, InnerProduct::Euclidean},  {13, 6, InnerProduct::Euclidean},
                                   {13, 7, InnerProduct::Euclidean}, {9, 4, InnerProduct::Hermitian},
                                   {25, 6, InnerProduct::Hermitian}, {49, 5, InnerProduct::Hermitian},
                                   {9, 10, InnerProduct::Hermitian}, {25, 4, InnerProduct::Hermitian}};
  for (const auto& cs : cases) {
    CAPTURE(cs.Q);
    CAPTURE(cs.n);
    for (int trial = 0; trial < 12; ++trial) {
      const auto z = random_set(cs.Q, cs.n, cs.mode, rng);
      const auto code = build_code(z);
      const Field& f = *code.field();
      CHECK(code.k() == cs.n - z.size());
      CHECK(code.generator().degree() == static_cast<int>(z.size()));
      CHECK(code.generator().is_monic());
      const auto [quot, rem] = divmod(Polynomial::negacyclic_modulus(code.field(), cs.n), code.generator());
      CHECK(rem.is_zero());
      CHECK(quot == code.check_poly());
      CHECK(code.generator() * code.check_poly() == Polynomial::negacyclic_modulus(code.field(), cs.n));
      CHECK(build_code(z).generator() == code.generator());
      CHECK(is_lcd(z, InnerProduct::Euclidean) == (reciprocal(code.generator()) == code.generator()));

      for (int s = 0; s < 100; ++s) {
        const auto c = code.encode(random_word(f, code.k(), rng));
        CHECK(code.contains(c));
        CHECK(code.contains(negacyclic_shift(f, c)));
      }
      for (int s = 0; s < 20; ++s) {
        const auto m1 = random_word(f, code.k(), rng), m2 = random_word(f, code.k(), rng);
        const Elem a = random_word(f, 1, rng)[0];
        std::vector<Elem> mix(code.k());
        for (std::size_t i = 0; i < mix.size(); ++i) mix[i] = f.add(f.mul(a, m1[i]), m2[i]);
        const auto c1 = code.encode(m1), c2 = code.encode(m2);
        std::vector<Elem> lin(cs.n);
        for (std::size_t i = 0; i < lin.size(); ++i) lin[i] = f.add(f.mul(a, c1[i]), c2[i]);
        CHECK(code.encode(mix) == lin);
      }

      for (const auto mode : {InnerProduct::Euclidean, cs.mode}) {
        const auto h = hull_dimension(code, mode);
        CHECK(h == formula_hull(z, mode));
        CHECK((h == 0) == is_lcd(z, mode));
        if (ipow(cs.Q, code.k()) <= 20000) CHECK(h == brute_hull(code, mode));
      }
    }
  }
}

TEST_CASE("dual generator matrices are orthogonal to the code") {
  const auto code = build_code(raw(13, 6, {3, 5, 7, 9}));
  const Field& f = *code.field();
  const Matrix g = code.generator_matrix(), h = code.dual_generator_matrix();
  CHECK(g.rows() == 2);
  CHECK(h.rows() == 4);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < h.rows(); ++j) CHECK(dot(f, g.row(i), h.row(j)) == 0);
  CHECK(rank(f, g) == 2);
  CHECK(rank(f, h) == 4);
}

TEST_CASE("negacyclic shift") {
  const auto f = make_field(5, 1);
  CHECK(negacyclic_shift(*f, {1, 2, 3}) == std::vector<Elem>{2, 1, 2});
}
