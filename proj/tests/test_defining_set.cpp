#include <cmath>
#include <functional>
#include <set>

#include "doctest.h"
#include "negalcd/cosets.hpp"
#include "negalcd/defining_set.hpp"
#include "negalcd/errors.hpp"
#include "negalcd/number_theory.hpp"

using namespace negalcd;

namespace {

using Members = std::vector<Residue>;

long fl(double a, double b) { return static_cast<long>(std::floor(a / b)); }

std::uint32_t run_of(const DefiningSet& z) { return run_analysis(z).longest_run; }

struct Expectation {
  bool admissible = false;
  std::size_t size = 0;
  std::uint32_t min_run = 0;  // guaranteed consecutive block
};

// Checks that a builder succeeds exactly on the admissible tuples and that every produced
// set is a coset union, LCD-closed and of the predicted size and run length.
int check_builder(const std::function<DefiningSet()>& build, const Expectation& e) {
  if (!e.admissible) {
    CHECK_THROWS_AS(build(), ParameterError);
    return 0;
  }
  DefiningSet z;
  REQUIRE_NOTHROW(z = build());
  CAPTURE(to_string(z.family));
  CAPTURE(z.q);
  CAPTURE(z.n);
  CHECK(is_coset_union(z.elements, z.system()));
  CHECK(z.lcd_closed());
  CHECK(z.size() == e.size);
  CHECK(run_of(z) >= e.min_run);
  CHECK(z.size() < z.n);
  if (is_mds_family(z.family)) CHECK(run_of(z) == z.size());
  return 1;
}

}  // namespace

TEST_CASE("Euclidean family examples") {
  CHECK(euclidean_family1(7, 3, 0).elements == Members{3});
  CHECK(euclidean_family1(13, 6, 2).elements == Members{3, 5, 7, 9});
  CHECK(euclidean_family1(9, 4, 1).elements == Members{3, 5});
  CHECK(euclidean_family2(5, 3, 1).elements == Members{3});
  CHECK(euclidean_family2(7, 4, 1).elements == Members{3, 5});
  CHECK(euclidean_family2(9, 5, 2).elements == Members{5});
  CHECK(euclidean_family3(19, 4).size() == 4);
  CHECK(euclidean_family3(23, 1).size() == 20);
  CHECK(euclidean_family1(13, 6, 2).family == Family::E1even);
  CHECK(euclidean_family1(7, 3, 0).family == Family::E1odd);
  CHECK(euclidean_family2(7, 4, 1).family == Family::E2even);
}

TEST_CASE("Euclidean family errors") {
  CHECK_THROWS_AS(euclidean_family3(19, 5), ParameterError);
  CHECK_THROWS_AS(euclidean_family3(17, 1), ParameterError);
  CHECK_THROWS_AS(euclidean_family1(13, 5, 0), ParameterError);
  CHECK_THROWS_AS(euclidean_family1(13, 6, 0), ParameterError);
  CHECK_THROWS_AS(euclidean_family1(15, 7, 0), ParameterError);
  CHECK_THROWS_AS(euclidean_family2(7, 4, 2), ParameterError);
  try {
    euclidean_family3(19, 9);
    FAIL("expected a range error");
  } catch (const ParameterError& e) {
    CHECK(std::string(e.what()).find("[1, 4]") != std::string::npos);
  }
}

TEST_CASE("Hermitian family examples") {
  const auto h13 = hermitian_family1(13, 1, 2);
  CHECK(h13.size() == 6);
  CHECK(h13.field_size == 169);
  CHECK(hermitian_family1(5, 1, 0).elements == Members{1, 3});
  CHECK(hermitian_family1(17, 4, 0).n == 4);
  CHECK(hermitian_family1(17, 4, 0).size() == 2);

  CHECK(hermitian_family1_nonmds(13, 1, 0).size() == 8);
  CHECK(hermitian_family1_nonmds(17, 1, 0).size() == 10);
  CHECK_THROWS_AS(hermitian_family1_nonmds(13, 1, 2), ParameterError);

  CHECK(hermitian_family2(7, 1, 1).size() == 3);
  CHECK(hermitian_family2(11, 2, 1).n == 5);
  CHECK(hermitian_family2(11, 2, 1).size() == 3);
  CHECK(hermitian_family2(19, 3, 1).n == 6);
  CHECK(hermitian_family2(19, 3, 1).size() == 3);

  CHECK(hermitian_family2_nonmds(11, 1, 0).size() == 7);
  CHECK(hermitian_family2_nonmds(19, 1, 3).size() == 17);
  CHECK_THROWS_AS(hermitian_family2_nonmds(7, 3, 0), ParameterError);

  CHECK(hermitian_family3(3, 2).elements == Members{5});
  CHECK(hermitian_family3(5, 6).elements == Members{13, 39});
  CHECK_THROWS_AS(hermitian_family3(5, 3), ParameterError);
  CHECK_THROWS_AS(hermitian_family1(7, 1, 0), ParameterError);
  CHECK_THROWS_AS(hermitian_family2(13, 1, 0), ParameterError);
  CHECK_THROWS_AS(hermitian_family1(13, 5, 0), ParameterError);
  CHECK_THROWS_AS(hermitian_family1(13, 6, 0), ParameterError);
}

TEST_CASE("family claims at the examples") {
  CHECK(family_claim(euclidean_family1(9, 4, 1))->to_string(9) == "[4, 2, 3]_9");
  CHECK(family_claim(euclidean_family1(7, 3, 0))->to_string(7) == "[3, 2, 2]_7");
  CHECK(family_claim(euclidean_family3(19, 4))->to_string(19) == "[20, 16, >=3]_19");
  CHECK(family_claim(hermitian_family1(5, 1, 0))->to_string(25) == "[4, 2, 3]_25");
  CHECK(family_claim(hermitian_family2(11, 2, 1))->to_string(121) == "[5, 2, 4]_121");
  const auto nm = *family_claim(hermitian_family1_nonmds(13, 1, 0));
  CHECK(nm.k == 4);
  CHECK(nm.d == 8);
  const auto nm2 = *family_claim(hermitian_family2_nonmds(19, 1, 3));
  CHECK(nm2.k == 1);
  CHECK(nm2.d == 14);
  const auto h3 = *family_claim(hermitian_family3(3, 2));
  CHECK(h3.k == 9);
  CHECK(h3.d == 2);
  CHECK(h3.d_is_lower_bound);
}

TEST_CASE("build_family by tag") {
  FamilyParams p;
  p.lambda = 1;
  CHECK(build_family(Family::E2odd, 7, 4u, p).elements == Members{3, 5});
  CHECK_THROWS_AS(build_family(Family::E1odd, 7, std::nullopt, p), ParameterError);
  CHECK_THROWS_AS(build_family(Family::H1, 13, std::nullopt, p), ParameterError);
  CHECK(family_from_string("E1") == Family::E1odd);
  CHECK(family_from_string("H2nonMDS") == Family::H2nonMDS);
  CHECK_FALSE(family_from_string("E9").has_value());
}

TEST_CASE("run analysis") {
  CHECK(run_analysis({3, 5, 7, 9}, 6) == RunAnalysis{4, 4, 5});
  CHECK(run_analysis({3}, 3) == RunAnalysis{1, 1, 2});
  for (std::uint32_t n = 2; n < 12; ++n) {
    Members z;
    for (std::uint32_t j = 1; j < n; ++j) z.push_back(1 + 2 * j);
    CHECK(run_analysis(z, n).longest_run == n - 1);
    CHECK(run_analysis(z, n).bch_bound == n);
  }
  CHECK(run_analysis({1, 11}, 6).longest_run == 2);
  CHECK_THROWS_AS(run_analysis(Members{}, 4), ParameterError);
}

TEST_CASE("custom sets") {
  const auto z = custom_set(5, 3, {5, 1}, InnerProduct::Euclidean);
  CHECK(z.elements == Members{1, 5});
  CHECK(z.family == Family::Custom);
  CHECK_THROWS_AS(custom_set(19, 20, {1, 3}, InnerProduct::Euclidean), ParameterError);
  CHECK_THROWS_AS(custom_set(19, 20, {2}, InnerProduct::Euclidean), ParameterError);
  CHECK_THROWS_AS(custom_set(7, 3, {1}, InnerProduct::Hermitian), ParameterError);
  const auto h = custom_set(9, 10, {5}, InnerProduct::Hermitian);
  CHECK(h.q == 3);
  CHECK(h.lcd_closed());
}

TEST_CASE("exhaustive family properties for q <= 50") {
  int built = 0;
  for (const std::uint64_t q : odd_prime_powers(3, 50)) {
    CAPTURE(q);
    const long Q = static_cast<long>(q);
    for (std::uint32_t n = 1; n <= q + 1; ++n) {
      for (int lam = -1; lam <= static_cast<int>(n); ++lam) {
        {
          Expectation e;
          const bool odd = n % 2 == 1;
          e.admissible = n >= 3 && ((q - 1) / 2) % n == 0 &&
                         (odd ? lam >= 0 && lam <= static_cast<int>(n - 3) / 2 : lam >= 1 && lam <= static_cast<int>(n - 2) / 2);
          e.size = odd ? 2 * lam + 1 : 2 * lam;
          e.min_run = static_cast<std::uint32_t>(e.size);
          built += check_builder([&] { return euclidean_family1(q, n, lam); }, e);
        }
        {
          Expectation e;
          const bool odd = n % 2 == 1;
          e.admissible = n >= 3 && ((q + 1) / 2) % n == 0 && lam >= 1 &&
                         lam <= (odd ? static_cast<int>(n - 1) / 2 : static_cast<int>(n) / 2 - 1);
          e.size = n - 2 * lam;
          e.min_run = static_cast<std::uint32_t>(e.size);
          built += check_builder([&] { return euclidean_family2(q, n, lam); }, e);
        }
      }
    }
    for (int lam = -1; lam <= Q; ++lam) {
      Expectation e;
      e.admissible = (q + 1) % 4 == 0 && lam >= 1 && lam <= (Q - 3) / 4;
      e.size = q + 1 - 4 * lam;
      e.min_run = static_cast<std::uint32_t>((Q + 1) / 2 - 2 * lam);
      built += check_builder([&] { return euclidean_family3(q, lam); }, e);
    }
    for (int g = 1; g <= Q; ++g) {
      const bool shape = (q - 1) % g == 0 && (q - 1) / g > 2;
      const long n = shape ? (Q - 1) / g : 0;
      for (int l = -1; l <= Q; ++l) {
        {
          Expectation e;
          long top = 0;
          if (g % 2 == 1) top = fl(Q - 4 * g - 1, 4 * g);
          else if (n % 2 == 0) top = fl(Q - 4 * g - 1, 2 * g);
          else top = fl(Q - 3 * g - 1, 2 * g);
          e.admissible = q % 4 == 1 && shape && l >= 0 && l <= top;
          e.size = g % 2 == 0 && n % 2 == 1 ? 2 * l + 1 : 2 * l + 2;
          e.min_run = static_cast<std::uint32_t>(e.size);
          built += check_builder([&] { return hermitian_family1(q, g, l); }, e);
        }
        {
          Expectation e;
          e.admissible = q % 4 == 3 && shape && l >= 0 && l <= (g % 2 == 1 ? fl(Q - 2 * g - 1, 4 * g) : fl(Q - 3 * g - 1, 2 * g));
          e.size = 2 * l + 1;
          e.min_run = static_cast<std::uint32_t>(e.size);
          built += check_builder([&] { return hermitian_family2(q, g, l); }, e);
        }
        for (const bool one : {true, false}) {
          Expectation e;
          const long top = one ? fl(Q - 8 * g - 1, 4 * g) : fl(Q - 6 * g - 1, 4 * g);
          e.admissible = q % 4 == (one ? 1u : 3u) && shape && g % 2 == 1 && n > 4 && l >= 0 && l <= top;
          e.size = n / 2 + 2 * l + 2;
          e.min_run = static_cast<std::uint32_t>(n / 2 + l + 1);
          if (one) built += check_builder([&] { return hermitian_family1_nonmds(q, g, l); }, e);
          else built += check_builder([&] { return hermitian_family2_nonmds(q, g, l); }, e);
        }
      }
    }
    const long lo = q % 4 == 1 ? (Q - 1) * (Q - 1) / 4 : (Q - 1) * (Q - 3) / 4;
    const long hi = (Q * Q - 1) / 4;
    for (long l = lo - 2; l <= hi + 2; ++l) {
      Expectation e;
      e.admissible = l >= lo && l <= hi;
      e.size = q % 4 == 1 ? Q * Q - 4 * l + 1 : Q * Q - 4 * l;
      e.min_run = static_cast<std::uint32_t>((Q * Q - 4 * l + 1) / 2);
      built += check_builder([&] { return hermitian_family3(q, static_cast<int>(l)); }, e);
    }
  }
  CHECK(built > 500);
}

TEST_CASE("H3 half-set disjointness and overlap") {
  for (const std::uint64_t q : odd_prime_powers(3, 50)) {
    CAPTURE(q);
    const std::uint32_t n = static_cast<std::uint32_t>(q * q + 1);
    const auto sys = OddResidueSystem::make(n, q * q);
    const long Q = static_cast<long>(q);
    const long lo = q % 4 == 1 ? (Q - 1) * (Q - 1) / 4 : (Q - 1) * (Q - 3) / 4;
    const long hi = (Q * Q - 1) / 4;
    for (long l = lo; l <= hi; ++l) {
      std::set<Residue> z1;
      for (long j = l; j <= hi; ++j)
        for (Residue r : coset(static_cast<Residue>(1 + 2 * j), sys).members) z1.insert(r);
      const auto mirror = negate_set(Members(z1.begin(), z1.end()), 2 * n, q);
      Members overlap;
      for (Residue r : mirror)
        if (z1.contains(r)) overlap.push_back(r);
      if (q % 4 == 1) {
        CHECK(overlap.empty());
      } else {
        CHECK(overlap == coset(static_cast<Residue>((q * q + 1) / 2), sys).members);
        CHECK(overlap.size() == 1);
      }
    }
  }
}
