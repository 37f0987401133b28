#include "negalcd/coset_lemmas.hpp"

#include <algorithm>
#include <sstream>

#include "negalcd/cosets.hpp"
#include "negalcd/number_theory.hpp"

namespace negalcd {

std::string to_string(CosetLemma lemma) {
  switch (lemma) {
    case CosetLemma::SingletonsQMinus1: return "n|(q-1)/2 singletons";
    case CosetLemma::PairsQPlus1: return "n|(q+1)/2 pairs";
    case CosetLemma::LengthQPlus1: return "n=q+1 pairs";
    case CosetLemma::HermitianQMinus1: return "hermitian n=(q-1)/gamma";
    case CosetLemma::HermitianQSquared1: return "hermitian n=q^2+1";
  }
  return "?";
}

bool lemma_applies(CosetLemma lemma, std::uint64_t q, std::uint32_t n) {
  if (!is_odd_prime_power(q) || n == 0) return false;
  switch (lemma) {
    case CosetLemma::SingletonsQMinus1: return n >= 3 && (q - 1) / 2 % n == 0;
    case CosetLemma::PairsQPlus1: return n >= 3 && (q + 1) / 2 % n == 0;
    case CosetLemma::LengthQPlus1: return n == q + 1 && n % 4 == 0;
    case CosetLemma::HermitianQMinus1: return n >= 2 && (q - 1) % n == 0;
    case CosetLemma::HermitianQSquared1: return n == q * q + 1;
  }
  return false;
}

namespace {

class Checker {
 public:
  Checker(LemmaCheck& out, const OddResidueSystem& sys) : out_(out), sys_(sys) {}

  Residue r(std::int64_t j) const { return static_cast<Residue>(mod(1 + 2 * j, sys_.two_n)); }

  CyclotomicCoset make(std::vector<Residue> members) const {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return {members.front(), members};
  }

  void expect(const CyclotomicCoset& actual, const CyclotomicCoset& predicted, const std::string& what) {
    ++out_.statements;
    if (actual == predicted) return;
    std::ostringstream os;
    os << what << ": predicted {";
    for (auto x : predicted.members) os << ' ' << x;
    os << " } actual {";
    for (auto x : actual.members) os << ' ' << x;
    os << " }";
    out_.mismatches.push_back(os.str());
  }

  void expect_true(bool ok, const std::string& what) {
    ++out_.statements;
    if (!ok) out_.mismatches.push_back(what);
  }

  CyclotomicCoset C(std::int64_t j) const { return coset(r(j), sys_); }

 private:
  LemmaCheck& out_;
  const OddResidueSystem& sys_;
};

std::string at(std::int64_t j) { return "j=" + std::to_string(j); }

}  // namespace

LemmaCheck check_lemma(CosetLemma lemma, std::uint64_t q, std::uint32_t n) {
  LemmaCheck out{lemma, q, n, 0, {}};
  if (!lemma_applies(lemma, q, n)) {
    out.mismatches.push_back("hypothesis does not hold");
    return out;
  }
  const bool hermitian = lemma == CosetLemma::HermitianQMinus1 || lemma == CosetLemma::HermitianQSquared1;
  const auto sys = OddResidueSystem::make(n, hermitian ? q * q : q);
  Checker ck(out, sys);
  const std::int64_t N = n;
  const auto Q = static_cast<std::int64_t>(q);

  switch (lemma) {
    case CosetLemma::SingletonsQMinus1:
      for (std::int64_t j = 0; j < N; ++j) {
        ck.expect(ck.C(j), ck.make({ck.r(j)}), "C " + at(j));
        ck.expect(negate_coset(ck.C(j), sys), ck.C(N - j - 1), "-C " + at(j));
      }
      if (N % 2 == 1) {
        const std::int64_t j = (N - 1) / 2;
        ck.expect(negate_coset(ck.C(j), sys), ck.C(j), "self-negating " + at(j));
      }
      break;

    case CosetLemma::PairsQPlus1: {
      const std::int64_t last = N % 2 == 0 ? N / 2 - 1 : (N - 3) / 2;
      for (std::int64_t j = 0; j <= last; ++j) ck.expect(ck.C(j), ck.make({ck.r(j), ck.r(N - 1 - j)}), "C " + at(j));
      if (N % 2 == 1) ck.expect(ck.C((N - 1) / 2), ck.make({ck.r((N - 1) / 2)}), "singleton C " + at((N - 1) / 2));
      for (std::int64_t j = 0; j < N; ++j) ck.expect(negate_coset(ck.C(j), sys), ck.C(j), "-C = C " + at(j));
      ck.expect_true(all_cosets(sys).size() == static_cast<std::size_t>(last + 1 + N % 2), "coset count");
      break;
    }

    case CosetLemma::LengthQPlus1: {
      for (std::int64_t j = 0; j <= (Q - 3) / 4; ++j) {
        ck.expect(ck.C(j), ck.make({ck.r(j), ck.r((Q - 1) / 2 - j)}), "first family C " + at(j));
        ck.expect(negate_coset(ck.C(j), sys), ck.C((Q + 1) / 2 + j), "-C " + at(j));
      }
      for (std::int64_t j = (Q + 1) / 2; j <= (3 * Q - 1) / 4; ++j)
        ck.expect(ck.C(j), ck.make({ck.r(j), ck.r(N + (Q - 1) / 2 - j)}), "second family C " + at(j));
      for (std::int64_t j = 0; j < N; ++j)
        ck.expect_true(!(negate_coset(ck.C(j), sys) == ck.C(j)), "C != -C " + at(j));
      ck.expect_true(all_cosets(sys).size() == static_cast<std::size_t>(N / 2), "every coset has two elements");
      break;
    }

    case CosetLemma::HermitianQMinus1: {
      const std::int64_t gamma = (Q - 1) / N;
      for (std::int64_t j = 0; j < N; ++j) {
        ck.expect(ck.C(j), ck.make({ck.r(j)}), "C " + at(j));
        std::int64_t target;
        if (gamma % 2 == 1)
          target = j <= N / 2 - 1 ? N / 2 - 1 - j : 3 * N / 2 - 1 - j;
        else
          target = N - 1 - j;
        ck.expect(negate_q_coset(ck.C(j), sys, q), ck.C(target), "-qC " + at(j));
      }
      break;
    }

    case CosetLemma::HermitianQSquared1: {
      for (std::int64_t j = 0; 4 * j < N - 2; ++j)
        ck.expect(ck.C(j), ck.make({ck.r(j), static_cast<Residue>(N - 1 - 2 * j)}), "C " + at(j));
      ck.expect(ck.C((N - 2) / 4), ck.make({ck.r((N - 2) / 4)}), "singleton C " + at((N - 2) / 4));
      for (std::int64_t j = N / 2; 4 * j < 3 * N - 2; ++j)
        ck.expect(ck.C(j), ck.make({ck.r(j), static_cast<Residue>(3 * N - 1 - 2 * j)}), "C " + at(j));
      ck.expect(ck.C((3 * N - 2) / 4), ck.make({ck.r((3 * N - 2) / 4)}), "singleton C " + at((3 * N - 2) / 4));
      if (Q % 4 == 3) {
        const std::int64_t top = (Q * Q - 1) / 4;
        ck.expect(negate_q_coset(ck.C(top), sys, q), ck.C(top), "-qC = C " + at(top));
        for (std::int64_t j = (Q - 1) * (Q - 3) / 4; j < top; ++j)
          for (std::int64_t k = (Q - 1) * (Q - 3) / 4; k < top; ++k)
            ck.expect_true(!(negate_q_coset(ck.C(j), sys, q) == ck.C(k)),
                           "C_{1+2k} != -qC_{1+2j} " + at(j) + " k=" + std::to_string(k));
      }
      break;
    }
  }
  return out;
}

std::vector<LemmaCheck> check_all_lemmas(std::uint64_t q_max, std::uint32_t two_n_max) {
  std::vector<LemmaCheck> out;
  const CosetLemma lemmas[] = {CosetLemma::SingletonsQMinus1, CosetLemma::PairsQPlus1, CosetLemma::LengthQPlus1,
                               CosetLemma::HermitianQMinus1, CosetLemma::HermitianQSquared1};
  for (const auto q : odd_prime_powers(3, q_max))
    for (std::uint32_t n = 1; 2 * n <= two_n_max; ++n)
      for (const auto lemma : lemmas)
        if (lemma_applies(lemma, q, n)) out.push_back(check_lemma(lemma, q, n));
  return out;
}

}  // namespace negalcd
