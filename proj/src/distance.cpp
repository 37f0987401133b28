#include "negalcd/distance.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "negalcd/errors.hpp"

namespace negalcd {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = sat_mul(r, b);
  return r;
}

std::uint64_t binomial_saturated(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(r);
}

/// Messages led by row `lead`: row_lead + sum over free digits, Gray-walked over [begin, end).
struct Block {
  std::size_t lead;
  std::uint64_t begin, end;
};

class Walker {
 public:
  Walker(const Field& f, const Matrix& g) : f_(f), g_(g), n_(g.cols()), p_(f.characteristic()), s_(f.degree()) {
    // basis[i * s + t] = x^t * row_i
    for (std::size_t i = 0; i < g.rows(); ++i) {
      Elem b = 1;
      for (unsigned t = 0; t < s_; ++t, b = static_cast<Elem>(b * p_)) {
        std::vector<Elem> v(n_);
        std::vector<std::uint32_t> supp;
        for (std::size_t c = 0; c < n_; ++c) {
          v[c] = f.mul(b, g(i, c));
          if (v[c] != 0) supp.push_back(static_cast<std::uint32_t>(c));
        }
        basis_.push_back(std::move(v));
        support_.push_back(std::move(supp));
      }
    }
  }

  /// Adds the weights of the block's codewords to hist (size n + 1).
  void run(const Block& blk, std::vector<std::uint64_t>& hist) const {
    const std::size_t first = (blk.lead + 1) * s_;  // digit d maps to basis_[first + d]
    const std::size_t digits = basis_.size() - first;
    std::vector<Elem> cw(g_.row(blk.lead).begin(), g_.row(blk.lead).end());
    // Gray value of begin: g_d = (t_d - t_{d+1}) mod p.
    std::vector<std::uint32_t> t(digits + 1, 0);
    std::uint64_t x = blk.begin;
    for (std::size_t d = 0; d < digits; ++d, x /= p_) t[d] = static_cast<std::uint32_t>(x % p_);
    for (std::size_t d = 0; d < digits; ++d) {
      const std::uint32_t gd = (t[d] + p_ - t[d + 1]) % p_;
      if (gd == 0) continue;
      const auto& v = basis_[first + d];
      for (std::size_t c = 0; c < n_; ++c) cw[c] = f_.add(cw[c], f_.mul(gd, v[c]));
    }
    std::uint32_t w = 0;
    for (Elem e : cw) w += e != 0;
    ++hist[w];
    for (std::uint64_t i = blk.begin + 1; i < blk.end; ++i) {
      std::uint64_t y = i;
      std::size_t r = 0;
      while (y % p_ == 0) {
        y /= p_;
        ++r;
      }
      const auto& v = basis_[first + r];
      for (std::uint32_t c : support_[first + r]) {
        const Elem old = cw[c];
        const Elem now = f_.add(old, v[c]);
        cw[c] = now;
        w += (now != 0);
        w -= (old != 0);
      }
      ++hist[w];
    }
  }

  std::size_t digits_after(std::size_t lead) const { return basis_.size() - (lead + 1) * s_; }
  std::uint32_t p() const { return p_; }

 private:
  const Field& f_;
  const Matrix& g_;
  std::size_t n_;
  std::uint32_t p_;
  unsigned s_;
  std::vector<std::vector<Elem>> basis_;
  std::vector<std::vector<std::uint32_t>> support_;
};

}  // namespace

std::uint64_t projective_count(std::uint64_t field_size, std::uint32_t k) {
  if (k == 0) return 0;
  const std::uint64_t all = sat_pow(field_size, k);
  if (all == kSaturated) return kSaturated;
  return (all - 1) / (field_size - 1);
}

WeightSearch min_weight_exhaustive(const Field& f, const Matrix& g, unsigned threads) {
  if (g.rows() == 0) throw ParameterError("minimum weight of the zero code is undefined");
  const Walker walker(f, g);
  WeightSearch out;
  out.words = projective_count(f.order(), static_cast<std::uint32_t>(g.rows()));
  if (out.words == kSaturated) throw ParameterError("message space too large to enumerate");

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t chunk = std::max<std::uint64_t>(1 << 14, out.words / (16ull * threads) + 1);
  std::vector<Block> blocks;
  for (std::size_t lead = 0; lead < g.rows(); ++lead) {
    const std::uint64_t total = sat_pow(walker.p(), walker.digits_after(lead));
    for (std::uint64_t b = 0; b < total; b += chunk) blocks.push_back({lead, b, std::min(total, b + chunk)});
  }

  std::vector<std::vector<std::uint64_t>> hists;
  std::atomic<std::size_t> next{0};
  auto work = [&](std::vector<std::uint64_t>& hist) {
    for (std::size_t i; (i = next.fetch_add(1)) < blocks.size();) walker.run(blocks[i], hist);
  };
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, blocks.size()));
  hists.assign(std::max(1u, threads), std::vector<std::uint64_t>(g.cols() + 1, 0));
  if (threads <= 1) {
    work(hists[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, std::ref(hists[t]));
    for (auto& th : pool) th.join();
  }
  out.distribution.assign(g.cols() + 1, 0);
  for (const auto& h : hists)
    for (std::size_t w = 0; w < h.size(); ++w) out.distribution[w] += h[w];
  out.min_weight = 0;
  for (std::size_t w = 1; w < out.distribution.size() && out.min_weight == 0; ++w)
    if (out.distribution[w] != 0) out.min_weight = static_cast<std::uint32_t>(w);
  return out;
}

std::optional<bool> all_minors_nonsingular(const Field& f, const Matrix& g, std::uint64_t limit) {
  const std::size_t n = g.cols(), k = g.rows();
  if (binomial_saturated(n, k) > limit) return std::nullopt;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (rank(f, g.columns(idx)) < k) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint32_t macwilliams_min_distance(const std::vector<std::uint64_t>& dual_projective, std::uint64_t field_size,
                                       std::uint32_t k) {
  using boost::multiprecision::cpp_int;
  const std::size_t n = dual_projective.size() - 1;
  if (k == 0 || k > n) throw ParameterError("MacWilliams transform needs 1 <= k <= n");
  std::vector<cpp_int> b(n + 1);
  b[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) b[i] = cpp_int(dual_projective[i]) * (field_size - 1);
  cpp_int dual_size = 0;
  for (const auto& x : b) dual_size += x;
  if (dual_size != boost::multiprecision::pow(cpp_int(field_size), static_cast<unsigned>(n - k)))
    throw std::logic_error("dual weight distribution does not sum to Q^(n-k)");
  std::vector<std::vector<cpp_int>> binom(n + 1, std::vector<cpp_int>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : cpp_int(0));
  }
  std::vector<cpp_int> qpow(n + 1);
  qpow[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) qpow[i] = qpow[i - 1] * (field_size - 1);
  // A_j = |C_perp|^{-1} sum_i B_i K_j(i), K_j(i) = sum_s (-1)^s (Q-1)^{j-s} C(i, s) C(n-i, j-s).
  for (std::size_t j = 1; j <= n; ++j) {
    cpp_int acc = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (b[i] == 0) continue;
      cpp_int kr = 0;
      for (std::size_t s = 0; s <= std::min(i, j); ++s) {
        if (j - s > n - i) continue;
        const cpp_int term = qpow[j - s] * binom[i][s] * binom[n - i][j - s];
        if (s % 2 == 0)
          kr += term;
        else
          kr -= term;
      }
      acc += b[i] * kr;
    }
    if (acc % dual_size != 0 || acc < 0) throw std::logic_error("MacWilliams transform gave a non-integral count");
    if (acc != 0) return static_cast<std::uint32_t>(j);
  }
  throw std::logic_error("MacWilliams transform found no nonzero codeword");
}

DistanceResult minimum_distance(const NegacyclicCode& c, std::uint64_t budget, std::uint64_t minor_budget) {
  const std::uint32_t n = c.n(), k = c.k();
  if (k == 0) throw ParameterError("the zero code has no minimum distance");
  const std::uint32_t singleton = n - k + 1;
  const auto bch = run_analysis(c.defining_set()).bch_bound;
  const Field& f = *c.field();
  DistanceResult r;
  r.lower = bch;
  r.upper = singleton;

  if (projective_count(c.field_size(), k) <= budget) {
    const auto ws = min_weight_exhaustive(f, c.generator_matrix());
    r.exact = r.lower = r.upper = ws.min_weight;
    r.words = ws.words;
    r.method = "enumeration";
    return r;
  }
  if (projective_count(c.field_size(), n - k) <= budget) {
    const auto ws = min_weight_exhaustive(f, c.dual_generator_matrix());
    r.dual_distance = ws.min_weight;
    r.words = ws.words;
    r.exact = r.lower = r.upper = macwilliams_min_distance(ws.distribution, c.field_size(), k);
    r.method = "MacWilliams";
    return r;
  }
  const bool use_dual = n - k < k;
  const auto minors =
      all_minors_nonsingular(f, use_dual ? c.dual_generator_matrix() : c.generator_matrix(), minor_budget);
  if (minors && *minors) {
    r.exact = r.lower = r.upper = singleton;
    r.method = "minors";
    return r;
  }
  if (minors) r.upper = singleton - 1;
  r.method = "bracket";
  return r;
}

std::string to_string(MdsVerdict v) {
  switch (v) {
    case MdsVerdict::True: return "true";
    case MdsVerdict::False: return "false";
    case MdsVerdict::Unverified: return "unverified";
  }
  return "?";
}

MdsVerdict mds_verdict(const NegacyclicCode& c, const DistanceResult& d) {
  const std::uint32_t singleton = c.n() - c.k() + 1;
  if (d.exact) return *d.exact == singleton ? MdsVerdict::True : MdsVerdict::False;
  if (d.upper < singleton) return MdsVerdict::False;
  if (d.lower >= singleton) return MdsVerdict::True;
  return MdsVerdict::Unverified;
}

MdsVerdict is_mds(const NegacyclicCode& c, std::uint64_t budget) { return mds_verdict(c, minimum_distance(c, budget)); }

}  // namespace negalcd
