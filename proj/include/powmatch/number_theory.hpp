#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "powmatch/error.hpp"

namespace powmatch::nt {

/// Canonical prime factorization: ascending distinct primes with positive exponents.
struct Factorization {
  std::uint64_t n = 1;
  std::vector<std::pair<std::uint64_t, unsigned>> pairs;

  /// Number of prime factors counted with multiplicity.
  unsigned big_omega() const {
    unsigned s = 0;
    for (const auto& [p, a] : pairs) s += a;
    return s;
  }
  std::vector<std::uint64_t> primes() const {
    std::vector<std::uint64_t> out;
    for (const auto& [p, a] : pairs) out.push_back(p);
    return out;
  }
};

/// Trial division with a 2,3,5 wheel.
inline Factorization factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  Factorization f;
  f.n = n;
  auto strip = [&](std::uint64_t p) {
    if (n % p != 0) return;
    unsigned a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    f.pairs.emplace_back(p, a);
  };
  strip(2);
  strip(3);
  strip(5);
  static constexpr std::uint64_t kWheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  std::uint64_t p = 7;
  for (std::size_t i = 0; p <= n / p; p += kWheel[i++ & 7]) strip(p);
  if (n > 1) f.pairs.emplace_back(n, 1);
  return f;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.pairs.size() == 1 && f.pairs[0].second == 1;
}

/// True for 1 and for p^k, k >= 1.
inline bool is_prime_power(std::uint64_t n) {
  return n >= 1 && factorize(n).pairs.size() <= 1;
}

inline std::uint64_t tau(const Factorization& f) {
  std::uint64_t t = 1;
  for (const auto& [p, a] : f.pairs) t *= a + 1;
  return t;
}

inline std::uint64_t phi(const Factorization& f) {
  std::uint64_t r = 1;
  for (const auto& [p, a] : f.pairs) {
    for (unsigned i = 1; i < a; ++i) r *= p;
    r *= p - 1;
  }
  return r;
}

inline std::uint64_t tau(std::uint64_t n) { return tau(factorize(n)); }
inline std::uint64_t phi(std::uint64_t n) { return phi(factorize(n)); }

inline bool tau_less_than_phi(std::uint64_t n) {
  const auto f = factorize(n);
  return tau(f) < phi(f);
}

/// Multiplication clamped to UINT64_MAX.
inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline std::uint64_t saturating_factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r = saturating_mul(r, i);
  return r;
}

/// Evidence for the inequality p^(a-1)(p-1) >= a+1 (first part) and, for
/// odd p, p^(a-1)(p-1) >= 2(a+1) (second part).
struct LemmaGap {
  enum class Part1 { exception, equality, strict, violated };
  enum class Part2 { not_applicable, equality, strict, violated };

  std::uint64_t p = 0;
  unsigned a = 0;
  std::uint64_t value = 0;  ///< p^(a-1)(p-1), saturated at UINT64_MAX
  std::uint64_t a_plus_one = 0;
  Part1 part1 = Part1::strict;
  Part2 part2 = Part2::not_applicable;
};

inline LemmaGap lemma_gap(std::uint64_t p, unsigned a) {
  if (!is_prime(p)) throw DomainError("lemma_gap: " + std::to_string(p) + " is not prime");
  if (a == 0) throw DomainError("lemma_gap: exponent must be positive");
  LemmaGap g;
  g.p = p;
  g.a = a;
  g.value = p - 1;
  for (unsigned i = 1; i < a; ++i) g.value = saturating_mul(g.value, p);
  g.a_plus_one = a + 1;

  if (p == 2 && (a == 1 || a == 2)) {
    g.part1 = LemmaGap::Part1::exception;
  } else if (g.value == g.a_plus_one) {
    g.part1 = LemmaGap::Part1::equality;
  } else if (g.value > g.a_plus_one) {
    g.part1 = LemmaGap::Part1::strict;
  } else {
    g.part1 = LemmaGap::Part1::violated;
  }

  if (p != 2 && !(p == 3 && a == 1)) {
    const std::uint64_t twice = 2 * g.a_plus_one;
    if (g.value == twice)
      g.part2 = LemmaGap::Part2::equality;
    else if (g.value > twice)
      g.part2 = LemmaGap::Part2::strict;
    else
      g.part2 = LemmaGap::Part2::violated;
  }
  return g;
}

inline const char* to_string(LemmaGap::Part1 p) {
  switch (p) {
    case LemmaGap::Part1::exception: return "exception";
    case LemmaGap::Part1::equality: return "equality";
    case LemmaGap::Part1::strict: return "strict";
    case LemmaGap::Part1::violated: return "violated";
  }
  return "?";
}

inline const char* to_string(LemmaGap::Part2 p) {
  switch (p) {
    case LemmaGap::Part2::not_applicable: return "n/a";
    case LemmaGap::Part2::equality: return "equality";
    case LemmaGap::Part2::strict: return "strict";
    case LemmaGap::Part2::violated: return "violated";
  }
  return "?";
}

/// All positive divisors in ascending order.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, a] : factorize(n).pairs) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= a; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline constexpr std::size_t kDefaultDivisorCap = 4096;

struct Antichain {
  std::size_t size = 0;
  std::vector<std::uint64_t> witness;  ///< ascending
};

namespace detail {

// Maximum antichain of the divisor poset restricted to `alive`, via Dilworth:
// width = |alive| - (maximum matching in the strict-comparability bipartite graph).
inline std::size_t poset_width(const std::vector<std::uint64_t>& d, const std::vector<bool>& alive) {
  const std::size_t k = d.size();
  std::vector<int> match_right(k, -1);
  std::vector<char> seen;
  auto try_augment = [&](auto&& self, std::size_t u) -> bool {
    for (std::size_t v = u + 1; v < k; ++v) {
      if (!alive[v] || d[v] % d[u] != 0 || seen[v]) continue;
      seen[v] = 1;
      if (match_right[v] < 0 || self(self, static_cast<std::size_t>(match_right[v]))) {
        match_right[v] = static_cast<int>(u);
        return true;
      }
    }
    return false;
  };
  std::size_t alive_count = 0, matched = 0;
  for (std::size_t u = 0; u < k; ++u) {
    if (!alive[u]) continue;
    ++alive_count;
    seen.assign(k, 0);
    if (try_augment(try_augment, u)) ++matched;
  }
  return alive_count - matched;
}

}  // namespace detail

/// Exact maximum antichain in the divisor lattice of n. The witness is the
/// lexicographically smallest maximum antichain (ascending order).
inline Antichain max_divisor_antichain(std::uint64_t n, std::size_t divisor_cap = kDefaultDivisorCap) {
  const auto d = divisors(n);
  if (d.size() > divisor_cap)
    throw SizeError("max_divisor_antichain: " + std::to_string(d.size()) + " divisors exceed cap " +
                    std::to_string(divisor_cap));
  std::vector<bool> alive(d.size(), true);
  Antichain result;
  result.size = detail::poset_width(d, alive);

  // Greedy ascending: keep d[i] if the divisors still compatible with the
  // chosen set admit an antichain that completes it to full size.
  std::size_t need = result.size;
  for (std::size_t i = 0; i < d.size() && need > 0; ++i) {
    if (!alive[i]) continue;
    std::vector<bool> trial = alive;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (j != i && (d[j] % d[i] == 0 || d[i] % d[j] == 0)) trial[j] = false;
    }
    // Elements below i are no longer candidates.
    for (std::size_t j = 0; j < i; ++j) trial[j] = false;
    trial[i] = false;
    if (detail::poset_width(d, trial) + 1 >= need) {
      result.witness.push_back(d[i]);
      alive = std::move(trial);
      --need;
    } else {
      alive[i] = false;
    }
  }
  return result;
}

/// Size of the middle layer: divisors d with Omega(d) = floor(Omega(n)/2).
inline std::size_t dtk_antichain_size(std::uint64_t n) {
  const auto f = factorize(n);
  const unsigned target = f.big_omega() / 2;
  // Count exponent vectors (e_1..e_r), 0 <= e_i <= a_i, with sum = target.
  std::vector<std::size_t> ways(target + 1, 0);
  ways[0] = 1;
  for (const auto& [p, a] : f.pairs) {
    std::vector<std::size_t> next(target + 1, 0);
    for (unsigned s = 0; s <= target; ++s) {
      if (ways[s] == 0) continue;
      for (unsigned e = 0; e <= a && s + e <= target; ++e) next[s + e] += ways[s];
    }
    ways = std::move(next);
  }
  return ways[target];
}

}  // namespace powmatch::nt
