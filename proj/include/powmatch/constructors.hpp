#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "powmatch/group.hpp"
#include "powmatch/permutation.hpp"

// Group constructors. Each documents its canonical element order; identity is
// always index 0 so exports are reproducible bit for bit.

namespace powmatch {

namespace detail {

inline void check_cap(std::size_t order, std::size_t cap, const char* what) {
  if (order > cap)
    throw SizeError(std::string(what) + ": order " + std::to_string(order) + " exceeds cap " +
                    std::to_string(cap));
}

inline std::string power_label(const std::string& base, std::size_t k) {
  if (k == 0) return "1";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

}  // namespace detail

/// C_n with index i = z^i.
inline GroupTable make_cyclic(std::size_t n, std::size_t cap = kDefaultOrderCap) {
  if (n == 0) throw DomainError("make_cyclic: n must be positive");
  detail::check_cap(n, cap, "make_cyclic");
  std::vector<Element> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = detail::power_label("z", i);
    for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = static_cast<Element>((i + j) % n);
  }
  return GroupTable::from_table(n, std::move(mul), std::move(labels), Validation::trusted, cap);
}

/// D_n of order 2n: r^n = s^2 = 1, s r s = r^-1. Index a + n*b is r^a s^b.
inline GroupTable make_dihedral(std::size_t n, std::size_t cap = kDefaultOrderCap) {
  if (n < 3) throw DomainError("make_dihedral: n must be at least 3, got " + std::to_string(n));
  detail::check_cap(2 * n, cap, "make_dihedral");
  const std::size_t order = 2 * n;
  std::vector<Element> mul(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x % n, b = x / n;
    labels[x] = b == 0 ? detail::power_label("r", a) : (a == 0 ? "s" : detail::power_label("r", a) + "s");
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t c = y % n, d = y / n;
      // r^a s^b r^c s^d = r^(a + (-1)^b c) s^(b+d)
      const std::size_t rot = b == 0 ? (a + c) % n : (a + n - c) % n;
      mul[x * order + y] = static_cast<Element>(rot + n * ((b + d) % 2));
    }
  }
  return GroupTable::from_table(order, std::move(mul), std::move(labels), Validation::trusted, cap);
}

/// Dicyclic group of order 4m: a^(2m) = 1, x^2 = a^m, x^-1 a x = a^-1.
/// Index k + 2m*j is a^k x^j. For m a power of two this is generalized quaternion.
inline GroupTable make_dicyclic(std::size_t m, std::size_t cap = kDefaultOrderCap) {
  if (m < 2) throw DomainError("make_dicyclic: m must be at least 2, got " + std::to_string(m));
  detail::check_cap(4 * m, cap, "make_dicyclic");
  const std::size_t half = 2 * m, order = 4 * m;
  std::vector<Element> mul(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t u = 0; u < order; ++u) {
    const std::size_t k = u % half, j = u / half;
    labels[u] = j == 0 ? detail::power_label("a", k) : (k == 0 ? "x" : detail::power_label("a", k) + "x");
    for (std::size_t v = 0; v < order; ++v) {
      const std::size_t l = v % half, i = v / half;
      std::size_t exp, xs;
      if (j == 0) {
        exp = k + l;
        xs = i;
      } else {
        // a^k x a^l x^i = a^(k-l) x^(1+i), and x^2 = a^m.
        exp = k + half - l;
        xs = 1 + i;
        if (xs == 2) {
          exp += m;
          xs = 0;
        }
      }
      mul[u * order + v] = static_cast<Element>(exp % half + half * xs);
    }
  }
  return GroupTable::from_table(order, std::move(mul), std::move(labels), Validation::trusted, cap);
}

/// (C_2)^k; index bits are coordinates, multiplication is XOR.
inline GroupTable make_elementary_abelian_2(std::size_t k, std::size_t cap = kDefaultOrderCap) {
  if (k >= 63 || (std::size_t{1} << k) > cap)
    throw SizeError("make_elementary_abelian_2: 2^" + std::to_string(k) + " exceeds cap " +
                    std::to_string(cap));
  const std::size_t n = std::size_t{1} << k;
  std::vector<Element> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::string bits(k, '0');
    for (std::size_t b = 0; b < k; ++b)
      if ((x >> b) & 1U) bits[k - 1 - b] = '1';
    labels[x] = k == 0 ? "1" : bits;
    for (std::size_t y = 0; y < n; ++y) mul[x * n + y] = static_cast<Element>(x ^ y);
  }
  return GroupTable::from_table(n, std::move(mul), std::move(labels), Validation::trusted, cap);
}

/// Direct product A x B; index i*|B| + j is (a_i, b_j).
inline GroupTable direct_product(const GroupTable& a, const GroupTable& b,
                                 std::size_t cap = kDefaultOrderCap) {
  const std::size_t na = a.order(), nb = b.order();
  if (nb != 0 && na > cap / nb)
    throw SizeError("direct_product: order " + std::to_string(na) + "*" + std::to_string(nb) +
                    " exceeds cap " + std::to_string(cap));
  const std::size_t n = na * nb;
  // Reindex so that the identity (e_a, e_b) lands first when either factor
  // has a non-zero identity index.
  std::vector<Element> ra(na), rb(nb);
  for (Element i = 0; i < na; ++i) ra[i] = (i == a.identity()) ? 0 : (i < a.identity() ? i + 1 : i);
  for (Element j = 0; j < nb; ++j) rb[j] = (j == b.identity()) ? 0 : (j < b.identity() ? j + 1 : j);
  std::vector<Element> ia(na), ib(nb);
  for (Element i = 0; i < na; ++i) ia[ra[i]] = i;
  for (Element j = 0; j < nb; ++j) ib[rb[j]] = j;

  std::vector<Element> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Element xa = ia[x / nb], xb = ib[x % nb];
    labels[x] = "(" + a.label(xa) + "," + b.label(xb) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const Element ya = ia[y / nb], yb = ib[y % nb];
      mul[x * n + y] = static_cast<Element>(ra[a.mul(xa, ya)] * nb + rb[b.mul(xb, yb)]);
    }
  }
  return GroupTable::from_table(n, std::move(mul), std::move(labels), Validation::trusted, cap);
}

/// Group generated by permutations, closed breadth-first. Index order is
/// discovery order: identity first, then for each element in turn its
/// products element*gen for each generator in the given order.
inline GroupTable from_permutation_generators(const std::vector<Permutation>& gens,
                                              std::size_t cap = kDefaultOrderCap) {
  std::size_t degree = 0;
  for (const auto& g : gens) degree = std::max(degree, g.degree());
  std::vector<Permutation> gs;
  for (const auto& g : gens) gs.push_back(g.extended(degree));

  std::vector<Permutation> elems{Permutation(degree)};
  std::map<std::vector<std::uint32_t>, Element> index{{elems[0].images(), 0}};
  // right[k][x] = index of elems[x] * gens[k]
  std::vector<std::vector<Element>> right(gs.size());
  // Each non-identity element is parent * gens[via].
  std::vector<Element> parent{0};
  std::vector<std::size_t> via{0};
  for (std::size_t x = 0; x < elems.size(); ++x) {
    for (std::size_t k = 0; k < gs.size(); ++k) {
      Permutation y = elems[x] * gs[k];
      auto [it, inserted] = index.try_emplace(y.images(), static_cast<Element>(elems.size()));
      if (inserted) {
        if (elems.size() >= cap)
          throw SizeError("from_permutation_generators: closure exceeds cap " + std::to_string(cap));
        elems.push_back(std::move(y));
        parent.push_back(static_cast<Element>(x));
        via.push_back(k);
      }
      right[k].push_back(it->second);
    }
  }

  const std::size_t n = elems.size();
  std::vector<Element> mul(n * n);
  // x * y = (x * parent(y)) * gen; parents precede children in discovery order.
  for (std::size_t x = 0; x < n; ++x) {
    mul[x * n] = static_cast<Element>(x);
    for (std::size_t y = 1; y < n; ++y)
      mul[x * n + y] = right[via[y]][mul[x * n + parent[y]]];
  }
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = elems[x].cycle_string();
  return GroupTable::from_table(n, std::move(mul), std::move(labels), Validation::trusted, cap);
}

/// S_n as all permutations of n points in lexicographic order of image arrays.
inline GroupTable make_symmetric(std::size_t n, std::size_t cap = kDefaultOrderCap) {
  if (n == 0 || n > 8) throw DomainError("make_symmetric: n must be in 1..8, got " + std::to_string(n));
  std::size_t order = 1;
  for (std::size_t i = 2; i <= n; ++i) order *= i;
  detail::check_cap(order, cap, "make_symmetric");

  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::uint32_t> p(n);
  for (std::uint32_t i = 0; i < n; ++i) p[i] = i;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  auto rank = [&](const std::vector<std::uint32_t>& q) {
    // Lehmer code gives the lexicographic rank directly.
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t smaller = 0;
      for (std::size_t j = i + 1; j < n; ++j) smaller += q[j] < q[i];
      r = r * (n - i) + smaller;
    }
    return static_cast<Element>(r);
  };

  std::vector<Element> mul(order * order);
  std::vector<std::string> labels(order);
  std::vector<std::uint32_t> prod(n);
  for (std::size_t x = 0; x < order; ++x) {
    labels[x] = Permutation(perms[x]).cycle_string();
    for (std::size_t y = 0; y < order; ++y) {
      for (std::size_t i = 0; i < n; ++i) prod[i] = perms[y][perms[x][i]];
      mul[x * order + y] = rank(prod);
    }
  }
  return GroupTable::from_table(order, std::move(mul), std::move(labels), Validation::trusted, cap);
}

}  // namespace powmatch
