#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "powmatch/element_set.hpp"
#include "powmatch/error.hpp"
#include "powmatch/number_theory.hpp"

namespace powmatch {

inline constexpr std::size_t kDefaultOrderCap = 5000;

/// How much checking GroupTable::from_table performs.
enum class Validation {
  full,     ///< closure, identity, inverses and all n^3 associativity triples
  trusted,  ///< constructor output; only the cheap structural checks
};

/// A finite group given by its Cayley table.
///
/// Elements are the indices 0..n-1. The table is immutable after
/// construction; element orders, inverses and the membership mask of every
/// cyclic subgroup <g> are cached.
class GroupTable {
 public:
  static GroupTable from_table(std::size_t n, std::vector<Element> mul,
                               std::vector<std::string> labels = {},
                               Validation validation = Validation::full,
                               std::size_t cap = kDefaultOrderCap) {
    if (n == 0) throw ValidationError("group order must be positive");
    if (n > cap)
      throw SizeError("group order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    if (mul.size() != n * n)
      throw ValidationError("multiplication table has " + std::to_string(mul.size()) +
                            " entries, expected " + std::to_string(n * n));
    if (!labels.empty() && labels.size() != n)
      throw ValidationError("labels has " + std::to_string(labels.size()) + " entries, expected " +
                            std::to_string(n));

    GroupTable g;
    g.n_ = n;
    g.mul_ = std::move(mul);
    g.labels_ = std::move(labels);
    for (std::size_t i = 0; i < g.mul_.size(); ++i) {
      if (g.mul_[i] >= n)
        throw ValidationError("entry mul[" + std::to_string(i / n) + "][" + std::to_string(i % n) +
                              "] = " + std::to_string(g.mul_[i]) + " is out of range");
    }
    g.find_identity();
    g.find_inverses();
    if (validation == Validation::full) g.check_associativity();
    g.compute_cyclic_data();
    return g;
  }

  std::size_t order() const noexcept { return n_; }
  Element identity() const noexcept { return identity_; }

  Element mul(Element a, Element b) const noexcept { return mul_[std::size_t{a} * n_ + b]; }
  std::span<const Element> row(Element a) const noexcept {
    return {mul_.data() + std::size_t{a} * n_, n_};
  }
  std::span<const Element> table() const noexcept { return mul_; }

  Element inverse(Element a) const noexcept { return inv_[a]; }

  /// o(a): least k >= 1 with a^k = 1.
  std::uint32_t element_order(Element a) const noexcept { return elt_order_[a]; }

  /// Membership mask of the cyclic subgroup <a>.
  const ElementSet& cyclic_subgroup(Element a) const noexcept { return cyc_masks_[a]; }

  /// a^k for k >= 0.
  Element power(Element a, std::uint64_t k) const noexcept {
    Element r = identity_, base = a;
    k %= elt_order_[a];
    while (k > 0) {
      if (k & 1U) r = mul(r, base);
      base = mul(base, base);
      k >>= 1U;
    }
    return r;
  }

  bool commute(Element a, Element b) const noexcept { return mul(a, b) == mul(b, a); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Display name of an element; falls back to its index.
  std::string label(Element a) const {
    return labels_.empty() ? std::to_string(a) : labels_[a];
  }

  /// Sorted multiset of element orders.
  std::vector<std::uint32_t> order_spectrum() const {
    std::vector<std::uint32_t> s(elt_order_);
    std::sort(s.begin(), s.end());
    return s;
  }

  ElementSet all() const { return ElementSet::full(n_); }
  ElementSet empty_set() const { return ElementSet(n_); }

 private:
  GroupTable() = default;

  void find_identity() {
    for (Element e = 0; e < n_; ++e) {
      bool ok = true;
      for (Element x = 0; x < n_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
      if (ok) {
        identity_ = e;
        return;
      }
    }
    throw ValidationError("no identity element: no row/column pair is the identity permutation");
  }

  void find_inverses() {
    inv_.assign(n_, 0);
    for (Element g = 0; g < n_; ++g) {
      const auto r = row(g);
      const auto it = std::find(r.begin(), r.end(), identity_);
      if (it == r.end())
        throw ValidationError("element " + std::to_string(g) + " has no inverse");
      const auto h = static_cast<Element>(it - r.begin());
      if (mul(h, g) != identity_)
        throw ValidationError("element " + std::to_string(g) + " has right inverse " +
                              std::to_string(h) + " that is not a left inverse");
      inv_[g] = h;
    }
  }

  void check_associativity() const {
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b) {
        const Element ab = mul(a, b);
        for (Element c = 0; c < n_; ++c) {
          const Element lhs = mul(ab, c);
          const Element rhs = mul(a, mul(b, c));
          if (lhs != rhs)
            throw ValidationError("associativity fails for triple (" + std::to_string(a) + ", " +
                                  std::to_string(b) + ", " + std::to_string(c) + "): (ab)c = " +
                                  std::to_string(lhs) + " but a(bc) = " + std::to_string(rhs));
        }
      }
  }

  void compute_cyclic_data() {
    elt_order_.assign(n_, 0);
    cyc_masks_.assign(n_, ElementSet(n_));
    for (Element g = 0; g < n_; ++g) {
      auto& mask = cyc_masks_[g];
      mask.insert(identity_);
      Element x = g;
      std::uint32_t k = 1;
      while (x != identity_) {
        if (k > n_)
          throw ValidationError("element " + std::to_string(g) + " has no finite order within " +
                                std::to_string(n_) + " steps");
        mask.insert(x);
        x = mul(x, g);
        ++k;
      }
      elt_order_[g] = k;
    }
  }

  std::size_t n_ = 0;
  Element identity_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<std::string> labels_;
  std::vector<ElementSet> cyc_masks_;
  std::vector<std::uint32_t> elt_order_;
};

// ---------------------------------------------------------------------------
// Element-level sets

/// I(G): elements of order exactly 2.
inline ElementSet involutions(const GroupTable& g) {
  ElementSet s(g.order());
  for (Element x = 0; x < g.order(); ++x)
    if (g.element_order(x) == 2) s.insert(x);
  return s;
}

/// O(G): elements of odd order (includes the identity).
inline ElementSet odd_order_elements(const GroupTable& g) {
  ElementSet s(g.order());
  for (Element x = 0; x < g.order(); ++x)
    if (g.element_order(x) % 2 == 1) s.insert(x);
  return s;
}

/// T = {x : x^2 = 1} = I(G) plus the identity.
inline ElementSet square_roots_of_identity(const GroupTable& g) {
  ElementSet s(g.order());
  for (Element x = 0; x < g.order(); ++x)
    if (g.element_order(x) <= 2) s.insert(x);
  return s;
}

/// Elements commuting with every member of s. Empty s gives all of G.
inline ElementSet centralizer_of_set(const GroupTable& g, const ElementSet& s) {
  ElementSet c = g.all();
  const auto members = s.members();
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y : members) {
      if (!g.commute(x, y)) {
        c.erase(x);
        break;
      }
    }
  }
  return c;
}

/// Smallest subgroup containing `seed`.
inline ElementSet subgroup_closure(const GroupTable& g, const ElementSet& seed) {
  ElementSet h(g.order());
  h.insert(g.identity());
  std::vector<Element> elems{g.identity()};
  std::vector<Element> gens;
  seed.for_each([&](Element s) {
    if (h.contains(s)) return;
    gens.push_back(s);
    // Right multiplication by generators from every known element reaches
    // the whole of <H, s>; finite order makes inverses unnecessary.
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (Element gen : gens) {
        const Element y = g.mul(elems[i], gen);
        if (!h.contains(y)) {
          h.insert(y);
          elems.push_back(y);
        }
      }
    }
  });
  return h;
}

/// True iff the subgroup `h` contains an element whose order is |h|.
inline bool is_cyclic_subgroup(const GroupTable& g, const ElementSet& h) {
  const std::size_t size = h.cardinality();
  bool found = false;
  h.for_each([&](Element x) { found = found || g.element_order(x) == size; });
  return found;
}

inline bool is_abelian(const GroupTable& g) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = a + 1; b < g.order(); ++b)
      if (!g.commute(a, b)) return false;
  return true;
}

inline bool is_cyclic_group(const GroupTable& g) {
  for (Element a = 0; a < g.order(); ++a)
    if (g.element_order(a) == g.order()) return true;
  return false;
}

/// Every non-identity element is an involution (includes the trivial group).
inline bool is_elementary_abelian_2(const GroupTable& g) {
  for (Element a = 0; a < g.order(); ++a)
    if (g.element_order(a) > 2) return false;
  return true;
}

/// |G| = 2^k for some k >= 0.
inline bool is_two_group(const GroupTable& g) { return std::has_single_bit(g.order()); }

/// Lower central series test: G = g_1 >= g_2 = [g_1, G] >= ... reaches {1}.
inline bool is_nilpotent(const GroupTable& g) {
  ElementSet current = g.all();
  while (true) {
    ElementSet commutators(g.order());
    current.for_each([&](Element x) {
      const Element xi = g.inverse(x);
      for (Element y = 0; y < g.order(); ++y) {
        // [x, y] = x^-1 y^-1 x y
        commutators.insert(g.mul(g.mul(xi, g.inverse(y)), g.mul(x, y)));
      }
    });
    ElementSet next = subgroup_closure(g, commutators);
    if (next.cardinality() == 1) return true;
    if (next == current) return false;
    current = std::move(next);
  }
}

/// Every element has prime-power order (order 1 counts).
inline bool is_eppo(const GroupTable& g) {
  for (Element a = 0; a < g.order(); ++a)
    if (!nt::is_prime_power(g.element_order(a))) return false;
  return true;
}

/// Gruenberg-Kegel (prime) graph.
struct GkGraph {
  std::vector<std::uint64_t> primes;                             ///< ascending prime divisors of |G|
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;  ///< p < q, lexicographic
  bool is_null() const noexcept { return edges.empty(); }
};

inline GkGraph gk_graph(const GroupTable& g) {
  GkGraph gk;
  gk.primes = nt::factorize(g.order()).primes();
  for (std::size_t i = 0; i < gk.primes.size(); ++i)
    for (std::size_t j = i + 1; j < gk.primes.size(); ++j) {
      const std::uint64_t pq = gk.primes[i] * gk.primes[j];
      for (Element a = 0; a < g.order(); ++a) {
        if (g.element_order(a) % pq == 0) {
          gk.edges.emplace_back(gk.primes[i], gk.primes[j]);
          break;
        }
      }
    }
  return gk;
}

}  // namespace powmatch
