#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "powmatch/error.hpp"
#include "powmatch/graph.hpp"

namespace powmatch::nt {

inline constexpr std::size_t kDefaultIndependenceGuard = 64;

/// Exact independence number by branch and bound over 64-bit vertex masks.
inline std::size_t independence_number_small(const SimpleGraph& graph,
                                             std::size_t guard = kDefaultIndependenceGuard) {
  const std::size_t n = graph.vertex_count();
  if (n > guard || n > 64)
    throw SizeError("independence_number_small: " + std::to_string(n) + " vertices exceed guard " +
                    std::to_string(std::min<std::size_t>(guard, 64)));
  std::vector<std::uint64_t> nb(n, 0);
  for (Element v = 0; v < n; ++v)
    graph.neighbors(v).for_each([&](Element w) { nb[v] |= std::uint64_t{1} << w; });

  std::size_t best = 0;
  auto search = [&](auto&& self, std::uint64_t live, std::size_t taken) -> void {
    // Vertices of degree <= 1 within `live` can always be taken.
    bool changed = true;
    while (changed && live != 0) {
      changed = false;
      for (std::uint64_t it = live; it != 0; it &= it - 1) {
        const int v = std::countr_zero(it);
        if (std::popcount(nb[v] & live) <= 1) {
          live &= ~(nb[v] | (std::uint64_t{1} << v));
          ++taken;
          changed = true;
          break;
        }
      }
    }
    if (live == 0) {
      best = std::max(best, taken);
      return;
    }
    if (taken + static_cast<std::size_t>(std::popcount(live)) <= best) return;
    int pivot = -1, pivot_deg = -1;
    for (std::uint64_t it = live; it != 0; it &= it - 1) {
      const int v = std::countr_zero(it);
      const int d = std::popcount(nb[v] & live);
      if (d > pivot_deg) {
        pivot = v;
        pivot_deg = d;
      }
    }
    const std::uint64_t bit = std::uint64_t{1} << pivot;
    self(self, live & ~(nb[pivot] | bit), taken + 1);
    self(self, live & ~bit, taken);
  };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  search(search, all, 0);
  return best;
}

}  // namespace powmatch::nt
