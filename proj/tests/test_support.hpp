#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "powmatch/powmatch.hpp"

namespace powmatch::testing {

/// Values computed by tests/oracle/freeze_values.py from concrete
/// permutation and matrix realisations of each group. 0 in mu_e / mu_com /
/// enhanced_edges means "not frozen".
struct FrozenStats {
  std::string name;
  std::function<GroupTable()> build;
  std::size_t order, n_inv, n_odd, n_central_odd;
  std::size_t mu_p, mu_e, mu_com;
  std::size_t power_edges, enhanced_edges;
};

inline GroupTable klein() { return make_elementary_abelian_2(2); }

inline const std::vector<FrozenStats>& frozen_stats() {
  static const std::vector<FrozenStats> table = {
      {"C4", [] { return make_cyclic(4); }, 4, 1, 1, 1, 2, 2, 2, 6, 6},
      {"C5", [] { return make_cyclic(5); }, 5, 0, 5, 5, 2, 2, 2, 10, 10},
      {"C6", [] { return make_cyclic(6); }, 6, 1, 3, 3, 3, 3, 3, 13, 15},
      {"C7", [] { return make_cyclic(7); }, 7, 0, 7, 7, 3, 3, 3, 21, 21},
      {"C12", [] { return make_cyclic(12); }, 12, 1, 3, 3, 6, 6, 6, 56, 66},
      {"D3", [] { return make_dihedral(3); }, 6, 3, 3, 1, 2, 2, 2, 6, 6},
      {"S3", [] { return make_symmetric(3); }, 6, 3, 3, 1, 2, 2, 2, 6, 6},
      {"D4", [] { return make_dihedral(4); }, 8, 5, 1, 1, 2, 2, 4, 10, 10},
      {"D5", [] { return make_dihedral(5); }, 10, 5, 5, 1, 3, 3, 3, 15, 15},
      {"Q8", [] { return make_dicyclic(2); }, 8, 1, 1, 1, 4, 4, 4, 16, 16},
      {"Dic3", [] { return make_dicyclic(3); }, 12, 1, 3, 3, 6, 6, 6, 28, 30},
      {"Q16", [] { return make_dicyclic(4); }, 16, 1, 1, 1, 8, 8, 8, 48, 48},
      {"S4", [] { return make_symmetric(4); }, 24, 9, 9, 1, 8, 8, 12, 36, 36},
      {"C2xC4", [] { return direct_product(make_cyclic(2), make_cyclic(4)); }, 8, 3, 1, 1, 3, 3, 4, 13, 13},
      {"C2xC2", [] { return klein(); }, 4, 3, 1, 1, 1, 1, 2, 3, 3},
      {"Q8xC3", [] { return direct_product(make_dicyclic(2), make_cyclic(3)); }, 24, 1, 3, 3, 12, 12, 12, 142, 168},
      {"S3xC5", [] { return direct_product(make_symmetric(3), make_cyclic(5)); }, 30, 3, 15, 5, 15, 15, 15, 190, 210},
      {"C2xC2xC3", [] { return direct_product(klein(), make_cyclic(3)); }, 12, 3, 3, 3, 6, 6, 6, 33, 39},
      {"C2^3xC7", [] { return direct_product(make_elementary_abelian_2(3), make_cyclic(7)); }, 56, 7, 7, 7, 28, 0, 0, 469, 0},
      {"C2xC4xC3", [] { return direct_product(direct_product(make_cyclic(2), make_cyclic(4)), make_cyclic(3)); }, 24, 3, 3, 3, 12, 12, 12, 119, 141},
      {"C3xC9", [] { return direct_product(make_cyclic(3), make_cyclic(9)); }, 27, 0, 27, 27, 13, 13, 13, 111, 111},
  };
  return table;
}

/// Erdos-Renyi graph from a seeded engine.
template <class Rng>
SimpleGraph random_graph(Rng& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  SimpleGraph g(n);
  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

/// Every group of order <= 12 realisable by the constructors (one per
/// isomorphism class).
inline std::vector<std::pair<std::string, GroupTable>> groups_up_to_12() {
  std::vector<std::pair<std::string, GroupTable>> out;
  for (std::size_t n = 1; n <= 12; ++n) out.emplace_back("C" + std::to_string(n), make_cyclic(n));
  out.emplace_back("C2xC2", klein());
  out.emplace_back("C2xC4", direct_product(make_cyclic(2), make_cyclic(4)));
  out.emplace_back("C2^3", make_elementary_abelian_2(3));
  out.emplace_back("C3xC3", direct_product(make_cyclic(3), make_cyclic(3)));
  out.emplace_back("C2xC6", direct_product(make_cyclic(2), make_cyclic(6)));
  for (std::size_t n = 3; n <= 6; ++n) out.emplace_back("D" + std::to_string(n), make_dihedral(n));
  out.emplace_back("Q8", make_dicyclic(2));
  out.emplace_back("Dic3", make_dicyclic(3));
  out.emplace_back("A4", from_permutation_generators(
                             {Permutation::parse_cycles("(1 2 3)"), Permutation::parse_cycles("(1 2)(3 4)")}));
  return out;
}

}  // namespace powmatch::testing
