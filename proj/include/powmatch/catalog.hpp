#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "powmatch/constructors.hpp"
#include "powmatch/group.hpp"

namespace powmatch {

/// Structural flags. dihedral, dicyclic and product record how the entry was
/// built; the others are computed from the table.
enum class Tag { cyclic, dihedral, dicyclic, elementary_abelian_2, nilpotent, odd_order, two_group, product };

inline const char* to_string(Tag t) {
  switch (t) {
    case Tag::cyclic: return "cyclic";
    case Tag::dihedral: return "dihedral";
    case Tag::dicyclic: return "dicyclic";
    case Tag::elementary_abelian_2: return "elementary-abelian-2";
    case Tag::nilpotent: return "nilpotent";
    case Tag::odd_order: return "odd-order";
    case Tag::two_group: return "two-group";
    case Tag::product: return "product";
  }
  return "?";
}

struct CatalogEntry {
  std::string name;
  GroupTable group;
  std::set<Tag> tags;

  bool has(Tag t) const { return tags.count(t) != 0; }
};

/// Tags derivable from the table alone.
inline std::set<Tag> computed_tags(const GroupTable& g) {
  std::set<Tag> tags;
  if (is_cyclic_group(g)) tags.insert(Tag::cyclic);
  if (is_elementary_abelian_2(g)) tags.insert(Tag::elementary_abelian_2);
  if (is_nilpotent(g)) tags.insert(Tag::nilpotent);
  if (g.order() % 2 == 1) tags.insert(Tag::odd_order);
  if (is_two_group(g)) tags.insert(Tag::two_group);
  return tags;
}

inline CatalogEntry make_entry(std::string name, GroupTable g, std::set<Tag> construction = {}) {
  auto tags = computed_tags(g);
  tags.insert(construction.begin(), construction.end());
  return CatalogEntry{std::move(name), std::move(g), std::move(tags)};
}

namespace detail {

/// SL(2,3) acting on the eight non-zero vectors of F_3^2.
inline GroupTable make_sl23(std::size_t cap) {
  std::vector<std::pair<int, int>> vecs;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a || b) vecs.emplace_back(a, b);
  auto act = [&](int m00, int m01, int m10, int m11) {
    std::vector<std::uint32_t> images(vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      const auto [a, b] = vecs[i];
      const std::pair<int, int> img{((m00 * a + m01 * b) % 3 + 3) % 3, ((m10 * a + m11 * b) % 3 + 3) % 3};
      images[i] = static_cast<std::uint32_t>(std::find(vecs.begin(), vecs.end(), img) - vecs.begin());
    }
    return Permutation(std::move(images));
  };
  return from_permutation_generators({act(1, 1, 0, 1), act(0, -1, 1, 0)}, cap);
}

inline GroupTable perm_group(std::initializer_list<const char*> gens, std::size_t cap) {
  std::vector<Permutation> ps;
  for (const char* s : gens) ps.push_back(Permutation::parse_cycles(s));
  return from_permutation_generators(ps, cap);
}

}  // namespace detail

/// Deterministic test catalog restricted to groups of order <= cap.
///
/// Contents, in order: C_1..C_32, D_3..D_12, dicyclic Q_{4m} for m = 2..6,
/// (C_2)^k for k = 1..5, abelian and nilpotent products, S_3, S_4, A_4 and a
/// few non-nilpotent groups up to S_5.
inline std::vector<CatalogEntry> default_catalog(std::size_t cap) {
  struct Spec {
    std::string name;
    std::size_t order;
    std::set<Tag> construction;
    std::function<GroupTable()> build;
  };
  std::vector<Spec> specs;
  for (std::size_t n = 1; n <= 32; ++n)
    specs.push_back({"C" + std::to_string(n), n, {}, [n, cap] { return make_cyclic(n, cap); }});
  for (std::size_t n = 3; n <= 12; ++n)
    specs.push_back({"D" + std::to_string(n), 2 * n, {Tag::dihedral}, [n, cap] { return make_dihedral(n, cap); }});
  for (std::size_t m = 2; m <= 6; ++m) {
    const std::string name = m == 2 ? "Q8" : m == 4 ? "Q16" : "Dic" + std::to_string(m);
    specs.push_back({name, 4 * m, {Tag::dicyclic}, [m, cap] { return make_dicyclic(m, cap); }});
  }
  for (std::size_t k = 1; k <= 5; ++k)
    specs.push_back({"C2^" + std::to_string(k), std::size_t{1} << k, {},
                     [k, cap] { return make_elementary_abelian_2(k, cap); }});

  auto prod = [cap](std::function<GroupTable()> a, std::function<GroupTable()> b) {
    return [=] { return direct_product(a(), b(), cap); };
  };
  auto cyc = [cap](std::size_t n) { return [=] { return make_cyclic(n, cap); }; };
  const std::set<Tag> p{Tag::product};
  specs.push_back({"C2xC4", 8, p, prod(cyc(2), cyc(4))});
  specs.push_back({"C2xC8", 16, p, prod(cyc(2), cyc(8))});
  specs.push_back({"C4xC4", 16, p, prod(cyc(4), cyc(4))});
  specs.push_back({"C2xC2xC3", 12, p, prod(prod(cyc(2), cyc(2)), cyc(3))});
  specs.push_back({"Q8xC3", 24, p, prod([cap] { return make_dicyclic(2, cap); }, cyc(3))});
  specs.push_back({"S3", 6, {}, [cap] { return make_symmetric(3, cap); }});
  specs.push_back({"S4", 24, {}, [cap] { return make_symmetric(4, cap); }});
  specs.push_back({"A4", 12, {}, [cap] { return detail::perm_group({"(1 2 3)", "(1 2)(3 4)"}, cap); }});
  specs.push_back({"S3xC5", 30, p, prod([cap] { return make_symmetric(3, cap); }, cyc(5))});
  specs.push_back({"S3xC7", 42, p, prod([cap] { return make_symmetric(3, cap); }, cyc(7))});
  specs.push_back({"C9xC2", 18, p, prod(cyc(9), cyc(2))});
  specs.push_back({"C3xC9", 27, p, prod(cyc(3), cyc(9))});
  specs.push_back({"C3xC3", 9, p, prod(cyc(3), cyc(3))});
  specs.push_back({"F20", 20, {}, [cap] { return detail::perm_group({"(1 2 3 4 5)", "(2 3 5 4)"}, cap); }});
  specs.push_back({"SL(2,3)", 24, {}, [cap] { return detail::make_sl23(cap); }});
  specs.push_back({"D5xC3", 30, p, prod([cap] { return make_dihedral(5, cap); }, cyc(3))});
  specs.push_back({"C2xS4", 48, p, prod(cyc(2), [cap] { return make_symmetric(4, cap); })});
  specs.push_back({"A5", 60, {}, [cap] { return detail::perm_group({"(1 2 3 4 5)", "(1 2 3)"}, cap); }});
  specs.push_back({"S5", 120, {}, [cap] { return detail::perm_group({"(1 2 3 4 5)", "(1 2)"}, cap); }});

  std::vector<CatalogEntry> out;
  for (auto& s : specs)
    if (s.order <= cap) out.push_back(make_entry(s.name, s.build(), s.construction));
  return out;
}

}  // namespace powmatch
