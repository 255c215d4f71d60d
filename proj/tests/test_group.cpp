#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "powmatch/powmatch.hpp"
#include "test_support.hpp"

using namespace powmatch;
using powmatch::testing::frozen_stats;

namespace {

std::vector<Element> table_of(const GroupTable& g) { return {g.table().begin(), g.table().end()}; }

}  // namespace

TEST(ElementSet, BasicOperations) {
  ElementSet a(130, {0, 64, 129});
  EXPECT_EQ(a.cardinality(), 3U);
  EXPECT_TRUE(a.contains(64));
  EXPECT_FALSE(a.contains(63));
  EXPECT_EQ(a.next(1), 64U);
  EXPECT_EQ(a.next(130), ElementSet::npos);
  const ElementSet full = ElementSet::full(130);
  EXPECT_EQ(full.cardinality(), 130U);
  EXPECT_EQ((full - a).cardinality(), 127U);
  EXPECT_TRUE(a.is_subset_of(full));
  EXPECT_EQ(a.complement().cardinality(), 127U);
  EXPECT_EQ((a & ElementSet(130, {64})).members(), (std::vector<Element>{64}));
}

TEST(FromTable, CyclicThree) {
  const auto g = GroupTable::from_table(3, {0, 1, 2, 1, 2, 0, 2, 0, 1});
  EXPECT_EQ(g.order(), 3U);
  EXPECT_EQ(g.identity(), 0U);
  EXPECT_EQ(g.inverse(1), 2U);
  EXPECT_EQ(g.element_order(1), 3U);
  EXPECT_EQ(g.cyclic_subgroup(1).cardinality(), 3U);
}

TEST(FromTable, IdentityNeedNotBeIndexZero) {
  // Z/2 with identity at index 1.
  const auto g = GroupTable::from_table(2, {1, 0, 0, 1});
  EXPECT_EQ(g.identity(), 1U);
  EXPECT_EQ(g.element_order(0), 2U);
}

TEST(FromTable, RejectsMalformedTables) {
  EXPECT_THROW(GroupTable::from_table(0, {}), ValidationError);
  EXPECT_THROW(GroupTable::from_table(2, {0, 1, 1}), ValidationError);
  EXPECT_THROW(GroupTable::from_table(2, {0, 1, 1, 2}), ValidationError);
  // No identity.
  EXPECT_THROW(GroupTable::from_table(2, {1, 1, 1, 1}), ValidationError);
  // Identity 0, but 1*1 = 1 so 1 has no inverse.
  try {
    GroupTable::from_table(2, {0, 1, 1, 1});
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("element 1 has no inverse"), std::string::npos);
  }
  // A Latin square with identity that is not associative (order 5 loop).
  const std::vector<Element> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  try {
    GroupTable::from_table(5, loop);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("associativity fails"), std::string::npos);
  }
  EXPECT_NO_THROW(GroupTable::from_table(5, loop, {}, Validation::trusted));
  EXPECT_THROW(GroupTable::from_table(9, table_of(make_cyclic(9)), {}, Validation::full, 8), SizeError);
}

TEST(Constructors, Orders) {
  EXPECT_EQ(make_cyclic(1).order(), 1U);
  EXPECT_EQ(make_dihedral(5).order(), 10U);
  EXPECT_EQ(make_dicyclic(3).order(), 12U);
  EXPECT_EQ(make_elementary_abelian_2(4).order(), 16U);
  EXPECT_EQ(make_symmetric(4).order(), 24U);
  EXPECT_EQ(direct_product(make_cyclic(3), make_dihedral(4)).order(), 24U);
  EXPECT_THROW(make_dihedral(2), DomainError);
  EXPECT_THROW(make_dicyclic(1), DomainError);
  EXPECT_THROW(make_symmetric(0), DomainError);
  EXPECT_THROW(make_cyclic(6000), SizeError);
}

TEST(Constructors, TablesAreGroups) {
  // Re-validate each constructor's output with the full associativity check.
  const std::vector<GroupTable> groups = {
      make_cyclic(10),      make_dihedral(6),     make_dicyclic(4),
      make_symmetric(4),    make_elementary_abelian_2(3),
      direct_product(make_dihedral(3), make_cyclic(4)),
      from_permutation_generators({Permutation::parse_cycles("(1 2 3 4 5)"), Permutation::parse_cycles("(1 2)")}),
  };
  for (const auto& g : groups) {
    EXPECT_NO_THROW(GroupTable::from_table(g.order(), table_of(g), g.labels(), Validation::full));
    EXPECT_EQ(g.identity(), 0U);
  }
}

TEST(Constructors, ElementLabels) {
  const auto c = make_cyclic(4);
  EXPECT_EQ(c.label(0), "1");
  EXPECT_EQ(c.element_order(1), 4U);
  const auto q = make_dicyclic(2);
  EXPECT_EQ(involutions(q).cardinality(), 1U);
}

TEST(Permutations, ParseAndPrint) {
  const auto p = Permutation::parse_cycles("(1 2 3)(4 5)");
  EXPECT_EQ(p.cycle_string(), "(1 2 3)(4 5)");
  EXPECT_EQ(Permutation::parse_cycles("(1,2)").cycle_string(), "(1 2)");
  EXPECT_EQ(Permutation(3).cycle_string(), "()");
  EXPECT_THROW(Permutation::parse_cycles("(1 2"), ParseError);
  EXPECT_THROW(Permutation::parse_cycles("1 2)"), ParseError);
  EXPECT_THROW(Permutation::parse_cycles("(1 a)"), ParseError);
  // Left-to-right products: (1 2) then (2 3) sends 1 -> 2 -> 3.
  const auto q = Permutation::parse_cycles("(1 2)") * Permutation::parse_cycles("(2 3)");
  EXPECT_EQ(q(0), 2U);
}

TEST(Permutations, GeneratedGroups) {
  const auto a4 =
      from_permutation_generators({Permutation::parse_cycles("(1 2 3)"), Permutation::parse_cycles("(1 2)(3 4)")});
  EXPECT_EQ(a4.order(), 12U);
  EXPECT_EQ(involutions(a4).cardinality(), 3U);
  const auto s4 =
      from_permutation_generators({Permutation::parse_cycles("(1 2 3 4)"), Permutation::parse_cycles("(1 2)")});
  EXPECT_EQ(s4.order_spectrum(), make_symmetric(4).order_spectrum());
  EXPECT_EQ(from_permutation_generators({}).order(), 1U);
}

TEST(GroupPredicates, FrozenCounts) {
  for (const auto& s : frozen_stats()) {
    const GroupTable g = s.build();
    SCOPED_TRACE(s.name);
    EXPECT_EQ(g.order(), s.order);
    EXPECT_EQ(involutions(g).cardinality(), s.n_inv);
    EXPECT_EQ(odd_order_elements(g).cardinality(), s.n_odd);
    const ElementSet inv = involutions(g);
    EXPECT_EQ((centralizer_of_set(g, inv) & odd_order_elements(g)).cardinality(), s.n_central_odd);
  }
}

TEST(GroupPredicates, OrderSpectrumOfS4) {
  const auto spec = make_symmetric(4).order_spectrum();
  std::vector<std::uint32_t> expected(1, 1);
  expected.insert(expected.end(), 9, 2);
  expected.insert(expected.end(), 8, 3);
  expected.insert(expected.end(), 6, 4);
  EXPECT_EQ(spec, expected);
}

TEST(GroupPredicates, Structure) {
  EXPECT_TRUE(is_abelian(make_cyclic(6)));
  EXPECT_FALSE(is_abelian(make_dihedral(3)));
  EXPECT_TRUE(is_cyclic_group(direct_product(make_cyclic(2), make_cyclic(3))));
  EXPECT_FALSE(is_cyclic_group(powmatch::testing::klein()));
  EXPECT_TRUE(is_elementary_abelian_2(make_elementary_abelian_2(3)));
  EXPECT_FALSE(is_elementary_abelian_2(make_cyclic(4)));
  EXPECT_TRUE(is_two_group(make_dicyclic(4)));
  EXPECT_FALSE(is_two_group(make_dihedral(3)));

  EXPECT_TRUE(is_nilpotent(make_dihedral(4)));
  EXPECT_TRUE(is_nilpotent(direct_product(make_dicyclic(2), make_cyclic(3))));
  EXPECT_FALSE(is_nilpotent(make_dihedral(3)));
  EXPECT_FALSE(is_nilpotent(make_symmetric(4)));
  EXPECT_FALSE(is_nilpotent(make_dicyclic(3)));

  EXPECT_TRUE(is_eppo(make_symmetric(4)));
  EXPECT_FALSE(is_eppo(make_cyclic(6)));
  EXPECT_TRUE(is_eppo(make_cyclic(1)));
}

TEST(GroupPredicates, SubgroupClosure) {
  const auto s4 = make_symmetric(4);
  const ElementSet all = subgroup_closure(s4, ElementSet(s4.order(), {1}));
  EXPECT_EQ(all.cardinality(), 2U);
  EXPECT_TRUE(is_cyclic_subgroup(s4, s4.cyclic_subgroup(5)));
  EXPECT_FALSE(is_cyclic_subgroup(s4, s4.all()));
  EXPECT_EQ(subgroup_closure(s4, s4.empty_set()).cardinality(), 1U);
}

TEST(GroupPredicates, GkGraph) {
  const auto c6 = gk_graph(make_cyclic(6));
  EXPECT_EQ(c6.primes, (std::vector<std::uint64_t>{2, 3}));
  ASSERT_EQ(c6.edges.size(), 1U);
  EXPECT_FALSE(c6.is_null());
  EXPECT_TRUE(gk_graph(make_symmetric(4)).is_null());
  EXPECT_TRUE(gk_graph(make_cyclic(1)).is_null());
}

TEST(GroupIo, RoundTrip) {
  const auto g = make_dihedral(4);
  const std::string doc = group_document(g);
  const auto back = parse_group(doc);
  EXPECT_EQ(table_of(back), table_of(g));
  EXPECT_EQ(back.labels(), g.labels());
  EXPECT_EQ(group_document(back), doc);
}

TEST(GroupIo, FlatTableAndErrors) {
  EXPECT_EQ(parse_group(R"({"order": 2, "mul": [0, 1, 1, 0]})").order(), 2U);
  EXPECT_THROW(parse_group("not json"), ParseError);
  EXPECT_THROW(parse_group(R"({"mul": [[0]]})"), ParseError);
  EXPECT_THROW(parse_group(R"({"order": 2, "mul": [[0, 1], [1]]})"), ParseError);
  EXPECT_THROW(parse_group(R"({"order": 2, "mul": [[0, 1], [1, 5]]})"), ValidationError);
  EXPECT_THROW(parse_group(R"({"order": 2, "mul": [[0, 1], [1, 1]]})"), ValidationError);
  EXPECT_THROW(parse_group(R"({"order": 2, "mul": [[0, 1], [1, 0]], "labels": [1, 2]})"), ParseError);
  EXPECT_THROW(parse_group(R"({"order": 9000, "mul": []})"), SizeError);
}

TEST(Catalog, ContentsAndTags) {
  const auto cat8 = default_catalog(8);
  std::vector<std::string> names;
  for (const auto& e : cat8) names.push_back(e.name);
  for (const char* want : {"C1", "C8", "C2^1", "C2^3", "Q8", "D3", "D4", "S3", "C2xC4"})
    EXPECT_NE(std::find(names.begin(), names.end(), want), names.end()) << want;
  for (const auto& e : cat8) EXPECT_LE(e.group.order(), 8U);

  const auto cat1 = default_catalog(1);
  ASSERT_EQ(cat1.size(), 1U);
  EXPECT_EQ(cat1[0].name, "C1");

  const auto cat120 = default_catalog(120);
  bool s3c7 = false, s4 = false;
  for (const auto& e : cat120) {
    s3c7 = s3c7 || (e.name == "S3xC7" && e.group.order() == 42);
    s4 = s4 || (e.name == "S4" && e.group.order() == 24);
    EXPECT_EQ(e.has(Tag::nilpotent), is_nilpotent(e.group)) << e.name;
    EXPECT_EQ(e.has(Tag::odd_order), e.group.order() % 2 == 1) << e.name;
    EXPECT_EQ(e.has(Tag::cyclic), is_cyclic_group(e.group)) << e.name;
  }
  EXPECT_TRUE(s3c7);
  EXPECT_TRUE(s4);
}
