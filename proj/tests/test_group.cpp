#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "commdeg/error.hpp"
#include "commdeg/group.hpp"
#include "commdeg/group_spec.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace commdeg;

namespace {

std::vector<Element> flat(const std::vector<std::vector<Element>>& rows) {
  std::vector<Element> out;
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::vector<Element> as_vector(std::span<const Element> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST(GroupTable, CayleyTableInvariantsHoldOnCorpus) {
  for (const auto& g : testdata::corpus_tables()) {
    const std::size_t n = g.order();
    for (Element a = 0; a < n; ++a) {
      EXPECT_EQ(g.mul(0, a), a);
      EXPECT_EQ(g.mul(a, 0), a);
      EXPECT_EQ(g.mul(a, g.inv(a)), 0U);
      std::vector<bool> row(n), col(n);
      for (Element b = 0; b < n; ++b) {
        row[g.mul(a, b)] = true;
        col[g.mul(b, a)] = true;
      }
      EXPECT_TRUE(std::all_of(row.begin(), row.end(), [](bool v) { return v; }));
      EXPECT_TRUE(std::all_of(col.begin(), col.end(), [](bool v) { return v; }));
    }
  }
}

TEST(GroupTable, RejectsNonLatinTable) {
  EXPECT_THROW(GroupTable::from_table(2, {0, 1, 1, 1}), Error);
  try {
    GroupTable::from_table(2, {0, 1, 1, 1});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotLatin);
  }
}

TEST(GroupTable, RejectsNonAssociativeLatinSquare) {
  // A Latin square with identity 0 that is a loop but not a group.
  const std::vector<std::vector<Element>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    GroupTable::from_table(5, flat(loop));
    FAIL() << "expected NonAssociative";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonAssociative);
  }
}

TEST(GroupTable, RelabelsIdentityToZero) {
  // Z/3 written with the identity as element 2.
  const std::vector<std::vector<Element>> t{{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  GroupTable g = GroupTable::from_table(3, flat(t), {"a", "b", "e"});
  EXPECT_EQ(g.label(0), "e");
  EXPECT_EQ(g.mul(1, 1), 2U);
  EXPECT_TRUE(g.is_abelian());
}

TEST(GroupTable, PresetOrders) {
  EXPECT_EQ(cyclic_group(4).order(), 4U);
  EXPECT_TRUE(build_preset("cyclic", {{"n", 4}}).is_abelian());
  EXPECT_EQ(dihedral_group(4).order(), 8U);
  EXPECT_EQ(quaternion_group().order(), 8U);
  EXPECT_EQ(symmetric_group(4).order(), 24U);
  EXPECT_EQ(alternating_group(4).order(), 12U);
  EXPECT_EQ(heisenberg_group(3, 1).order(), 27U);
  EXPECT_EQ(heisenberg_group(2, 2).order(), 32U);
  EXPECT_EQ(build_preset("dicyclic", {{"n", 3}}).order(), 12U);
  EXPECT_THROW(build_preset("no-such-group", {}), Error);
  EXPECT_THROW(build_preset("heisenberg-mod", {{"p", 4}}), Error);
}

TEST(GroupTable, OrderCapStopsClosure) {
  try {
    symmetric_group(6, BuildOptions{100});
    FAIL() << "expected OrderCapExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderCapExceeded);
  }
}

TEST(GroupTable, PermutationAndMatrixClosures) {
  EXPECT_EQ(permutation_closure(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}).order(), 24U);
  EXPECT_EQ(matrix_closure(3, 2, {{1, 1, 0, 1}, {0, 2, 1, 0}}).order(), 24U);  // SL(2,3)
  EXPECT_THROW(matrix_closure(3, 2, {{1, 1, 1, 1}}), Error);
}

TEST(Subgroup, CentralizerMatchesOracle) {
  for (const auto& g : testdata::corpus_tables())
    for (Element x = 0; x < g.order(); x += 3) {
      EXPECT_EQ(as_vector(centralizer(g, x).members()), oracle::centralizer(g, x));
      EXPECT_EQ(centralizer_order(g, x), oracle::centralizer(g, x).size());
    }
}

TEST(Subgroup, CenterAndClassesMatchOracle) {
  for (const auto& g : testdata::corpus_tables()) {
    EXPECT_EQ(as_vector(center(g).members()), oracle::center(g));
    const auto classes = conjugacy_classes(g);
    EXPECT_EQ(classes.size(), oracle::class_count(g));
    std::size_t total = 0;
    for (const auto& c : classes) {
      total += c.size();
      EXPECT_EQ(g.order() % c.size(), 0U);
    }
    EXPECT_EQ(total, g.order());
  }
}

TEST(Subgroup, CheckedConstructorRejectsNonSubgroup) {
  const GroupTable g = cyclic_group(6);
  EXPECT_THROW(Subgroup(g, {0, 1}), Error);
  EXPECT_NO_THROW(Subgroup(g, {0, 2, 4}));
  EXPECT_THROW(Subgroup(g, {1, 2}), Error);
}

TEST(Subgroup, CommutatorSubgroups) {
  EXPECT_EQ(commutator_subgroup(symmetric_group(3)).size(), 3U);
  EXPECT_EQ(commutator_subgroup(symmetric_group(4)).size(), 12U);
  EXPECT_EQ(commutator_subgroup(alternating_group(4)).size(), 4U);
  EXPECT_EQ(commutator_subgroup(quaternion_group()).size(), 2U);
  EXPECT_EQ(commutator_subgroup(cyclic_group(9)).size(), 1U);
  for (const auto& g : testdata::corpus_tables()) {
    Subgroup d = commutator_subgroup(g);
    EXPECT_TRUE(oracle::is_normal(g, as_vector(d.members())));
    // The quotient by G' is abelian.
    EXPECT_TRUE(quotient(g, d).group.is_abelian());
  }
}

TEST(Subgroup, CharacteristicAbelianSubgroupOnSmallGroups) {
  EXPECT_EQ(characteristic_abelian_subgroup(quaternion_group()), center(quaternion_group()));
  EXPECT_EQ(characteristic_abelian_subgroup(dihedral_group(4)), center(dihedral_group(4)));
  const GroupTable s3 = symmetric_group(3);
  EXPECT_EQ(characteristic_abelian_subgroup(s3), commutator_subgroup(s3));
}

TEST(Powers, MatchNaiveIteration) {
  for (const auto& g : testdata::corpus_tables())
    for (std::uint64_t k : {0, 1, 2, 3, 5, 12}) {
      auto pm = k ? power_map(g, k) : std::vector<Element>{};
      for (Element x = 0; x < g.order(); ++x) {
        EXPECT_EQ(power(g, x, k), oracle::naive_power(g, x, k));
        if (k) EXPECT_EQ(pm[x], oracle::naive_power(g, x, k));
      }
    }
}

TEST(Powers, ElementOrderAndExponent) {
  EXPECT_EQ(exponent(quaternion_group()), 4U);
  EXPECT_EQ(exponent(symmetric_group(4)), 12U);
  EXPECT_EQ(exponent(heisenberg_group(3, 1)), 3U);
  EXPECT_EQ(exponent(heisenberg_group(2, 1)), 4U);
  const GroupTable z6 = direct_product(cyclic_group(2), cyclic_group(3));
  EXPECT_EQ(exponent(z6), 6U);
  EXPECT_TRUE(z6.is_abelian());
  for (const auto& g : testdata::corpus_tables())
    for (Element x = 0; x < g.order(); ++x) {
      std::uint64_t k = element_order(g, x);
      EXPECT_EQ(oracle::naive_power(g, x, k), 0U);
      EXPECT_EQ(exponent(g) % k, 0U);
    }
}

TEST(Homomorphism, QuotientProjection) {
  const GroupTable q8 = quaternion_group();
  Quotient q = quotient(q8, center(q8));
  EXPECT_EQ(q.group.order(), 4U);
  EXPECT_TRUE(q.group.is_abelian());
  EXPECT_EQ(exponent(q.group), 2U);
  EXPECT_TRUE(q.projection.is_surjective());
  EXPECT_EQ(q.projection.kernel(), center(q8));
}

TEST(Homomorphism, RejectsNonNormalQuotientAndBadMaps) {
  const GroupTable s3 = symmetric_group(3);
  const Element t = 1;
  try {
    quotient(s3, Subgroup::generated_by(s3, {&t, 1}));
    FAIL() << "expected NotNormal";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNormal);
  }
  const GroupTable z4 = cyclic_group(4), z2 = cyclic_group(2);
  EXPECT_NO_THROW(Homomorphism(z4, z2, {0, 1, 0, 1}));
  EXPECT_THROW(Homomorphism(z4, z2, {0, 1, 1, 0}), Error);
  EXPECT_THROW(Homomorphism(z4, z2, {1, 0, 1, 0}), Error);
}

TEST(Products, SemidirectWithTrivialActionIsDirect) {
  const GroupTable a = cyclic_group(4), b = symmetric_group(3);
  std::vector<std::vector<Element>> trivial(b.order(), std::vector<Element>(a.order()));
  for (auto& row : trivial) std::iota(row.begin(), row.end(), 0U);
  EXPECT_EQ(semidirect_product(a, b, trivial), direct_product(a, b));
}

TEST(Products, SemidirectRejectsNonAutomorphism) {
  const GroupTable z4 = cyclic_group(4), z2 = cyclic_group(2);
  try {
    semidirect_product(z4, z2, {{0, 1, 2, 3}, {0, 2, 1, 3}});
    FAIL() << "expected InvalidAction";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidAction);
  }
}

TEST(Products, DihedralIsInversionSemidirect) {
  const GroupTable d = dihedral_group(5);
  EXPECT_EQ(d.order(), 10U);
  EXPECT_EQ(center(d).size(), 1U);
  EXPECT_EQ(conjugacy_classes(d).size(), 4U);
}

TEST(SubgroupTable, RenumbersMembers) {
  const GroupTable s4 = symmetric_group(4);
  GroupTable a = subgroup_table(commutator_subgroup(s4));
  EXPECT_EQ(a.order(), 12U);
  EXPECT_EQ(commutator_subgroup(a).size(), 4U);
}
