#include <gtest/gtest.h>

#include "ekr/matrix_groups.hpp"
#include "ekr/module_v.hpp"
#include "ekr/search.hpp"
#include "fixtures.hpp"

using namespace ekr;

TEST(IntegerRank, Bareiss) {
  EXPECT_EQ(integer_rank({{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(integer_rank({{0, 1, 2}, {1, 0, 3}, {1, 1, 5}}), 2u);
  EXPECT_EQ(integer_rank({{2, 0}, {0, 3}}), 2u);
  EXPECT_EQ(integer_rank({}), 0u);
  EXPECT_EQ(integer_rank({{0, 0}, {0, 0}}), 0u);
}

struct SearchCase {
  const char* label;
  GeneratorSet (*make)();
  std::size_t coclique;
  std::optional<std::size_t> clique;  // nullopt: none exists
};

class MaxCoclique : public ::testing::TestWithParam<SearchCase> {};

TEST_P(MaxCoclique, StabiliserCosetsAreMaximum) {
  const SearchCase& c = GetParam();
  test::Enumerated e(c.make());
  MaxCocliqueResult r = max_coclique_exact(e.g, e.stats);
  ASSERT_TRUE(r.complete);
  EXPECT_EQ(r.witness.size(), c.coclique);
  EXPECT_EQ(r.upper_bound, c.coclique);
  EXPECT_TRUE(is_intersecting(e.g, e.g.full_range(), r.witness.elements));
  EXPECT_TRUE(std::is_sorted(r.witness.elements.begin(), r.witness.elements.end()));

  ModuleV v(e.g, e.g.full_range());
  EXPECT_EQ(v.rank(), v.expected_rank());
  CocliqueWitness w = classify_coclique(e.g, e.g.full_range(), r.witness.elements, &v);
  EXPECT_EQ(w.classification, CocliqueClass::stabiliser_coset);
  ASSERT_TRUE(w.coset.has_value());

  CliqueSearchResult k = find_sharply_transitive_clique(e.g, e.stats);
  EXPECT_TRUE(k.complete);
  if (c.clique) {
    ASSERT_TRUE(k.clique.has_value());
    EXPECT_EQ(k.clique->size(), *c.clique);
    EXPECT_EQ(intersection_size(*k.clique, r.witness.elements), 1u);
  } else {
    EXPECT_FALSE(k.clique.has_value());
  }
}

INSTANTIATE_TEST_SUITE_P(
    SmallGroups, MaxCoclique,
    ::testing::Values(SearchCase{"S3", [] { return symmetric_generators(3); }, 2, 3},
                      SearchCase{"S4", [] { return symmetric_generators(4); }, 6, 4},
                      SearchCase{"A5", [] { return alternating_generators(5); }, 12, 5},
                      SearchCase{"S5", [] { return symmetric_generators(5); }, 24, 5},
                      SearchCase{"PSL2_4", [] { return psl_generators(2, 4); }, 12, 5},
                      SearchCase{"PSL2_5", [] { return psl_generators(2, 5); }, 10, std::nullopt},
                      SearchCase{"PSL2_7", [] { return psl_generators(2, 7); }, 21, 8}),
    [](const auto& info) { return std::string(info.param.label); });

TEST(Coclique, LexicographicallyLeastWitness) {
  test::Enumerated s3(symmetric_generators(3));
  MaxCocliqueResult r = max_coclique_exact(s3.g, s3.stats);
  ASSERT_EQ(r.witness.size(), 2u);
  EXPECT_EQ(r.witness.elements[0], 0u);  // the identity is in the least witness
  for (const auto& other : {point_stabilizer(s3.g, 0), point_stabilizer(s3.g, 1), point_stabilizer(s3.g, 2)})
    EXPECT_LE(r.witness.elements, other);
}

TEST(Coclique, OrderLimitAndBudget) {
  test::Enumerated s6(symmetric_generators(6));
  EXPECT_THROW(max_coclique_exact(s6.g, s6.stats, SearchBudget{1000, 400}), std::invalid_argument);
  test::Enumerated a5(alternating_generators(5));
  MaxCocliqueResult r = max_coclique_exact(a5.g, a5.stats, SearchBudget{3, 400});
  EXPECT_FALSE(r.complete);
  EXPECT_GE(r.upper_bound, 12u);
  EXPECT_GE(r.witness.size(), 12u);  // the stabiliser incumbent survives
}

TEST(Coclique, ClassificationLabels) {
  test::Enumerated s4(symmetric_generators(4));
  ModuleV v(s4.g, s4.g.full_range());
  std::vector<ElementId> coset = coset_mapping(s4.g, 1, 2);
  CocliqueWitness w = classify_coclique(s4.g, s4.g.full_range(), coset, &v);
  EXPECT_EQ(w.classification, CocliqueClass::stabiliser_coset);
  EXPECT_EQ(*w.coset, (std::pair<std::size_t, std::size_t>{1, 2}));

  // Two elements of a coset: intersecting, in no coset of full size, but in V
  // only if the indicator is; a pair generally is not.
  std::vector<ElementId> pair{coset[0], coset[1]};
  CocliqueWitness p = classify_coclique(s4.g, s4.g.full_range(), pair, &v);
  EXPECT_NE(p.classification, CocliqueClass::stabiliser_coset);
  CocliqueWitness no_v = classify_coclique(s4.g, s4.g.full_range(), pair, nullptr);
  EXPECT_EQ(no_v.classification, CocliqueClass::other);

  std::vector<ElementId> non_intersecting;
  for (ElementId x = 0; x < s4.g.order(); ++x)
    if (s4.g.fixed_points(x, s4.g.full_range()) == 0) {
      non_intersecting = {0, x};
      break;
    }
  EXPECT_FALSE(is_intersecting(s4.g, s4.g.full_range(), non_intersecting));
  EXPECT_THROW(classify_coclique(s4.g, s4.g.full_range(), non_intersecting, &v), std::invalid_argument);
}

TEST(ModuleV, SpanContainsCosetUnions) {
  test::Enumerated a5(alternating_generators(5));
  ModuleV v(a5.g, a5.g.full_range());
  EXPECT_EQ(v.rank(), 17u);
  // A union of two disjoint cosets lies in V; a single element does not.
  std::vector<ElementId> u = coset_mapping(a5.g, 0, 0);
  for (ElementId x : coset_mapping(a5.g, 0, 1)) u.push_back(x);
  std::sort(u.begin(), u.end());
  EXPECT_TRUE(v.contains(u));
  EXPECT_FALSE(v.contains({0}));
  EXPECT_THROW(ModuleV(a5.g, a5.g.full_range(), 10), std::invalid_argument);
}

TEST(Clique, RegularSubgroupFoundFirst) {
  test::Enumerated e(psl_generators(2, 7));
  CliqueSearchResult k = find_sharply_transitive_clique(e.g, e.stats);
  ASSERT_TRUE(k.clique.has_value());
  EXPECT_TRUE(k.from_subgroup);
  const auto& c = *k.clique;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) EXPECT_FALSE(intersecting_pair(e.g, e.g.full_range(), c[i], c[j]));
}
