#include <gtest/gtest.h>

#include "ekr/matrix_groups.hpp"
#include "fixtures.hpp"

using namespace ekr;

TEST(Permutation, ParseCycles) {
  Permutation p = parse_cycles("(1,2)(3,4,5)", 5);
  EXPECT_EQ(p[0], 1);
  EXPECT_EQ(p[1], 0);
  EXPECT_EQ(p[2], 3);
  EXPECT_EQ(p[4], 2);
  EXPECT_EQ(p.order(), 6u);
  EXPECT_EQ(p.fixed_points(), 0u);
  EXPECT_EQ(p.cycle_string(), "(1,2)(3,4,5)");
  EXPECT_TRUE(parse_cycles("()", 4).is_identity());
  EXPECT_TRUE(parse_cycles("", 4).is_identity());
  EXPECT_EQ(parse_cycles("( 1, 3 )", 3), parse_cycles("(1,3)", 3));
}

TEST(Permutation, RejectsMalformedCycles) {
  EXPECT_THROW(parse_cycles("(1,2", 3), DataError);
  EXPECT_THROW(parse_cycles("(1,4)", 3), DataError);
  EXPECT_THROW(parse_cycles("(1,2)(2,3)", 3), DataError);
  EXPECT_THROW(parse_cycles("(0,1)", 3), DataError);
  EXPECT_THROW(Permutation::from_images({0, 0, 1}), DataError);
}

TEST(Permutation, RightActionComposition) {
  Permutation g = parse_cycles("(1,2)", 3);
  Permutation h = parse_cycles("(2,3)", 3);
  // apply g then h: 1 -> 2 -> 3
  EXPECT_EQ((g * h)[0], 2);
  EXPECT_EQ((g * h) * (g * h).inverse(), Permutation::identity(3));
}

TEST(GeneratorFile, RoundTrip) {
  GeneratorSet gens = load_group_file(data_path("groups/m11_deg11.gens"));
  EXPECT_EQ(gens.degree, 11u);
  GeneratorSet again = parse_generator_file(format_generator_file(gens, "round trip"));
  EXPECT_EQ(again.degree, gens.degree);
  EXPECT_EQ(again.generators, gens.generators);
}

TEST(GeneratorFile, ErrorsCarryLineNumbers) {
  try {
    parse_generator_file("degree 3\n(1,2)\n(1,5)\n");
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_generator_file("(1,2)\n"), DataError);
}

TEST(GroupTable, EmptyGeneratorListIsTrivial) {
  GeneratorSet gens = parse_generator_file("degree 4\n");
  EXPECT_EQ(GroupTable::enumerate(gens).order(), 1u);
}

TEST(GroupTable, CapIsEnforced) {
  EXPECT_THROW(GroupTable::enumerate(symmetric_generators(7), 1000), EnumerationLimitError);
  try {
    GroupTable::enumerate(symmetric_generators(6), 100);
  } catch (const EnumerationLimitError& e) {
    EXPECT_EQ(e.cap(), 100u);
  }
}

TEST(GroupTable, MultiplicationAndInverses) {
  GroupTable g = GroupTable::enumerate(symmetric_generators(4));
  ASSERT_EQ(g.order(), 24u);
  for (ElementId x = 0; x < g.order(); ++x) {
    EXPECT_EQ(g.multiply(x, g.inverse(x)), 0u);
    for (ElementId y = 0; y < g.order(); ++y)
      EXPECT_EQ(g.permutation(g.multiply(x, y)), g.permutation(x) * g.permutation(y));
  }
}

TEST(GroupTable, TransitivityAndStabilisers) {
  GroupTable a5 = GroupTable::enumerate(alternating_generators(5));
  EXPECT_TRUE(is_k_transitive(a5, 1));
  EXPECT_TRUE(is_k_transitive(a5, 2));
  EXPECT_EQ(point_stabilizer(a5, 0).size(), 12u);
  EXPECT_EQ(coset_mapping(a5, 0, 3).size(), 12u);
  GroupTable c = GroupTable::enumerate(parse_generator_file("degree 4\n(1,2)\n"));
  EXPECT_FALSE(is_k_transitive(c, 1));
  GroupTable c4 = GroupTable::enumerate(parse_generator_file("degree 4\n(1,2,3,4)\n"));
  EXPECT_TRUE(is_k_transitive(c4, 1));
  EXPECT_FALSE(is_k_transitive(c4, 2));
}

TEST(Conjugacy, SymmetricGroupOfDegreeThree) {
  test::Enumerated s3(symmetric_generators(3));
  ASSERT_EQ(s3.classes.size(), 3u);
  EXPECT_EQ(s3.classes[0].size, 1u);
  EXPECT_EQ(s3.classes[0].name, "1A");
  EXPECT_EQ(s3.classes[1].size, 2u);
  EXPECT_EQ(s3.classes[1].name, "3A");
  EXPECT_EQ(s3.classes[2].size, 3u);
  EXPECT_EQ(s3.classes[2].name, "2A");
  EXPECT_EQ(s3.stats.derangements, 2u);
  EXPECT_EQ(s3.stats.transitivity, 2);
  EXPECT_EQ(s3.classes.by_name("2A"), 2u);
  EXPECT_THROW(s3.classes.by_name("5A"), std::out_of_range);
}

TEST(Conjugacy, SuzukiAndUnitaryClassCounts) {
  auto sz = test::enumerate_file("groups/sz8.gens");
  EXPECT_EQ(sz->g.order(), 29120u);
  EXPECT_EQ(sz->classes.size(), 11u);
  EXPECT_EQ(sz->stats.derangements, 12544u);
  EXPECT_TRUE(derangement_fraction_check(sz->stats));

  auto u3 = test::enumerate(psu3_generators(3));
  EXPECT_EQ(u3->classes.size(), 14u);
  std::uint64_t total = 0;
  for (const auto& c : u3->classes.classes()) total += c.size;
  EXPECT_EQ(total, 6048u);
}

TEST(Conjugacy, InverseClassesPairUp) {
  auto g = test::enumerate(psl_generators(2, 7));
  EXPECT_EQ(g->stats.derangements, 63u);
  int self_inverse = 0;
  for (ClassId c = 0; c < g->classes.size(); ++c) {
    EXPECT_EQ(g->classes[g->classes[c].inverse].inverse, c);
    self_inverse += g->classes[c].inverse == c;
  }
  EXPECT_EQ(self_inverse, 4);  // 1A 2A 3A 4A; 7A and 7B swap
}

TEST(ActionStats, FixedPointsAndPsi) {
  auto g = test::enumerate(psl_generators(2, 7));
  long total = 0;
  for (ClassId c = 0; c < g->classes.size(); ++c) {
    total += g->stats.fixed_points[c] * static_cast<long>(g->classes[c].size);
    EXPECT_EQ(g->stats.psi[c], g->stats.fixed_points[c] - 1);
  }
  EXPECT_EQ(total, 168);  // Burnside: one orbit
  EXPECT_EQ(g->stats.fixed_points[0], 8);
  for (ClassId c : g->stats.derangement_classes) EXPECT_TRUE(g->stats.is_derangement_class(c));
}
