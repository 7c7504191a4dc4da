#include <gtest/gtest.h>

#include "ekr/bounds.hpp"
#include "ekr/chartab.hpp"
#include "ekr/matrix_groups.hpp"
#include "ekr/subset_search.hpp"
#include "ekr/symplectic.hpp"
#include "fixtures.hpp"

using namespace ekr;
using ekr::test::q;

TEST(RatioBound, ClosedForm) {
  EXPECT_EQ(ratio_bound(q(2), q(-1), 6), 2);
  EXPECT_EQ(ratio_bound(q(12544), q(-196), 29120), 448);
  EXPECT_EQ(ratio_bound(q(63), q(-9), 168), 21);
  EXPECT_THROW(ratio_bound(q(2), q(0), 6), std::invalid_argument);
  EXPECT_THROW(ratio_bound(q(0), q(-1), 6), std::invalid_argument);
  Enclosure e = ratio_bound(Enclosure::point(q(2)), Enclosure{q(-11, 10), q(-9, 10)}, 6);
  EXPECT_TRUE(e.contains(2));
  EXPECT_FALSE(e.is_point());
}

TEST(RatioBound, InvariantUnderWeightScaling) {
  test::Enumerated s5(symmetric_generators(5));
  const auto unit = WeightVector::unit(s5.stats);
  std::vector<Rational> five(unit.values.size(), q(5));
  const auto scaled = WeightVector::from_values(s5.stats, five);
  Enclosure a = weighted_ratio_bound(spectrum(s5.algebra, s5.stats, unit));
  Enclosure b = weighted_ratio_bound(spectrum(s5.algebra, s5.stats, scaled));
  ASSERT_TRUE(a.is_point());
  EXPECT_EQ(a.lo, b.lo);
  EXPECT_EQ(a.hi, b.hi);
}

TEST(RatioBound, DegenerateSpectrumRejected) {
  test::Enumerated s3(symmetric_generators(3));
  EXPECT_THROW(weighted_ratio_bound(spectrum(s3.algebra, s3.stats, WeightVector::zero(s3.stats))),
               std::invalid_argument);
}

TEST(CliqueCoclique, Quotient) {
  EXPECT_EQ(clique_coclique_bound(168, 8), 21);
  EXPECT_EQ(clique_coclique_bound(6, 4), q(3, 2));
  EXPECT_THROW(clique_coclique_bound(6, 0), std::invalid_argument);
}

TEST(CriticalRhs, Unweighted) {
  CriticalRhs r = critical_degree_rhs(8, 168, 63);
  EXPECT_EQ(r.radicand, q(2, 3));
  EXPECT_FALSE(r.negative_radicand);
  EXPECT_GT(r.value.lo, q(5715, 1000));
  EXPECT_LT(r.value.hi, q(5716, 1000));

  CriticalRhs half = critical_degree_rhs(4, 24, 12);
  EXPECT_EQ(half.radicand, 0);
  EXPECT_TRUE(half.value.is_point());
  EXPECT_EQ(half.value.lo, 0);

  CriticalRhs neg = critical_degree_rhs(4, 24, 18);
  EXPECT_TRUE(neg.negative_radicand);
}

TEST(CriticalRhs, WeightedSymplecticTorus) {
  // Sp6(2) on 36 plus-type forms weighted by the class of order 9: 35 sqrt(7).
  SpScheme s = sp_scheme(3, 1);
  Enclosure expected = Enclosure::point(q(35)) * sqrt_enclosure(q(7));
  EXPECT_LE(s.weighted_critical_rhs.lo, expected.hi);
  EXPECT_GE(s.weighted_critical_rhs.hi, expected.lo);
  EXPECT_NEAR(s.weighted_critical_rhs.approx(), 92.60129589, 1e-6);

  // One class of size |G|/9 with weight 1: radicand |G| |C| / |C|^2 - 2 = 7.
  CriticalRhs w = weighted_critical_rhs(36, s.order, {q(1)}, {s.d});
  EXPECT_EQ(w.radicand, 7);
}

TEST(SubgroupReduction, AlternatingInsideSymmetric) {
  GroupTable s5 = GroupTable::enumerate(symmetric_generators(5));
  std::vector<ElementId> even;
  for (ElementId x = 0; x < s5.order(); ++x) {
    const Permutation p = s5.permutation(x);
    // parity from the cycle decomposition
    std::vector<bool> seen(5, false);
    int transpositions = 0;
    for (std::size_t a = 0; a < 5; ++a) {
      if (seen[a]) continue;
      std::size_t len = 0;
      for (std::size_t b = a; !seen[b]; b = p[b]) seen[b] = true, ++len;
      transpositions += static_cast<int>(len) - 1;
    }
    if (transpositions % 2 == 0) even.push_back(x);
  }
  ASSERT_EQ(even.size(), 60u);
  SubgroupReduction r = subgroup_reduction(s5, even, s5.full_range());
  EXPECT_EQ(r.subgroup_bound, 12);
  EXPECT_EQ(r.group_bound, 24);
  EXPECT_EQ(r.degree, 5u);

  std::vector<ElementId> not_closed{0, 1};
  if (s5.multiply(1, 1) == 0) not_closed.push_back(2);
  EXPECT_THROW(subgroup_reduction(s5, not_closed, s5.full_range()), std::invalid_argument);
  std::vector<ElementId> stabiliser = point_stabilizer(s5, 0);
  EXPECT_THROW(subgroup_reduction(s5, stabiliser, s5.full_range()), std::invalid_argument);
}

namespace {

BoundReport unit_verdict(const std::string& label, test::Enumerated& e) {
  const auto w = WeightVector::unit(e.stats);
  return ekr_verdict(summarize(label, e.stats, e.classes, spectrum(e.algebra, e.stats, w), w));
}

}  // namespace

TEST(Verdict, SmallTwoTransitiveGroups) {
  auto m11 = test::enumerate_file("groups/m11_deg11.gens");
  BoundReport r = unit_verdict("M11", *m11);
  EXPECT_EQ(r.verdict, Verdict::certified_with_surrogate);
  EXPECT_EQ(r.target, 720);
  ASSERT_TRUE(r.tau.has_value());
  EXPECT_EQ(r.tau->value(), -276);
  EXPECT_EQ(r.tau_multiplicity, 100);

  auto psl211 = test::enumerate_file("groups/psl2_11_deg11.gens");
  r = unit_verdict("PSL2(11)", *psl211);
  EXPECT_EQ(r.verdict, Verdict::certified_with_surrogate);
  EXPECT_EQ(r.tau->value(), -23);

  auto psl42 = test::enumerate(psl_generators(4, 2));
  r = unit_verdict("PSL4(2)", *psl42);
  EXPECT_EQ(r.verdict, Verdict::certified_with_surrogate);
  EXPECT_EQ(r.tau_multiplicity, 196);
  const BoundEntry* ratio = r.find(BoundKind::ratio);
  ASSERT_NE(ratio, nullptr);
  EXPECT_TRUE(ratio->tight);
}

TEST(Verdict, CliqueWitnessCertifiesAlone) {
  test::Enumerated s4(symmetric_generators(4));
  const auto w = WeightVector::unit(s4.stats);
  const auto summary = summarize("S4", s4.stats, s4.classes, spectrum(s4.algebra, s4.stats, w), w);
  // the regular Klein four-group
  std::vector<ElementId> klein;
  for (ElementId x = 0; x < s4.g.order(); ++x) {
    const Permutation p = s4.g.permutation(x);
    if (p.is_identity() || (p.fixed_points() == 0 && p.order() == 2)) klein.push_back(x);
  }
  ASSERT_EQ(klein.size(), 4u);
  BoundReport r = ekr_verdict(summary, klein);
  const BoundEntry* cc = r.find(BoundKind::clique_coclique);
  ASSERT_NE(cc, nullptr);
  EXPECT_EQ(cc->value.lo, 6);
  EXPECT_TRUE(cc->tight);
  EXPECT_NE(r.verdict, Verdict::inconclusive);
}

TEST(SubsetSearch, UnitsPairInverseClasses) {
  auto g = test::enumerate(psl_generators(3, 2));
  std::vector<std::size_t> der(g->stats.derangement_classes.begin(), g->stats.derangement_classes.end());
  auto units = inverse_pair_units(der, [&](std::size_t c) { return g->classes[static_cast<ClassId>(c)].inverse; });
  ASSERT_EQ(units.size(), 1u);
  EXPECT_EQ(units[0].members.size(), 2u);
}

TEST(SubsetSearch, EnumeratedGroupsCertify) {
  for (auto [label, gens, target] :
       {std::tuple<const char*, GeneratorSet, long>{"Sz(8)", load_group_file(data_path("groups/sz8.gens")), 448},
        {"PSL2(7)", psl_generators(2, 7), 21}}) {
    test::Enumerated e(gens);
    std::vector<std::size_t> der(e.stats.derangement_classes.begin(), e.stats.derangement_classes.end());
    auto units = inverse_pair_units(der, [&](std::size_t c) { return e.classes[static_cast<ClassId>(c)].inverse; });
    SubsetSearchResult r = weight_subset_search(units, q(target), enumerated_bound_oracle(e.algebra, e.stats));
    EXPECT_TRUE(r.certified) << label;
    EXPECT_TRUE(r.bound.is_point()) << label;
    EXPECT_EQ(r.bound.lo, target) << label;
    EXPECT_GE(r.evaluated, 1u);
  }
}

TEST(SubsetSearch, HigmanSimsSingleClassCertifies) {
  CharacterTableFile t = load_chartab(data_path("hs.ctab"));
  std::vector<std::size_t> der = t.derangement_classes();
  auto units = inverse_pair_units(der, [&](std::size_t c) { return t.inverse_class(c); });
  SubsetSearchResult r = weight_subset_search(units, Rational(t.order, static_cast<unsigned long>(t.degree)), chartab_bound_oracle(t));
  ASSERT_TRUE(r.certified);
  ASSERT_EQ(r.support.size(), 1u);
  EXPECT_EQ(t.classes[r.support[0]].name, "8A");
  EXPECT_EQ(t.degree, 176u);
  EXPECT_EQ(r.bound.lo, 252000);
}

TEST(SubsetSearch, TooManyUnitsRejected) {
  std::vector<WeightUnit> units(21);
  for (std::size_t i = 0; i < units.size(); ++i) units[i].members = {i};
  BoundOracle never = [](const std::vector<std::size_t>&) -> std::optional<Enclosure> { return std::nullopt; };
  EXPECT_THROW(weight_subset_search(units, q(1), never), std::invalid_argument);
}
