#include <gtest/gtest.h>

#include "ekr/chartab.hpp"
#include "fixtures.hpp"

using namespace ekr;
using ekr::test::q;

TEST(QuadraticValue, ParseAndRender) {
  QuadraticValue v = parse_quadratic("-1/2+1/2*sqrt(-7)");
  EXPECT_EQ(v.r, q(-1, 2));
  EXPECT_EQ(v.s, q(1, 2));
  EXPECT_EQ(v.radicand, -7);
  EXPECT_FALSE(v.is_rational());
  EXPECT_EQ(v.conjugate().s, q(-1, 2));
  EXPECT_EQ(to_string(parse_quadratic("sqrt(5)")), "sqrt(5)");
  EXPECT_EQ(to_string(parse_quadratic("-sqrt(5)")), "-sqrt(5)");
  EXPECT_EQ(parse_quadratic("3").r, 3);
  EXPECT_TRUE(parse_quadratic("3").is_rational());
  EXPECT_EQ(parse_quadratic("2*sqrt(12)").s, 4);  // 2 sqrt(12) = 4 sqrt(3)
  EXPECT_EQ(parse_quadratic("2*sqrt(12)").radicand, 3);
  EXPECT_TRUE(parse_quadratic("sqrt(9)").is_rational());
  EXPECT_THROW(parse_quadratic("sqrt("), DataError);
  EXPECT_THROW(parse_quadratic("1+"), DataError);
}

TEST(QuadraticSum, ArithmeticAndOrder) {
  QuadraticSum a(q(1));
  a.add(q(1), 5);
  EXPECT_FALSE(a.is_rational());
  EXPECT_TRUE(a.is_real());
  EXPECT_EQ(a.rational_part(), 1);
  QuadraticSum b(q(3));
  EXPECT_TRUE(less_than(b, a));  // 3 < 1 + sqrt(5)
  EXPECT_FALSE(less_than(a, b));
  EXPECT_FALSE(less_than(a, a));
  QuadraticSum c = a.scaled(q(-1));
  c.add(q(1), 5);
  EXPECT_TRUE(c.is_rational());
  EXPECT_EQ(c.rational_part(), -1);
  Enclosure e = a.enclosure();
  EXPECT_GT(e.lo, q(3236, 1000));
  EXPECT_NEAR(e.approx(), 3.2360679775, 1e-9);
}

TEST(Chartab, SymmetricGroupOfDegreeThree) {
  CharacterTableFile t = load_chartab(data_path("s3.ctab"));
  EXPECT_EQ(t.order, 6);
  EXPECT_EQ(t.degree, 3u);
  EXPECT_EQ(t.derangement_classes(), (std::vector<std::size_t>{2}));
  EXPECT_EQ(t.derangement_count(), 2);
  auto spec = chartab_spectrum(weighted_eigs_from_chartab(t, chartab_unit_weights(t)));
  ASSERT_EQ(spec.size(), 2u);
  EXPECT_EQ(spec[0].value.rational_part(), -1);
  EXPECT_EQ(spec[0].multiplicity, 4);
  EXPECT_EQ(spec[1].value.rational_part(), 2);
  EXPECT_EQ(spec[1].multiplicity, 2);
}

TEST(Chartab, InverseClassesFromConjugateColumns) {
  CharacterTableFile t = load_chartab(data_path("psl2_7.ctab"));
  EXPECT_EQ(t.inverse_class(t.class_index("7A")), t.class_index("7B"));
  EXPECT_EQ(t.inverse_class(t.class_index("4A")), t.class_index("4A"));
  EXPECT_THROW(t.class_index("9Z"), std::out_of_range);
}

TEST(Chartab, HigmanSimsTable) {
  CharacterTableFile t = load_chartab(data_path("hs.ctab"));
  EXPECT_EQ(t.group, "HS");
  EXPECT_EQ(t.order, 44352000);
  EXPECT_EQ(t.classes.size(), 24u);
  EXPECT_EQ(t.characters.size(), 24u);
  EXPECT_EQ(t.inverse_class(t.class_index("20A")), t.class_index("20B"));

  BoundReport r = chartab_ekr_verdict(t, chartab_weights(t, {"11A", "11B"}));
  EXPECT_EQ(r.verdict, Verdict::certified_with_surrogate);
  EXPECT_EQ(r.target, 252000);
  ASSERT_TRUE(r.d.has_value());
  EXPECT_EQ(*r.d, 8064000);
  ASSERT_TRUE(r.tau.has_value());
  EXPECT_EQ(r.tau->value(), -46080);
  EXPECT_EQ(r.tau_multiplicity, 175 * 175);
}

TEST(Chartab, HigmanSimsUnitWeightsInconclusive) {
  CharacterTableFile t = load_chartab(data_path("hs.ctab"));
  auto eigs = weighted_eigs_from_chartab(t, chartab_unit_weights(t));
  for (const auto& e : eigs) {
    if (e.degree == 22) {
      EXPECT_EQ(e.value.rational_part(), -118650);
    }
    if (e.degree == 175) {
      EXPECT_EQ(e.value.rational_part(), -79806);
    }
  }
  BoundReport r = chartab_ekr_verdict(t, chartab_unit_weights(t));
  EXPECT_EQ(r.verdict, Verdict::inconclusive);
  const BoundEntry* b = r.find(BoundKind::ratio);
  ASSERT_NE(b, nullptr);
  EXPECT_FALSE(b->tight);
  EXPECT_NEAR(b->value.approx(), 373622.78, 0.01);
}

TEST(Chartab, NonDerangementWeightRejected) {
  CharacterTableFile t = load_chartab(data_path("hs.ctab"));
  EXPECT_THROW(weighted_eigs_from_chartab(t, chartab_weights(t, {"2A"})), std::invalid_argument);
  EXPECT_THROW(chartab_weights(t, {"99A"}), std::out_of_range);
  EXPECT_THROW(weighted_eigs_from_chartab(t, {q(1)}), std::invalid_argument);
}

TEST(Chartab, TrivialGroupAcceptedButHasNoVerdict) {
  CharacterTableFile t = parse_chartab("group trivial order 1 degree 1\nclasses:\n1A 1 1\nchars:\n1 1\n");
  EXPECT_EQ(t.classes.size(), 1u);
  EXPECT_TRUE(t.derangement_classes().empty());
  EXPECT_THROW(chartab_ekr_verdict(t, chartab_unit_weights(t)), std::invalid_argument);
}

TEST(Chartab, InconsistentTablesRejected) {
  // class sizes do not add up to the order
  EXPECT_THROW(parse_chartab("group bad order 6 degree 3\nclasses:\n1A 1 3\n2A 3 1\n3A 3 0\nchars:\n1 1 1 1\n"
                             "1 1 -1 1\n2 2 0 -1\n"),
               DataError);
  // degrees squared do not add up to the order
  EXPECT_THROW(parse_chartab("group bad order 6 degree 3\nclasses:\n1A 1 3\n2A 3 1\n3A 2 0\nchars:\n1 1 1 1\n"
                             "1 1 -1 1\n"),
               DataError);
  // not transitive: sum |C| fix(C) = 2|G|
  EXPECT_THROW(parse_chartab("group bad order 6 degree 3\nclasses:\n1A 1 3\n2A 3 1\n3A 2 3\nchars:\n1 1 1 1\n"
                             "1 1 -1 1\n2 2 0 -1\n"),
               DataError);
  // syntax errors carry line numbers
  try {
    parse_chartab("group bad order 6 degree 3\nclasses:\n1A one 3\n");
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos) << e.what();
  }
}
