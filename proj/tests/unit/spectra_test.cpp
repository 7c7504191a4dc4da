#include <gtest/gtest.h>

#include "dense_oracle.hpp"
#include "ekr/matrix_groups.hpp"
#include "ekr/spectrum.hpp"
#include "ekr/suzuki_ree.hpp"
#include "fixtures.hpp"

using namespace ekr;
using ekr::test::q;

namespace {

std::vector<std::pair<Rational, long>> rational_spectrum(const Spectrum& s) {
  std::vector<std::pair<Rational, long>> out;
  for (const auto& e : s.entries) {
    EXPECT_TRUE(e.exact());
    out.emplace_back(e.value.value(), e.multiplicity.get_si());
  }
  return out;
}

}  // namespace

TEST(Spectrum, SymmetricGroupOfDegreeThree) {
  test::Enumerated s3(symmetric_generators(3));
  Spectrum s = spectrum(s3.algebra, s3.stats, WeightVector::unit(s3.stats));
  std::vector<std::pair<Rational, long>> expected{{q(-1), 4}, {q(2), 2}};
  EXPECT_EQ(rational_spectrum(s), expected);
  EXPECT_EQ(s.total_multiplicity(), 6);
  EXPECT_TRUE(verify_trace_identity(s, s3.algebra, WeightVector::unit(s3.stats)));
}

TEST(Spectrum, PowerSums) {
  test::Enumerated s3(symmetric_generators(3));
  auto w = WeightVector::unit(s3.stats);
  EXPECT_EQ(power_sum(s3.algebra, s3.stats, w, 0), 6);
  EXPECT_EQ(power_sum(s3.algebra, s3.stats, w, 1), 0);
  EXPECT_EQ(power_sum(s3.algebra, s3.stats, w, 2), 12);
  EXPECT_EQ(power_sum(s3.algebra, s3.stats, w, 3), 12);
}

TEST(Spectrum, ZeroWeightsGiveZeroMatrix) {
  test::Enumerated s3(symmetric_generators(3));
  auto w = WeightVector::zero(s3.stats);
  EXPECT_TRUE(w.all_zero());
  Spectrum s = spectrum(s3.algebra, s3.stats, w);
  ASSERT_EQ(s.entries.size(), 1u);
  EXPECT_EQ(s.entries[0].value.value(), 0);
  EXPECT_EQ(s.entries[0].multiplicity, 6);
}

TEST(Spectrum, WeightValidation) {
  test::Enumerated s3(symmetric_generators(3));
  EXPECT_THROW(WeightVector::from_values(s3.stats, {q(1), q(2)}), std::invalid_argument);
  EXPECT_THROW(WeightVector::from_values(s3.stats, {q(-1)}), std::invalid_argument);
  EXPECT_THROW(WeightVector::indicator(s3.stats, {0}), std::invalid_argument);
}

TEST(Spectrum, NonInverseClosedWeightsRejected) {
  auto g = test::enumerate(psl_generators(3, 2));
  ASSERT_EQ(g->g.degree(), 7u);
  ClassId a = g->classes.by_name("7A");
  ClassId b = g->classes.by_name("7B");
  ASSERT_EQ(g->classes[a].inverse, b);
  std::vector<Rational> values;
  for (ClassId c : g->stats.derangement_classes) values.push_back(c == a ? q(1) : c == b ? q(2) : q(0));
  auto w = WeightVector::from_values(g->stats, values);
  EXPECT_THROW(collapsed_matrix(g->algebra, g->stats, w), std::invalid_argument);
  EXPECT_THROW(spectrum(g->algebra, g->stats, w), std::invalid_argument);
}

TEST(Spectrum, SuzukiEightMatchesClosedForm) {
  auto sz = test::enumerate_file("groups/sz8.gens");
  Spectrum s = spectrum(sz->algebra, sz->stats, WeightVector::unit(sz->stats));
  SuzukiData closed = sz_spectrum(8);
  std::map<Rational, Integer> predicted;
  for (const auto& e : closed.spectrum) predicted[Rational(e.value)] += e.multiplicity;
  std::map<Rational, Integer> measured;
  for (const auto& e : s.entries) {
    ASSERT_TRUE(e.exact());
    measured[e.value.value()] = e.multiplicity;
  }
  EXPECT_EQ(measured, predicted);
  EXPECT_EQ(s.max().value.value(), 12544);
  EXPECT_EQ(s.min().value.value(), -196);
  EXPECT_EQ(s.min().multiplicity, 4096);
}

TEST(Spectrum, IrrationalEigenvaluesAreIsolated) {
  // A5 weighted on 5A alone: the degree-3 characters take (1 +- sqrt(5))/2 there.
  test::Enumerated a5(alternating_generators(5));
  auto w = WeightVector::indicator(a5.stats, {a5.classes.by_name("5A")});
  Spectrum s = spectrum(a5.algebra, a5.stats, w);
  int irrational = 0;
  for (const auto& e : s.entries) irrational += !e.exact();
  EXPECT_EQ(irrational, 2);
  EXPECT_EQ(s.total_multiplicity(), 60);
  EXPECT_TRUE(verify_trace_identity(s, a5.algebra, w));
  EXPECT_LT(test::max_deviation(test::dense_eigenvalues(a5.g, a5.classes, w), test::expand(s)), 1e-8);
}

struct DenseCase {
  const char* label;
  GeneratorSet (*make)();
  std::vector<std::string> weighted;  // empty: unit weights
};

class DenseOracle : public ::testing::TestWithParam<DenseCase> {};

TEST_P(DenseOracle, ExactSpectrumMatchesFloatingPoint) {
  const DenseCase& c = GetParam();
  test::Enumerated e(c.make());
  WeightVector w = WeightVector::unit(e.stats);
  if (!c.weighted.empty()) {
    std::vector<ClassId> support;
    for (const auto& name : c.weighted) support.push_back(e.classes.by_name(name));
    w = WeightVector::indicator(e.stats, support);
  }
  Spectrum s = spectrum(e.algebra, e.stats, w);
  EXPECT_TRUE(verify_trace_identity(s, e.algebra, w));
  EXPECT_LT(test::max_deviation(test::dense_eigenvalues(e.g, e.classes, w), test::expand(s)), 1e-8);
}

INSTANTIATE_TEST_SUITE_P(
    SmallGroups, DenseOracle,
    ::testing::Values(DenseCase{"S4", [] { return symmetric_generators(4); }, {}},
                      DenseCase{"A5", [] { return alternating_generators(5); }, {}},
                      DenseCase{"A5_5AB", [] { return alternating_generators(5); }, {"5A", "5B"}},
                      DenseCase{"S5", [] { return symmetric_generators(5); }, {}},
                      DenseCase{"PSL2_7", [] { return psl_generators(2, 7); }, {}},
                      DenseCase{"PSL2_7_4A", [] { return psl_generators(2, 7); }, {"4A"}},
                      DenseCase{"PSL2_7_2A", [] { return psl_generators(2, 7); }, {"2A"}},
                      DenseCase{"PSL3_2_7AB", [] { return psl_generators(3, 2); }, {"7A", "7B"}}),
    [](const auto& info) { return std::string(info.param.label); });
