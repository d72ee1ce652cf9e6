#include <gtest/gtest.h>

#include "cpeak/genfunc.hpp"
#include "cpeak/recurrences.hpp"

namespace cpeak {
namespace {

SetMask mask_of(std::initializer_list<int> v) { return to_mask(std::vector<int>(v)); }

TEST(GfInitial, TwoTerms) {
  const PeakPolynomial g = gf_initial();
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.terms().size(), 2u);
  EXPECT_EQ(g.coefficient(0, 0), 4);
  EXPECT_EQ(g.coefficient(mask_of({3}), 1), 2);
  EXPECT_EQ(g.coefficient(mask_of({3}), 2), 0);
  EXPECT_EQ(g.to_string(), "4 + 2·x_3·y");
}

TEST(GfStep, FirstSteps) {
  const PeakPolynomial g4 = gf_step(gf_initial());
  EXPECT_EQ(g4.n(), 4);
  EXPECT_EQ(g4.to_string(), "8 + 4·x_3·y + 12·x_4·y");
  const PeakPolynomial g5 = gf_step(g4);
  EXPECT_EQ(g5.coefficient(mask_of({4, 5}), 2), 12);
  EXPECT_EQ(g5.evaluate_at_ones(), 120);
}

TEST(GfStep, Derivatives) {
  PeakPolynomial g(5);
  g.add({mask_of({3, 5}), 2}, 7);
  g.add({mask_of({4}), 1}, 3);
  const auto dx = g.sum_partial_x();
  EXPECT_EQ(dx.coefficient(mask_of({3}), 2), 7);
  EXPECT_EQ(dx.coefficient(mask_of({5}), 2), 7);
  EXPECT_EQ(dx.coefficient(0, 1), 3);
  const auto dy = g.partial_y();
  EXPECT_EQ(dy.coefficient(mask_of({3, 5}), 1), 14);
  EXPECT_EQ(dy.coefficient(mask_of({4}), 0), 3);
}

TEST(GfStep, InvariantViolationsAreDetected) {
  PeakPolynomial g(4);
  g.add({mask_of({3}), 2}, 1);
  EXPECT_THROW(g.check_invariants(), std::logic_error);
  PeakPolynomial h(4);
  h.add({mask_of({3}), 1}, -1);
  EXPECT_THROW(h.check_invariants(), std::logic_error);
}

TEST(GfCoefficient, Examples) {
  EXPECT_EQ(gf_coefficient(PeakSet(7, {3, 6, 7})), 24);
  EXPECT_EQ(gf_coefficient(PeakSet(6, {3, 4})), 0);
  EXPECT_EQ(gf_coefficient(PeakSet(8, {})), 128);
  EXPECT_THROW(gf_coefficient(PeakSet(17, {})), ScaleError);
}

TEST(GfPolynomial, MatchesDpTables) {
  const auto tables = dp_tables(12);
  PeakPolynomial g = gf_initial();
  for (const auto& t : tables) {
    ASSERT_EQ(g.n(), t.n());
    EXPECT_EQ(g.to_count_table(), t) << "n=" << t.n();
    EXPECT_EQ(g.evaluate_at_ones(), factorial(t.n()));
    const auto by_size = g.by_cardinality();
    EXPECT_EQ(static_cast<int>(by_size.size()) - 1, (t.n() - 1) / 2) << "n=" << t.n();
    if (t.n() < 12) g = gf_step(g);
  }
}

TEST(GfPolynomial, TermsSortedBySizeThenSet) {
  const PeakPolynomial g = gf_polynomial(6);
  EXPECT_EQ(g.to_string(),
            "32 + 16·x_3·y + 48·x_4·y + 112·x_5·y + 240·x_6·y + 8·x_3·x_5·y^2 + 24·x_3·x_6·y^2 + "
            "24·x_4·x_5·y^2 + 72·x_4·x_6·y^2 + 144·x_5·x_6·y^2");
}

}  // namespace
}  // namespace cpeak
