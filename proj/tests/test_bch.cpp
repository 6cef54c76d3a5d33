#include <gtest/gtest.h>

#include "ontic/bch.hpp"
#include "ontic/permops.hpp"
#include "ontic/spectral.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace ontic;
using ontic::testing::pade_exp;

TEST(Commutator, Examples) {
  DenseOperator x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, -kI, kI, 0;
  z << 1, 0, 0, -1;
  EXPECT_LT(max_abs_diff(commutator(x, y), DenseOperator(2.0 * kI * z)), 1e-15);
  EXPECT_EQ(commutator(x, x), DenseOperator::Zero(2, 2));
  EXPECT_THROW(commutator(x, DenseOperator::Zero(3, 3)), std::invalid_argument);
}

TEST(ExchangeExponential, HoldsForAllPairsAndShifts) {
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int shift : {0, 1, 2, -1}) {
          const auto r = exchange_exponential_identity({i, j}, n, shift);
          EXPECT_LT(r.max_abs_diff, 1e-12) << i << j << " shift " << shift;
          EXPECT_EQ(r.identity, BchIdentity::ExchangeExponential);
        }
}

TEST(ExchangeExponential, RhsMatchesPadeExponential) {
  const DenseOperator p = lift_exchange({1, 2}, 3).dense();
  const DenseOperator expected = kI * pade_exp(DenseOperator(-kI * (kPi / 2) * p));
  EXPECT_LT(max_abs_diff(exchange_exponential_identity({1, 2}, 3).rhs, expected), 1e-13);
}

TEST(TerminatingBch, HoldsAndHitsProduct) {
  const auto r = verify_terminating_bch();
  EXPECT_LT(r.max_abs_diff, 1e-12);
  ASSERT_TRUE(r.product_diff.has_value());
  EXPECT_LT(*r.product_diff, 1e-12);
  EXPECT_EQ(r.dim(), 8u);
}

TEST(TerminatingBch, InvariantUnderTwoPiShifts) {
  for (int a : {0, 1, 2})
    for (int b : {0, 1, 2}) {
      const auto r = verify_terminating_bch({a, b, false});
      EXPECT_LT(r.max_abs_diff, 1e-9) << a << "," << b;
    }
}

TEST(TerminatingBch, ConjugatedCouplingFails) {
  const auto r = verify_terminating_bch({0, 0, true});
  EXPECT_NEAR(r.max_abs_diff, 1.0, 1e-12);
  // The conjugated right-hand side is the inverse (= transpose) product.
  const DenseOperator inv = (lift_exchange({2, 3}, 3).dense() * lift_exchange({1, 2}, 3).dense());
  EXPECT_LT(max_abs_diff(r.rhs, inv), 1e-12);
}

TEST(FactorizedBch, CommutingFactorsReproduceEvolution) {
  const auto r = verify_factorized_form();
  EXPECT_LT(r.max_abs_diff, 1e-12);
  ASSERT_TRUE(r.commutator_norm.has_value());
  EXPECT_LT(*r.commutator_norm, 1e-15);
}

TEST(TruncatedBch, TermCounts) {
  EXPECT_EQ(truncated_term_count(1), 2);
  EXPECT_EQ(truncated_term_count(2), 3);
  EXPECT_EQ(truncated_term_count(3), 5);
  EXPECT_EQ(truncated_term_count(4), 6);
  EXPECT_THROW(truncated_term_count(0), std::invalid_argument);
  EXPECT_THROW(truncated_term_count(5), std::invalid_argument);
}

TEST(TruncatedBch, GapMatchesOracleAndStaysOpen) {
  for (int k = 1; k <= 4; ++k) {
    const auto r = truncated_bch_report(k);
    EXPECT_NEAR(r.max_abs_diff, fixtures::kTruncatedBchGap[k - 1], 1e-12) << "order " << k;
    EXPECT_GT(r.max_abs_diff, 1e-3);
    EXPECT_EQ(r.terms_evaluated, truncated_term_count(k));
  }
}

TEST(TruncatedBch, CommutingInputsCollapseToSum) {
  std::mt19937_64 rng(51);
  const DenseOperator a = ontic::testing::random_matrix(rng, 4);
  const DenseOperator b = DenseOperator(a * a + 2.0 * a);
  for (int k = 1; k <= 4; ++k) {
    EXPECT_LT(max_abs_diff(truncated_bch_series(a, b, k), DenseOperator(a + b)), 1e-12);
  }
}

TEST(TruncatedBch, SecondOrderAntisymmetry) {
  // Z(X,Y) - Z(Y,X) = [X,Y] through order two.
  std::mt19937_64 rng(52);
  const DenseOperator x = ontic::testing::random_matrix(rng, 4);
  const DenseOperator y = ontic::testing::random_matrix(rng, 4);
  const DenseOperator d = truncated_bch_series(x, y, 2) - truncated_bch_series(y, x, 2);
  EXPECT_LT(max_abs_diff(d, commutator(x, y)), 1e-12);
}

TEST(TruncatedBch, SmallArgumentsConvergeToProduct) {
  // For small X, Y the series through order 4 agrees with log(e^X e^Y) to O(s^5).
  std::mt19937_64 rng(53);
  const double s = 1e-2;
  const DenseOperator x = s * ontic::testing::random_matrix(rng, 4);
  const DenseOperator y = s * ontic::testing::random_matrix(rng, 4);
  const DenseOperator prod = pade_exp(x) * pade_exp(y);
  EXPECT_LT(max_abs_diff(pade_exp(truncated_bch_series(x, y, 4)), prod), 1e-8);
  EXPECT_GT(max_abs_diff(pade_exp(truncated_bch_series(x, y, 1)), prod), 1e-6);
}

TEST(BchIdentity, Names) {
  EXPECT_EQ(identity_name(BchIdentity::ExchangeExponential), "exchange_exponential");
  EXPECT_EQ(identity_name(BchIdentity::TruncatedBch), "truncated_bch");
}
