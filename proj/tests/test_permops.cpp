#include <gtest/gtest.h>

#include <random>

#include "ontic/permops.hpp"
#include "test_util.hpp"

using namespace ontic;
using ontic::testing::random_chain;
using ontic::testing::random_permutation;

TEST(U3, EntriesAndCube) {
  const auto p = u3(0.3, 0.5, 0.7);
  const DenseOperator m = p.dense();
  EXPECT_NEAR(std::abs(m(0, 1) - std::exp(-kI * 0.3)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m(1, 2) - std::exp(-kI * 0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m(2, 0) - std::exp(-kI * 0.7)), 0.0, 1e-15);
  EXPECT_LT(unitarity_defect(m), 1e-15);

  const DenseOperator cube = m * m * m;
  EXPECT_LT(max_abs_diff(cube, std::exp(-kI * 1.5) * DenseOperator::Identity(3, 3)), 1e-14);

  const DenseOperator plain = u3(0, 0, 0).dense();
  EXPECT_EQ(max_abs_diff(plain * plain * plain, DenseOperator::Identity(3, 3)), 0.0);

  DenseVector e2 = DenseVector::Zero(3);
  e2(1) = 1.0;
  DenseVector e1 = DenseVector::Zero(3);
  e1(0) = 1.0;
  EXPECT_EQ(plain * e2, e1);
}

TEST(LiftExchange, TwoSpinMatrix) {
  DenseOperator expected(4, 4);
  expected << 1, 0, 0, 0,
              0, 0, 1, 0,
              0, 1, 0, 0,
              0, 0, 0, 1;
  EXPECT_EQ(lift_exchange({1, 2}, 2).dense(), expected);
}

TEST(LiftExchange, SquaresToIdentityAndRejectsBadPairs) {
  const auto p = lift_exchange({1, 2}, 3);
  EXPECT_TRUE(compose(p, p).equivalent(GeneralizedPermutation::identity(8)));
  EXPECT_THROW(lift_exchange({1, 1}, 3), std::invalid_argument);
  EXPECT_THROW(lift_exchange({1, 4}, 3), std::invalid_argument);
  EXPECT_THROW(lift_exchange({1, 2}, kMaxSpins + 1), std::invalid_argument);
}

TEST(LiftExchange, NonCommutingAdjacentExchanges) {
  const DenseOperator p12 = lift_exchange({1, 2}, 3).dense();
  const DenseOperator p23 = lift_exchange({2, 3}, 3).dense();
  EXPECT_GT(max_abs_diff(p12 * p23, p23 * p12), 0.5);
}

TEST(LiftExchange, DisjointExchangesCommute) {
  for (int n = 4; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l) {
            if (i == k || i == l || j == k || j == l) continue;
            const auto a = lift_exchange({i, j}, n);
            const auto b = lift_exchange({k, l}, n);
            EXPECT_EQ(compose(a, b).target(), compose(b, a).target());
          }
  }
}

TEST(Compose, MatchesDenseProduct) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 1 + rng() % 9;
    const auto a = random_permutation(rng, dim);
    const auto b = random_permutation(rng, dim);
    EXPECT_LT(max_abs_diff(compose(a, b).dense(), a.dense() * b.dense()), 1e-13);
  }
  EXPECT_THROW(compose(GeneralizedPermutation::identity(2), GeneralizedPermutation::identity(3)),
               std::invalid_argument);
}

TEST(Compose, IdentityInverseAndAssociativity) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 1 + rng() % 9;
    const auto a = random_permutation(rng, dim);
    const auto b = random_permutation(rng, dim);
    const auto c = random_permutation(rng, dim);
    const auto id = GeneralizedPermutation::identity(dim);
    EXPECT_TRUE(compose(id, b).equivalent(b));
    EXPECT_TRUE(compose(a, a.inverse()).equivalent(id, 1e-12));
    EXPECT_TRUE(compose(compose(a, b), c).equivalent(compose(a, compose(b, c)), 1e-12));
  }
}

TEST(Compose, ThreeSpinUpdateIsP12P23) {
  const auto u = compose(lift_exchange({1, 2}, 3), lift_exchange({2, 3}, 3));
  EXPECT_TRUE(u.equivalent(exchange_chain({{1, 2}, {2, 3}}, 3)));
  // |↑↑↓> -> P23 -> |↑↓↑> -> P12 -> |↓↑↑>
  EXPECT_EQ(u.target()[0b001], 0b100u);
}

TEST(Compose, PhasesAddWithoutReduction) {
  const auto p = u3(3.0, 3.0, 3.0);
  const auto p3 = power(p, 3);
  for (double ph : p3.phase()) EXPECT_DOUBLE_EQ(ph, 9.0);
}

TEST(CycleDecomposition, Examples) {
  const auto id = cycle_decomposition(GeneralizedPermutation::identity(4));
  EXPECT_EQ(id.cycle_type(), (std::vector<std::size_t>{1, 1, 1, 1}));
  for (const auto& c : id.cycles) EXPECT_EQ(c.total_phase, 0.0);

  const auto u = cycle_decomposition(exchange_chain({{1, 2}, {2, 3}}, 3));
  EXPECT_EQ(u.cycle_type(), (std::vector<std::size_t>{1, 1, 3, 3}));
  EXPECT_EQ(u.order(), 3u);
  // fixed points are |↑↑↑> and |↓↓↓>
  std::vector<std::size_t> fixed;
  for (const auto& c : u.cycles) {
    if (c.members.size() == 1) fixed.push_back(c.members.front());
  }
  EXPECT_EQ(fixed, (std::vector<std::size_t>{0, 7}));

  const auto w = cycle_decomposition(u3(0.3, 0.5, 0.7));
  ASSERT_EQ(w.cycles.size(), 1u);
  EXPECT_EQ(w.cycles[0].members.size(), 3u);
  EXPECT_NEAR(w.cycles[0].total_phase, 1.5, 1e-15);
}

TEST(CycleDecomposition, PowerOfCycleLengthIsPhaseOnCycle) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 1 + rng() % 10;
    const auto p = random_permutation(rng, dim);
    const auto data = cycle_decomposition(p);
    std::size_t covered = 0;
    for (const auto& c : data.cycles) {
      covered += c.members.size();
      const DenseOperator pl = power(p, static_cast<unsigned>(c.members.size())).dense();
      for (auto r : c.members) {
        for (auto col : c.members) {
          const Complex expected = r == col ? std::exp(-kI * c.total_phase) : Complex{};
          EXPECT_LT(std::abs(pl(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col)) -
                             expected),
                    1e-12);
        }
      }
    }
    EXPECT_EQ(covered, dim);
    const DenseOperator full = power(p, static_cast<unsigned>(data.order())).dense();
    EXPECT_EQ(max_norm(full - DenseOperator(full.diagonal().asDiagonal())), 0.0);
  }
}

TEST(GeneralizedPermutation, RejectsNonBijections) {
  EXPECT_THROW(GeneralizedPermutation({0, 0}), std::invalid_argument);
  EXPECT_THROW(GeneralizedPermutation({0, 2}), std::invalid_argument);
  EXPECT_THROW(GeneralizedPermutation({0, 1}, {0.0}), std::invalid_argument);
}

TEST(GeneralizedPermutation, DenseIsUnitary) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    EXPECT_LT(unitarity_defect(random_permutation(rng, 1 + rng() % 16).dense()), 1e-12);
  }
}

TEST(IsOntological, Examples) {
  const DenseOperator u = exchange_chain({{1, 2}, {2, 3}}, 3).dense();
  EXPECT_TRUE(is_ontological(u).ontological);

  DenseOperator h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  const auto check = is_ontological(h);
  EXPECT_FALSE(check.ontological);
  ASSERT_TRUE(check.witness.has_value());
  EXPECT_NEAR(check.witness->second_largest, 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_FALSE(check.permutation.has_value());

  EXPECT_THROW(is_ontological(DenseOperator::Zero(2, 3)), std::invalid_argument);
}

TEST(IsOntological, RejectsNonBijectiveColumnMaps) {
  DenseOperator m = DenseOperator::Zero(2, 2);
  m(0, 0) = 1.0;
  m(0, 1) = 1.0;
  EXPECT_FALSE(is_ontological(m).ontological);
}

TEST(IsOntological, RoundTripExtractsThePermutation) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_permutation(rng, 1 + rng() % 16);
    const auto check = is_ontological(p.dense(), 1e-10);
    ASSERT_TRUE(check.ontological);
    EXPECT_TRUE(check.permutation->equivalent(p, 1e-12));
  }
}

TEST(ExchangeProducts, NeverConnectDifferentWeightSectors) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const DenseOperator m = exchange_chain(random_chain(rng, n), n).dense();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        if (weight(static_cast<BasisIndex>(r)) != weight(static_cast<BasisIndex>(c))) {
          ASSERT_EQ(m(r, c), Complex{});
        }
      }
    }
  }
}
