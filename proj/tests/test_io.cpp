#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "ontic/io.hpp"
#include "test_util.hpp"

using namespace ontic;
using ontic::io::json;

TEST(FormatDouble, SeventeenDigitsRoundTrip) {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int k = 0; k < 1000; ++k) {
    const double x = u(rng) / (1 + k);
    EXPECT_EQ(std::stod(io::format_double(x, 17)), x);
  }
  EXPECT_EQ(io::format_double(-0.0, 17), "0");
  EXPECT_EQ(io::format_double(0.5, 17), "0.5");
}

TEST(DumpJson, DeterministicAndFullPrecision) {
  json j = {{"b", kPi}, {"a", {1, 2}}, {"c", "text"}};
  const std::string s = io::dump_json(j);
  EXPECT_EQ(s, io::dump_json(j));
  EXPECT_NE(s.find("3.1415926535897931"), std::string::npos);
  EXPECT_LT(s.find("\"a\""), s.find("\"b\""));
  EXPECT_EQ(json::parse(s)["b"].get<double>(), kPi);
  EXPECT_EQ(io::dump_json(json(std::numeric_limits<double>::quiet_NaN())), "null");
}

TEST(Json, PermutationRoundTrip) {
  std::mt19937_64 rng(72);
  const auto p = ontic::testing::random_permutation(rng, 8);
  const auto back = io::permutation_from_json(json::parse(io::dump_json(io::to_json(p))));
  EXPECT_EQ(back.target(), p.target());
  EXPECT_EQ(back.phase(), p.phase());
  EXPECT_THROW(io::permutation_from_json(json{{"dim", 2}, {"target", {0, 0}}, {"phase", {0, 0}}}),
               std::invalid_argument);
  EXPECT_THROW(io::permutation_from_json(json{{"target", {0, 1}}, {"phase", {0, 0}}}),
               std::invalid_argument);
  EXPECT_THROW(io::dense_from_json(json{{"rows", "two"}}), std::invalid_argument);
}

TEST(Json, DenseRoundTripIsExact) {
  std::mt19937_64 rng(73);
  const DenseOperator m = ontic::testing::random_matrix(rng, 4);
  const json j = io::to_json(m);
  EXPECT_EQ(j["rows"], 4);
  EXPECT_EQ(j["data"].size(), 16u);
  EXPECT_EQ(io::dense_from_json(json::parse(io::dump_json(j))), m);
}

TEST(Json, PauliSumRoundTrip) {
  PauliSum s(3);
  s.add(PauliString::parse("XYZ"), Complex(0.25, -1.0 / 3.0));
  s.add(PauliString::parse("IIZ"), 2.0);
  const json j = io::to_json(s);
  EXPECT_EQ(j["n_sites"], 3);
  EXPECT_EQ(j["terms"][0]["string"], "IIZ");
  const auto back = io::pauli_sum_from_json(json::parse(io::dump_json(j)));
  EXPECT_EQ(back.terms(), s.terms());
}

TEST(Csv, DenseAndSweepHeaders) {
  const std::string d = io::to_csv(DenseOperator::Identity(2, 2));
  EXPECT_EQ(d.substr(0, d.find('\n')), "row,col,re,im");
  EXPECT_EQ(std::count(d.begin(), d.end(), '\n'), 5);
  EXPECT_EQ(d.find('\r'), std::string::npos);

  const auto sweep = leakage_sweep(LeakageGenerator::exchange({1, 2}, 2), {0.01, 0.1}, {1});
  const std::string s = io::to_csv(sweep, 2);
  EXPECT_EQ(s.substr(0, s.find('\n')), "epsilon,source,dominant,dominant_prob,leakage,slope");
  EXPECT_NE(s.find("\n0.01,01,10,"), std::string::npos);
}

TEST(Json, LeakageSweepUsesBitStrings) {
  const auto sweep = leakage_sweep(LeakageGenerator::hamiltonian(), {0.01}, {0b010});
  const json j = io::to_json(sweep, 3);
  const std::string s = io::dump_json(j);
  EXPECT_NE(s.find("\"010\""), std::string::npos);
  EXPECT_NE(s.find("\"001\""), std::string::npos);
}
