#include <random>

#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace fcc;
using testutil::W;

namespace {

FunctionSpec witness() { return testutil::load_table("triangle_witness.txt", 2); }

std::vector<Word> witness_vectors() { return {W(2, {0}), W(2, {1}), W(2, {3})}; }

RequirementMatrix triangle(int t) { return requirement_matrix(witness(), t, witness_vectors()); }

RequirementMatrix random_matrix(std::mt19937& rng, std::size_t m, int max_entry) {
  std::uniform_int_distribution<int> e(0, max_entry);
  std::vector<std::vector<int>> rows(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) rows[i][j] = rows[j][i] = e(rng);
  return RequirementMatrix::from_rows(rows);
}

}  // namespace

TEST(RequirementMatrix, TriangleWitness) {
  EXPECT_EQ(triangle(2).to_rows(), (std::vector<std::vector<int>>{{0, 4, 4}, {4, 0, 3}, {4, 3, 0}}));
  EXPECT_EQ(triangle(3).to_rows(), (std::vector<std::vector<int>>{{0, 6, 6}, {6, 0, 5}, {6, 5, 0}}));
  EXPECT_EQ(triangle(2).t(), 2);
  EXPECT_EQ(triangle(2).source_vectors(), witness_vectors());
}

TEST(RequirementMatrix, FiberAndClamp) {
  const auto p = RingParams::make(2);
  const auto ms = FunctionSpec::modular_sum(p, 2);
  // all in the fiber ms = 0
  EXPECT_TRUE(requirement_matrix(ms, 2, {W(2, {0, 0}), W(2, {1, 3}), W(2, {2, 2})}).is_zero());
  // distance 4 >= 2t + 1 = 3
  const auto d = requirement_matrix(FunctionSpec::hom_weight(p, 2), 1, {W(2, {0, 0}), W(2, {2, 2})});
  EXPECT_EQ(d.at(0, 1), 0);
}

TEST(RequirementMatrix, Validation) {
  const auto p = RingParams::make(2);
  const auto wh = FunctionSpec::hom_weight(p, 1);
  EXPECT_THROW(requirement_matrix(wh, 1, {W(2, {1}), W(2, {1})}), Error);
  EXPECT_THROW(requirement_matrix(wh, 1, {W(2, {1}), W(2, {1, 0})}), Error);
  EXPECT_THROW(requirement_matrix(wh, 0, {W(2, {1})}), Error);
  EXPECT_THROW(RequirementMatrix::from_rows({{0, 1}, {2, 0}}), Error);
  EXPECT_THROW(RequirementMatrix::from_rows({{1, 1}, {1, 0}}), Error);
  EXPECT_THROW(RequirementMatrix::from_rows({{0, -1}, {-1, 0}}), Error);
  EXPECT_THROW(RequirementMatrix::from_rows({{0, 4}, {4, 0}}, 1), Error);
  EXPECT_THROW(RequirementMatrix::from_rows({{0, 1, 1}, {1, 0}}), Error);
}

TEST(RequirementMatrix, RaisingTAddsTwo) {
  const auto p = RingParams::make(2);
  for (const auto& f : {FunctionSpec::hom_weight(p, 2), FunctionSpec::modular_sum(p, 2)}) {
    const auto words = all_words(p, 2);
    for (int t = 1; t <= 3; ++t) {
      const auto a = requirement_matrix(f, t, words), b = requirement_matrix(f, t + 1, words);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
          EXPECT_EQ(a.at(i, j), a.at(j, i));
          if (a.at(i, j) > 0) EXPECT_EQ(b.at(i, j), a.at(i, j) + 2);
          EXPECT_LE(b.at(i, j), 2 * (t + 1) + 1);
        }
    }
  }
}

TEST(Plotkin, Generic) {
  EXPECT_EQ(plotkin_bound_generic(RequirementMatrix::from_rows({{0, 0}, {0, 0}})), 0);
  EXPECT_EQ(plotkin_ratio_generic(triangle(2)), Rational(22, 9));
  EXPECT_EQ(plotkin_bound_generic(triangle(2)), 3);
  EXPECT_EQ(plotkin_bound_generic(triangle(3)), 4);
  EXPECT_EQ(plotkin_bound_generic(RequirementMatrix()), 0);
}

TEST(Plotkin, Z4) {
  EXPECT_EQ(plotkin_ratio_z4(triangle(3), RingParams::make(2)), Rational(34, 8));
  EXPECT_EQ(plotkin_bound_z4(triangle(3)), 5);
  EXPECT_EQ(plotkin_bound_z4(triangle(2)), 3);
  EXPECT_EQ(plotkin_bound_z4(RequirementMatrix::from_rows({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}})), 0);
  EXPECT_EQ(plotkin_bound_z4(RequirementMatrix::from_rows({{0}})), 0);
  try {
    plotkin_bound_z4(triangle(2), RingParams::make(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Domain);
  }
}

TEST(Plotkin, Z4DivisorByResidue) {
  for (std::size_t m = 2; m <= 7; ++m) {
    std::vector<std::vector<int>> rows(m, std::vector<int>(m, 1));
    for (std::size_t i = 0; i < m; ++i) rows[i][i] = 0;
    const auto d = RequirementMatrix::from_rows(rows);
    const auto mm = static_cast<std::int64_t>(m * m);
    const std::int64_t divisor = (m % 4 == 1 || m % 4 == 3) ? mm - 1 : mm;
    EXPECT_EQ(plotkin_ratio_z4(d, RingParams::make(2)), Rational(mm - static_cast<std::int64_t>(m), divisor));
  }
}

TEST(Plotkin, Z4DominatesGenericRandom) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = random_matrix(rng, 2 + trial % 6, 9);
    EXPECT_GE(plotkin_bound_z4(d), plotkin_bound_generic(d));
    EXPECT_EQ(plotkin_bound(d, RingParams::make(2)), plotkin_bound_z4(d));
    EXPECT_EQ(plotkin_bound(d, RingParams::make(3)), plotkin_bound_generic(d));
  }
}

TEST(RationalHelpers, CeilFloor) {
  EXPECT_EQ(ceil(Rational(22, 9)), 3);
  EXPECT_EQ(ceil(Rational(18, 9)), 2);
  EXPECT_EQ(ceil(Rational(-1, 4)), 0);
  EXPECT_EQ(ceil(Rational(-5, 4)), -1);
  EXPECT_EQ(floor(Rational(-5, 4)), -2);
  EXPECT_EQ(floor(Rational(7, 2)), 3);
  EXPECT_EQ(to_string(Rational(15, 8)), "15/8");
  EXPECT_EQ(to_string(Rational(4)), "4");
}

TEST(ModularSumBound, Values) {
  const auto a = modular_sum_lower_bound(2, 1);
  EXPECT_EQ(a.bound, Rational(5, 4));
  EXPECT_EQ(a.ceiling, 2);
  EXPECT_TRUE(a.equals_two_t);
  EXPECT_EQ(a.optimal, 2);
  const auto b = modular_sum_lower_bound(3, 2);
  EXPECT_EQ(b.bound, Rational(27, 8));
  EXPECT_EQ(b.ceiling, 4);
  EXPECT_EQ(b.optimal, 4);
  const auto c = modular_sum_lower_bound(2, 2);
  EXPECT_FALSE(c.equals_two_t);
  EXPECT_FALSE(c.optimal);
  for (int t = 1; t <= 50; ++t) EXPECT_LT(modular_sum_lower_bound(3, t).bound, Rational(2 * t));
  EXPECT_THROW(modular_sum_lower_bound(2, 0), Error);
  EXPECT_THROW(modular_sum_lower_bound(0, 1), Error);
}

TEST(LinearBound, Lin3) {
  const auto b = linear_plotkin_bound(testutil::load_linear("lin3_f.txt"), 2);
  EXPECT_EQ(b.kernel_weight_sum, 12);
  EXPECT_EQ(b.bound, Rational(15, 8));
  EXPECT_EQ(b.ceiling, 2);
}

TEST(LinearBound, ModularSumAsLinear) {
  const auto b = linear_plotkin_bound(FunctionSpec::modular_sum_as_linear(RingParams::make(2), 2), 1);
  EXPECT_EQ(b.kernel_weight_sum, 8);
  EXPECT_EQ(b.bound, Rational(3, 4));
  EXPECT_EQ(b.ceiling, 1);
}

TEST(LinearBound, Bijective) {
  const auto f = testutil::load_linear("invertible_f.txt");
  for (int t = 1; t <= 4; ++t) {
    const auto b = linear_plotkin_bound(f, t);
    EXPECT_EQ(b.kernel_weight_sum, 0);
    // n = r + k
    EXPECT_EQ(b.bound + Rational(3), bijective_length_bound(2, 3, t));
    EXPECT_EQ(bijective_length_bound(2, 3, t), Rational(2 * t + 1) * Rational(63, 64));
  }
}

TEST(LinearBound, NotOnto) {
  const auto f = FunctionSpec::linear(Matrix::from_rows(RingParams::make(2), {{2, 2}}));
  try {
    linear_plotkin_bound(f, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Hypothesis);
  }
}

TEST(UpperBound, Values) {
  EXPECT_EQ(upper_bound_from_lambda(3, 2), 3);
  EXPECT_EQ(upper_bound_from_lambda(3, 1), 2);
  EXPECT_EQ(upper_bound_from_lambda(4, 2), 4);
  EXPECT_EQ(upper_bound_from_lambda(2, 5), 5);
  for (int lambda = 2; lambda <= 8; ++lambda)
    for (int t = 1; t <= 6; ++t) {
      // the formula as written, in rationals
      const Rational exact = t % 2 == 0 ? Rational(lambda * t, 2) : Rational(lambda * (t + 1) - 2, 2);
      EXPECT_EQ(exact.denominator(), 1);
      EXPECT_EQ(upper_bound_from_lambda(lambda, t), exact.numerator());
    }
  EXPECT_THROW(upper_bound_from_lambda(1, 1), Error);
  EXPECT_THROW(upper_bound_from_lambda(3, 0), Error);
}

TEST(LowerBound, Examples) {
  EXPECT_EQ(redundancy_lower_bound(witness(), 2, witness_vectors()), 3);
  const auto p = RingParams::make(2);
  const auto c = FunctionSpec::table(p, 1, std::vector<FunctionValue>(4, std::int64_t{1}));
  EXPECT_EQ(redundancy_lower_bound(c, 3, all_words(p, 1)), 0);
  for (int t = 1; t <= 3; ++t)
    EXPECT_GE(redundancy_lower_bound(FunctionSpec::hom_weight(p, 1), t, {W(2, {0}), W(2, {2})}), t);
}

TEST(LowerBound, MonotoneInT) {
  const auto p = RingParams::make(2);
  for (const auto& f : {FunctionSpec::hom_weight(p, 1), FunctionSpec::modular_sum(p, 1), witness(),
                        FunctionSpec::weight_distribution(p, 2, 2)}) {
    const auto words = all_words(p, f.k());
    std::int64_t prev = 0;
    for (int t = 1; t <= 3; ++t) {
      const auto lb = redundancy_lower_bound(f, t, words);
      EXPECT_GE(lb, prev) << f.describe() << " t=" << t;
      prev = lb;
    }
  }
}

TEST(RequirementMatrixJson, RoundTrip) {
  const auto d = triangle(3);
  const auto back = requirement_matrix_from_json(to_json(d));
  EXPECT_EQ(back, d);
  EXPECT_EQ(back.t(), 3);
  const auto file = requirement_matrix_from_json(parse_json(read_file(testutil::data_path("triangle_t3.json")), "file"));
  EXPECT_EQ(file, d);
  EXPECT_THROW(requirement_matrix_from_json(json{{"t", 1}}), Error);
  EXPECT_THROW(requirement_matrix_from_json(json{{"schema", 2}, {"entries", {{0}}}}), Error);
}
