//
// Copyright 2026 The inid-dp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "inid/numerics.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "test_oracles.h"

namespace inid {
namespace {

using ::inid::testing::GaussianTailInverseQuadrature;
using ::inid::testing::GaussianTailQuadrature;
using ::inid::testing::ScaledTailOracle;

TEST(GaussianQTest, Median) { EXPECT_DOUBLE_EQ(GaussianQ(0.0), 0.5); }

TEST(GaussianQTest, TwoSidedQuantile) {
  EXPECT_NEAR(GaussianQ(1.959964), 0.025, 1e-6);
}

TEST(GaussianQTest, ReflectionIdentity) {
  EXPECT_NEAR(GaussianQ(-0.7), 1.0 - GaussianQ(0.7), 1e-15);
}

TEST(GaussianQTest, MatchesQuadratureOracle) {
  for (double x = -8.0; x <= 8.0; x += 0.25) {
    const double expected = static_cast<double>(GaussianTailQuadrature(x));
    EXPECT_NEAR(GaussianQ(x), expected, 1e-12 * expected) << "x = " << x;
  }
  // Spot checks deeper into the tail.
  for (double x : {10.0, 15.0, 20.0, 25.0}) {
    const double expected = static_cast<double>(GaussianTailQuadrature(x));
    EXPECT_NEAR(GaussianQ(x), expected, 1e-12 * expected) << "x = " << x;
  }
}

TEST(GaussianQTest, MonotoneDecreasing) {
  // Strict monotonicity over the precision domain |x| <= 8; further out the
  // lower tail saturates at 1.0 in double precision.
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> uniform(-8.0, 8.0);
  for (int i = 0; i < 1000; ++i) {
    double x1 = uniform(gen);
    double x2 = uniform(gen);
    if (x1 == x2) continue;
    if (x1 > x2) std::swap(x1, x2);
    EXPECT_GT(GaussianQ(x1), GaussianQ(x2));
  }
}

TEST(GaussianQInvTest, Median) { EXPECT_DOUBLE_EQ(GaussianQInv(0.5), 0.0); }

TEST(GaussianQInvTest, TwoSidedQuantile) {
  const double expected =
      static_cast<double>(GaussianTailInverseQuadrature(0.025L));
  EXPECT_NEAR(expected, 1.959964, 1e-6);  // the frozen textbook value
  EXPECT_NEAR(GaussianQInv(0.025), expected, 1e-12);
}

TEST(GaussianQInvTest, RoundTripAtMicro) {
  // Adjacent doubles around QInv(1e-6) step Q by ~3.6e-15 relative, so this
  // is the representability limit; the contractual bound is 1e-12 relative.
  EXPECT_NEAR(GaussianQ(GaussianQInv(1e-6)), 1e-6, 5e-15 * 1e-6);
}

TEST(GaussianQInvTest, RoundTripOnLogGrid) {
  for (double u = 1e-12; u < 0.5; u *= 10.0) {
    EXPECT_NEAR(GaussianQ(GaussianQInv(u)), u, 1e-12 * u) << "u = " << u;
  }
  for (double v = 1e-12; v < 0.5; v *= 10.0) {
    const double u = 1.0 - v;
    EXPECT_NEAR(GaussianQ(GaussianQInv(u)), u, 1e-12) << "u = " << u;
  }
}

TEST(GaussianQInvTest, DomainErrors) {
  EXPECT_THROW(GaussianQInv(0.0), std::domain_error);
  EXPECT_THROW(GaussianQInv(1.0), std::domain_error);
  EXPECT_THROW(GaussianQInv(-0.1), std::domain_error);
  EXPECT_THROW(GaussianQInv(1.5), std::domain_error);
}

TEST(ScaledTailProductTest, NoAmplificationAtZero) {
  EXPECT_DOUBLE_EQ(ScaledTailProduct(0.0, 0.0), 0.5);
}

TEST(ScaledTailProductTest, DeepTailMatchesExtendedPrecisionOracle) {
  const double expected = static_cast<double>(ScaledTailOracle(50.0L, 12.0L));
  EXPECT_NEAR(ScaledTailProduct(50.0, 12.0), expected, 1e-9 * expected);
}

TEST(ScaledTailProductTest, SaturatesToExpEps) {
  for (double eps : {0.0, 1.0, 10.0, 100.0}) {
    EXPECT_NEAR(ScaledTailProduct(eps, -40.0), std::exp(eps),
                1e-15 * std::exp(eps));
    EXPECT_NEAR(ScaledTailProduct(eps, -100.0), std::exp(eps),
                1e-15 * std::exp(eps));
  }
}

TEST(ScaledTailProductTest, NoOverflowForLargeArguments) {
  // Representable values all the way out; underflow to 0 is the correct
  // rounding when the true value is below the double range.
  EXPECT_TRUE(std::isfinite(ScaledTailProduct(1e4, 1e3)));
  EXPECT_TRUE(std::isfinite(ScaledTailProduct(1e4, 150.0)));
  EXPECT_GE(ScaledTailProduct(1e4, 150.0), 0.0);
  const double expected = static_cast<double>(ScaledTailOracle(500.0L, 40.0L));
  EXPECT_NEAR(ScaledTailProduct(500.0, 40.0), expected, 1e-9 * expected);
}

TEST(BisectMonotoneTest, LinearRoot) {
  const auto result = BisectMonotone([](double x) { return x - 2.0; }, 0.0, 5.0,
                                     {1e-9, 200});
  EXPECT_LE(result.root, 2.0);
  EXPECT_GE(result.root, 2.0 - 1e-9);
}

TEST(BisectMonotoneTest, CubicRootFromBelow) {
  const auto result = BisectMonotone(
      [](double x) { return x * x * x - 8.0; }, 1.0, 3.0, {1e-10, 200});
  EXPECT_LE(result.root, 2.0);
  EXPECT_GE(result.root, 2.0 - 1e-10);
}

TEST(BisectMonotoneTest, IterationCountIsLogarithmic) {
  const double lo = 0.0;
  const double hi = 5.0;
  const double tol = 1e-9;
  const auto result =
      BisectMonotone([](double x) { return x - 2.0; }, lo, hi, {tol, 200});
  const int bound = static_cast<int>(std::ceil(std::log2((hi - lo) / tol)));
  EXPECT_LE(result.iterations, bound);
}

TEST(BisectMonotoneTest, LowerEndpointGuarantee) {
  // f(root) <= 0 and f(root + tolerance) >= 0 up to the evaluation noise.
  const auto f = [](double x) { return std::atan(x - 1.2345); };
  const double tol = 1e-11;
  const auto result = BisectMonotone(f, 0.0, 7.0, {tol, 200});
  EXPECT_LE(f(result.root), 0.0);
  EXPECT_GE(f(result.root + tol), -1e-12);
}

TEST(BisectMonotoneTest, BracketError) {
  EXPECT_THROW(
      BisectMonotone([](double x) { return x + 10.0; }, 0.0, 5.0, {1e-9, 200}),
      std::invalid_argument);
  EXPECT_THROW(
      BisectMonotone([](double x) { return x - 2.0; }, 5.0, 0.0, {1e-9, 200}),
      std::invalid_argument);
}

TEST(BisectMonotoneTest, IterationBudgetError) {
  EXPECT_THROW(
      BisectMonotone([](double x) { return x - 2.0; }, 0.0, 5.0, {1e-12, 5}),
      std::runtime_error);
}

}  // namespace
}  // namespace inid
