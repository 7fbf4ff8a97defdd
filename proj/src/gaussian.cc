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

#include "inid/gaussian.h"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace inid {
namespace {

// delta outside this window makes QInv the binding constraint; reject rather
// than extrapolate.
constexpr double kMinDelta = 1e-300;
constexpr double kMaxDelta = 1.0 - 1e-12;

void CheckGaussianBudget(const PrivacyBudget& budget) {
  Validate(budget);
  if (budget.delta == 0.0) {
    throw std::domain_error(
        "pure DP unsupported for Gaussian: the Gaussian mechanism cannot "
        "achieve delta = 0");
  }
  if (budget.delta < kMinDelta || budget.delta > kMaxDelta) {
    throw std::domain_error(
        "Gaussian calibration requires delta in [1e-300, 1 - 1e-12]");
  }
}

}  // namespace

double PrivacyProfile(double mu, const PrivacyBudget& budget) {
  Validate(budget);
  if (!(mu > 0.0)) {
    throw std::domain_error("privacy profile: mu must be positive");
  }
  const double eps = budget.epsilon;
  return GaussianQ(eps / mu - 0.5 * mu) -
         ScaledTailProduct(eps, eps / mu + 0.5 * mu);
}

double GaussianBracket(double epsilon, double a) {
  const double q = GaussianQInv(a);
  return std::sqrt(q * q + 2.0 * epsilon) - q;
}

GaussianSolverResult SolveMu0(const PrivacyBudget& budget,
                              const BisectionConfig& config) {
  CheckGaussianBudget(budget);
  const double eps = budget.epsilon;
  const double delta = budget.delta;

  GaussianSolverResult result;
  result.bracket_lo = GaussianBracket(eps, delta);
  result.delta_prime = delta + ScaledTailProduct(eps, std::sqrt(2.0 * eps));
  if (result.delta_prime < 1.0) {
    result.bracket_hi = GaussianBracket(eps, result.delta_prime);
  } else {
    // delta' >= 1 only when delta itself is large; the profile still crosses
    // delta at finite mu, so grow the upper endpoint until it does.
    result.bracket_hi = std::max(2.0 * result.bracket_lo, 1.0);
    while (PrivacyProfile(result.bracket_hi, budget) < delta) {
      result.bracket_hi *= 2.0;
    }
  }

  auto objective = [&](double mu) { return PrivacyProfile(mu, budget) - delta; };

  // The endpoints bound the root analytically; nudge them outward when
  // rounding puts the evaluated sign on the wrong side.
  double lo = std::max(result.bracket_lo, 1e-300);
  double hi = result.bracket_hi;
  for (int i = 0; i < 64 && objective(lo) > 0.0; ++i) lo *= 1.0 - 1e-9;
  for (int i = 0; i < 64 && objective(hi) < 0.0; ++i) hi *= 1.0 + 1e-9;

  const BisectionResult root = BisectMonotone(objective, lo, hi, config);
  result.mu0 = root.root;
  result.iterations = root.iterations;
  return result;
}

double CachedMu0(const PrivacyBudget& budget) {
  static std::mutex mutex;
  static std::map<std::pair<double, double>, double> cache;
  const std::pair<double, double> key(budget.epsilon, budget.delta);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const double mu0 = SolveMu0(budget).mu0;
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, mu0);
  return mu0;
}

NoiseScales CalibrateGaussianWithMu0(const SensitivityProfile& profile,
                                     double mu0, Mode mode, double p) {
  if (!(mu0 > 0.0)) {
    throw std::domain_error("Gaussian calibration: mu0 must be positive");
  }
  if (!(p >= 1.0) || std::isinf(p)) {
    throw std::domain_error(
        "Gaussian calibration: requires finite error order p >= 1");
  }
  const std::vector<double>& lambda = profile.lambda();
  const std::size_t k = lambda.size();
  NoiseScales out;
  out.mechanism = Mechanism::kGaussian;
  out.mode = mode;
  out.error_order_p = p;
  out.scales.resize(k);
  switch (mode) {
    case Mode::kIid: {
      const double sigma = LpSensitivity(profile, 2.0) / mu0;
      std::fill(out.scales.begin(), out.scales.end(), sigma);
      break;
    }
    case Mode::kSpr: {
      const double factor = std::sqrt(static_cast<double>(k)) / mu0;
      for (std::size_t i = 0; i < k; ++i) out.scales[i] = factor * lambda[i];
      break;
    }
    case Mode::kInid: {
      double sum = 0.0;
      for (double x : lambda) sum += std::pow(x, 2.0 * p / (p + 2.0));
      const double root_sum = std::sqrt(sum) / mu0;
      for (std::size_t i = 0; i < k; ++i) {
        out.scales[i] = std::pow(lambda[i], 2.0 / (p + 2.0)) * root_sum;
      }
      break;
    }
  }
  out.theoretical_error = TheoreticalLpError(Mechanism::kGaussian, out.scales, p);
  return out;
}

NoiseScales CalibrateGaussian(const SensitivityProfile& profile,
                              const PrivacyBudget& budget, Mode mode,
                              double p) {
  CheckGaussianBudget(budget);
  return CalibrateGaussianWithMu0(profile, CachedMu0(budget), mode, p);
}

}  // namespace inid
