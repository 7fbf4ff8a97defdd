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

#include "inid/laplace.h"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace inid {

NoiseScales CalibrateLaplace(const SensitivityProfile& profile, double epsilon,
                             Mode mode, double p) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::domain_error("Laplace calibration: epsilon must be positive");
  }
  if (!(p >= 1.0) || std::isinf(p)) {
    throw std::domain_error(
        "Laplace calibration: requires finite error order p >= 1");
  }
  const std::vector<double>& lambda = profile.lambda();
  const std::size_t k = lambda.size();
  NoiseScales out;
  out.mechanism = Mechanism::kLaplace;
  out.mode = mode;
  out.error_order_p = p;
  out.scales.resize(k);
  switch (mode) {
    case Mode::kIid: {
      const double beta = LpSensitivity(profile, 1.0) / epsilon;
      std::fill(out.scales.begin(), out.scales.end(), beta);
      break;
    }
    case Mode::kSpr: {
      const double factor = static_cast<double>(k) / epsilon;
      for (std::size_t i = 0; i < k; ++i) out.scales[i] = factor * lambda[i];
      break;
    }
    case Mode::kInid: {
      double sum = 0.0;
      for (double x : lambda) sum += std::pow(x, p / (p + 1.0));
      const double factor = sum / epsilon;
      for (std::size_t i = 0; i < k; ++i) {
        out.scales[i] = std::pow(lambda[i], 1.0 / (p + 1.0)) * factor;
      }
      break;
    }
  }
  out.theoretical_error = TheoreticalLpError(Mechanism::kLaplace, out.scales, p);
  return out;
}

NoiseScales CalibrateLaplaceApproxDp(const SensitivityProfile& profile,
                                     const PrivacyBudget& budget, double p) {
  Validate(budget);
  if (budget.delta >= 1.0) {
    throw std::domain_error(
        "Laplace (epsilon, delta) calibration requires delta < 1");
  }
  // -log(1 - delta) via log1p keeps the effective budget exact for delta
  // down to ~1e-16 and below.
  const double effective = budget.epsilon - std::log1p(-budget.delta);
  if (!(effective > 0.0)) {
    throw std::domain_error(
        "Laplace calibration: effective budget epsilon - log(1 - delta) "
        "must be positive");
  }
  return CalibrateLaplace(profile, effective, Mode::kInid, p);
}

double PureDpCheck(const SensitivityProfile& profile,
                   const NoiseScales& scales) {
  if (scales.mechanism != Mechanism::kLaplace) {
    throw std::invalid_argument(
        "pure DP check applies to Laplace scales only");
  }
  if (scales.scales.size() != profile.size()) {
    throw std::invalid_argument(
        "pure DP check: scales and profile lengths differ");
  }
  double budget = 0.0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] == 0.0) continue;
    if (scales.scales[i] == 0.0) {
      throw std::domain_error(
          "pure DP check: zero scale on a coordinate with positive "
          "sensitivity implies an infinite budget");
    }
    budget += profile[i] / scales.scales[i];
  }
  return budget;
}

}  // namespace inid
