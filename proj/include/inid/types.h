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

#ifndef INID_TYPES_H_
#define INID_TYPES_H_

#include <string>
#include <vector>

namespace inid {

enum class Mechanism { kGaussian, kLaplace };
enum class Mode { kIid, kSpr, kInid };

std::string ToString(Mechanism mechanism);
std::string ToString(Mode mode);
Mechanism MechanismFromString(const std::string& name);
Mode ModeFromString(const std::string& name);

struct PrivacyBudget {
  double epsilon = 0.0;
  // delta = 0 marks pure DP.
  double delta = 0.0;
};

// Throws std::domain_error unless epsilon >= 0 and delta in [0, 1].
void Validate(const PrivacyBudget& budget);

// Per-coordinate noise scales (sigma_i for Gaussian, beta_i for Laplace)
// together with the expected lp^p error they induce.
struct NoiseScales {
  Mechanism mechanism = Mechanism::kGaussian;
  Mode mode = Mode::kInid;
  double error_order_p = 2.0;
  std::vector<double> scales;
  // E[||T||_p^p] under the scales above; for p = 2 this is the MSE.
  double theoretical_error = 0.0;
};

// Recomputes the expected lp^p error from the scales via the closed-form
// absolute moments (used to check NoiseScales consistency).
double TheoreticalLpError(Mechanism mechanism, const std::vector<double>& scales,
                          double p);

}  // namespace inid

#endif  // INID_TYPES_H_
