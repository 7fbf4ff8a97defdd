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

#ifndef INID_LAPLACE_H_
#define INID_LAPLACE_H_

#include "inid/profile.h"
#include "inid/types.h"

namespace inid {

// Per-coordinate Laplace scales for pure epsilon-DP and expected lp^p error,
// p in [1, inf):
//   iid:  beta_i = ||lambda||_1 / epsilon
//   spr:  beta_i = K * lambda_i / epsilon
//   inid: beta_i = lambda_i^{1/(p+1)} / epsilon * sum_j lambda_j^{p/(p+1)}
// Zero-sensitivity coordinates get zero scale in the spr and inid modes.
// Note Laplace(0, beta) has variance 2 beta^2; for p = 2 the theoretical
// error is 2 * sum_i beta_i^2.
NoiseScales CalibrateLaplace(const SensitivityProfile& profile, double epsilon,
                             Mode mode, double p = 2.0);

// (epsilon, delta)-DP relaxation: identical to the pure-DP inid calibration
// at the effective budget epsilon - log(1 - delta). Requires delta in [0, 1)
// and a positive effective budget.
NoiseScales CalibrateLaplaceApproxDp(const SensitivityProfile& profile,
                                     const PrivacyBudget& budget,
                                     double p = 2.0);

// Realized pure-DP budget sum_i lambda_i / beta_i (the deterministic supremum
// of the privacy loss). Zero-sensitivity coordinates are excluded; a zero
// scale on a sensitive coordinate is an infinite budget and throws.
double PureDpCheck(const SensitivityProfile& profile, const NoiseScales& scales);

}  // namespace inid

#endif  // INID_LAPLACE_H_
