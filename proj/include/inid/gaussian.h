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

#ifndef INID_GAUSSIAN_H_
#define INID_GAUSSIAN_H_

#include "inid/numerics.h"
#include "inid/profile.h"
#include "inid/types.h"

namespace inid {

// The exact (epsilon, delta) trade-off of a Gaussian mechanism with effective
// parameter mu: Q(eps/mu - mu/2) - e^eps * Q(eps/mu + mu/2). Monotone
// increasing in mu, with range (-e^eps, 1). Throws for mu <= 0.
double PrivacyProfile(double mu, const PrivacyBudget& budget);

struct GaussianSolverResult {
  // Largest mu with PrivacyProfile(mu) <= delta, up to the tolerance; taken
  // as the lower endpoint of the final bracket so the privacy constraint is
  // met conservatively.
  double mu0 = 0.0;
  double bracket_lo = 0.0;   // R_eps(delta)
  double bracket_hi = 0.0;   // R_eps(delta')
  double delta_prime = 0.0;  // delta + e^eps * Q(sqrt(2 eps))
  int iterations = 0;
};

// Initial bracket endpoint R_eps(a) = sqrt(QInv(a)^2 + 2 eps) - QInv(a),
// the root of Q(eps/mu - mu/2) = a.
double GaussianBracket(double epsilon, double a);

// Solves for mu0 by bisection on [R_eps(delta), R_eps(delta')].
// Requires delta in (0, 1): delta = 0 (pure DP) and the degenerate
// delta >= 1 - 1e-12 or delta <= 1e-300 are rejected.
GaussianSolverResult SolveMu0(const PrivacyBudget& budget,
                              const BisectionConfig& config = {});

// mu0 for the budget, memoized: calibrating many profiles under one budget
// solves the root-finding problem once.
double CachedMu0(const PrivacyBudget& budget);

// Per-coordinate Gaussian scales for expected lp^p error, p in [1, inf):
//   iid:  sigma_i = ||lambda||_2 / mu0
//   spr:  sigma_i = sqrt(K) * lambda_i / mu0
//   inid: sigma_i^2 = lambda_i^{4/(p+2)} / mu0^2 * sum_j lambda_j^{2p/(p+2)}
// Zero-sensitivity coordinates get zero scale in the spr and inid modes.
NoiseScales CalibrateGaussian(const SensitivityProfile& profile,
                              const PrivacyBudget& budget, Mode mode,
                              double p = 2.0);

// Same calibration against a precomputed effective parameter; lets callers
// that split a privacy resource across rounds reuse one solve.
NoiseScales CalibrateGaussianWithMu0(const SensitivityProfile& profile,
                                     double mu0, Mode mode, double p = 2.0);

}  // namespace inid

#endif  // INID_GAUSSIAN_H_
