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

#ifndef INID_APPLICATIONS_PCA_H_
#define INID_APPLICATIONS_PCA_H_

#include <vector>

#include "inid/mechanism.h"
#include "inid/profile.h"
#include "inid/types.h"

namespace inid {

// Sensitivity profile for releasing the upper triangle of the second-moment
// matrix of unit-norm users, K = M(M+1)/2 coordinates in row-major order:
// diagonal entries carry 1/sqrt(K), off-diagonals 1/sqrt(2K) (they appear
// twice after symmetrization), rescaled so the l2 norm is exactly 1.
SensitivityProfile PcaProfile(int n_features);

struct DpPcaConfig {
  int n_users = 100;    // N
  int n_features = 10;  // M
  int rank = 3;         // r <= M
  PrivacyBudget budget;
  Mechanism mechanism = Mechanism::kGaussian;
  Mode mode = Mode::kInid;  // iid or inid
  int trials = 100;
  bool noiseless = false;
};

struct DpPcaResult {
  double mean_sre = 0.0;
  std::vector<double> trial_sre;
  int discarded_trials = 0;  // eigensolver failures, redrawn
};

// Per trial: users drawn from a fully random rank-r subspace with unit-norm
// columns, per-user second-moment matrices entrywise clipped to the profile
// sensitivities and summed, noise added to the upper-triangular coordinates,
// symmetrized, eigendecomposed. Reports the subspace recovery error
// ||(I - U_hat U_hat^T) U||_F / ||U||_F averaged over trials.
DpPcaResult DpPcaRun(const DpPcaConfig& config, const SeededRng& rng);

}  // namespace inid

#endif  // INID_APPLICATIONS_PCA_H_
