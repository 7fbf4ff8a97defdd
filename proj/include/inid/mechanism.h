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

#ifndef INID_MECHANISM_H_
#define INID_MECHANISM_H_

#include <cstdint>
#include <vector>

#include "inid/profile.h"
#include "inid/types.h"

namespace inid {

// Deterministic random source: identical (seed, stream_id) pairs reproduce
// identical sequences across runs and platforms. Substreams are derived by
// remixing the seed with the stream id, so parallel workers can each own one
// and the aggregate stays reproducible independent of scheduling.
//
// Gaussian and Laplace variates use inverse-CDF transforms of explicitly
// constructed 53-bit uniforms; no implementation-defined std distributions.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed, std::uint64_t stream_id = 0);

  SeededRng Substream(std::uint64_t stream_id) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  // Uniform on the open interval (0, 1).
  double Uniform01();
  // N(0, sigma^2); sigma = 0 yields exactly 0.
  double Gaussian(double sigma);
  // Laplace(0, scale) via sign x exponential; scale = 0 yields exactly 0.
  double Laplace(double scale);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t state_[4];  // xoshiro256++
  std::uint64_t Next();
};

// One noise vector with independent coordinates distributed per the scales.
std::vector<double> SampleNoise(const NoiseScales& scales, SeededRng& rng);

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long n_samples = 0;
};

// Monte-Carlo estimate of E[||T||_p^p] under the scales.
MonteCarloEstimate EmpiricalLpError(const NoiseScales& scales, double p, long n,
                                    SeededRng& rng);

struct PrivacyLossTail {
  // Exact value of the privacy profile at the worst-case shift.
  double analytic = 0.0;
  // The shift used: d = lambda componentwise (signs are irrelevant by
  // symmetry, and |d_i| = lambda_i maximizes the loss).
  std::vector<double> worst_case_d;
};

// Closed-form tail of the Gaussian privacy loss at shift d = lambda:
// the loss is N(||m||^2/2, ||m||^2) with m = d / sigma, so the profile value
// is Q(eps/||m|| - ||m||/2) - e^eps Q(eps/||m|| + ||m||/2).
// Throws std::invalid_argument for non-Gaussian scales.
PrivacyLossTail GaussianPrivacyLossTail(const NoiseScales& scales,
                                        const SensitivityProfile& profile,
                                        double epsilon);

struct AuditReport {
  double epsilon = 0.0;
  double delta_target = 0.0;
  // Estimate of P{loss_d(T) >= eps} - e^eps P{loss_{-d}(T) <= -eps} at the
  // worst-case d; for a correctly calibrated mechanism this should not
  // exceed delta_target by more than ~4 standard errors.
  double empirical_profile = 0.0;
  double std_error = 0.0;
  long n_samples = 0;
  std::vector<double> worst_case_d;
  // Largest privacy-loss sample seen; for Laplace it can never exceed
  // sum_i lambda_i / beta_i.
  double max_loss = 0.0;
};

// Monte-Carlo audit of the (epsilon, delta) guarantee: draws noise, evaluates
// both privacy losses in closed form at d = lambda, and estimates the
// privacy-profile functional with its standard error. Requires n >= 10^4.
// A zero scale on a coordinate with positive sensitivity throws.
AuditReport Audit(const NoiseScales& scales, const SensitivityProfile& profile,
                  double epsilon, long n, SeededRng& rng);

}  // namespace inid

#endif  // INID_MECHANISM_H_
