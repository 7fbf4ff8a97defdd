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

#include "inid/applications/pca.h"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include <Eigen/Dense>

#include "inid/gaussian.h"
#include "inid/laplace.h"

namespace inid {
namespace {

NoiseScales CalibratePca(const DpPcaConfig& config,
                         const SensitivityProfile& profile) {
  if (config.mechanism == Mechanism::kGaussian) {
    return CalibrateGaussian(profile, config.budget, config.mode, 2.0);
  }
  // Laplace runs at pure epsilon-DP.
  return CalibrateLaplace(profile, config.budget.epsilon, config.mode, 2.0);
}

// One trial; returns the SRE or a negative value if the eigensolver failed.
double RunTrial(const DpPcaConfig& config, const SensitivityProfile& profile,
                const NoiseScales& scales, SeededRng rng) {
  const int m = config.n_features;
  const int r = config.rank;

  // Fully random r-dimensional subspace: orthonormal basis from a Gaussian
  // draw, users as normalized random combinations.
  Eigen::MatrixXd raw(m, r);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < r; ++j) raw(i, j) = rng.Gaussian(1.0);
  }
  const Eigen::MatrixXd basis =
      Eigen::HouseholderQR<Eigen::MatrixXd>(raw).householderQ() *
      Eigen::MatrixXd::Identity(m, r);

  Eigen::MatrixXd noisy = Eigen::MatrixXd::Zero(m, m);
  for (int user = 0; user < config.n_users; ++user) {
    Eigen::VectorXd coeff(r);
    for (int j = 0; j < r; ++j) coeff(j) = rng.Gaussian(1.0);
    Eigen::VectorXd x = basis * coeff;
    const double norm = x.norm();
    if (norm == 0.0) continue;  // probability zero
    x /= norm;
    // Entrywise clip of x x^T to the per-coordinate sensitivities before
    // accumulation; only the upper triangle is tracked. The zero-noise limit
    // releases the exact second-moment matrix, so it skips the clip too.
    int coordinate = 0;
    for (int i = 0; i < m; ++i) {
      for (int j = i; j < m; ++j, ++coordinate) {
        const double bound = profile[coordinate];
        const double value = x(i) * x(j);
        noisy(i, j) += config.noiseless
                           ? value
                           : std::max(-bound, std::min(bound, value));
      }
    }
  }

  // Perturb the upper triangle, then replicate to the lower triangle so the
  // released matrix is symmetric bit-for-bit.
  int coordinate = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j, ++coordinate) {
      if (!config.noiseless) {
        const double s = scales.scales[coordinate];
        noisy(i, j) += config.mechanism == Mechanism::kGaussian
                           ? rng.Gaussian(s)
                           : rng.Laplace(s);
      }
      noisy(j, i) = noisy(i, j);
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(noisy);
  if (solver.info() != Eigen::Success) return -1.0;
  const Eigen::MatrixXd top = solver.eigenvectors().rightCols(r);
  // ||(I - U_hat U_hat^T) U||_F / ||U||_F with ||U||_F = sqrt(r).
  const Eigen::MatrixXd residual = basis - top * (top.transpose() * basis);
  return residual.norm() / std::sqrt(static_cast<double>(r));
}

}  // namespace

SensitivityProfile PcaProfile(int n_features) {
  if (n_features < 1) {
    throw std::invalid_argument("PCA profile: needs at least one feature");
  }
  const int m = n_features;
  const int k = m * (m + 1) / 2;
  std::vector<double> lambda;
  lambda.reserve(k);
  const double diagonal = 1.0 / std::sqrt(static_cast<double>(k));
  const double off_diagonal = 1.0 / std::sqrt(2.0 * k);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      lambda.push_back(i == j ? diagonal : off_diagonal);
    }
  }
  double norm = 0.0;
  for (double x : lambda) norm += x * x;
  norm = std::sqrt(norm);
  for (double& x : lambda) x /= norm;
  return SensitivityProfile(std::move(lambda));
}

DpPcaResult DpPcaRun(const DpPcaConfig& config, const SeededRng& rng) {
  if (config.rank < 1 || config.rank > config.n_features) {
    throw std::invalid_argument("DP-PCA: requires 1 <= rank <= n_features");
  }
  if (config.n_users < 1 || config.trials < 1) {
    throw std::invalid_argument("DP-PCA: n_users and trials must be positive");
  }
  if (config.mode == Mode::kSpr) {
    throw std::invalid_argument("DP-PCA: supported modes are iid and inid");
  }
  const SensitivityProfile profile = PcaProfile(config.n_features);
  NoiseScales scales;
  if (!config.noiseless) {
    scales = CalibratePca(config, profile);
  } else {
    scales.mechanism = config.mechanism;
    scales.scales.assign(profile.size(), 0.0);
  }

  DpPcaResult result;
  result.trial_sre.reserve(config.trials);
  std::uint64_t next_stream = 0;
  while (result.trial_sre.size() < static_cast<std::size_t>(config.trials)) {
    const double sre = RunTrial(config, profile, scales,
                                rng.Substream(next_stream++));
    if (sre < 0.0) {
      ++result.discarded_trials;
      std::cerr << "DP-PCA: eigendecomposition failed, redrawing trial\n";
      continue;
    }
    result.trial_sre.push_back(sre);
  }
  double sum = 0.0;
  for (double v : result.trial_sre) sum += v;
  result.mean_sre = sum / config.trials;
  return result;
}

}  // namespace inid
