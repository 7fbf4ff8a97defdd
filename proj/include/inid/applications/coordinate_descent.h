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

#ifndef INID_APPLICATIONS_COORDINATE_DESCENT_H_
#define INID_APPLICATIONS_COORDINATE_DESCENT_H_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "inid/mechanism.h"
#include "inid/types.h"

namespace inid {

enum class LossKind { kLeastSquares, kLogistic };
enum class RegularizerKind { kL1, kL2 };

struct Dataset {
  Eigen::MatrixXd features;  // N x K
  Eigen::VectorXd labels;    // real targets, or +/-1 for logistic
};

// CSV with a header row, numeric columns, last column = label.
Dataset LoadDatasetCsv(const std::string& path);

// Regression data with disparate column scales (drawn log-uniformly over
// [scale_lo, scale_hi]) so the coordinate-wise smoothness profile is spread.
// Columns share a common latent factor with weight rho, and labels are
// standardized to zero mean and unit variance.
Dataset SyntheticRegression(int n, int k, SeededRng& rng, double scale_lo = 0.3,
                            double scale_hi = 3.0, double rho = 0.5);
// Same feature model with +/-1 labels from a logistic teacher.
Dataset SyntheticClassification(int n, int k, SeededRng& rng,
                                double scale_lo = 0.3, double scale_hi = 3.0,
                                double rho = 0.5);

// Private per-coordinate means of squared features:
//   (1/N) sum_n clip(x_{n,i}^2, b_i^2) + (b_i^2 K / (N eps')) * standard
// Laplace noise. Estimates are floored at 1e-6 times the largest estimate so
// downstream step sizes stay finite. eps_prime = +infinity gives the exact
// clipped means.
std::vector<double> EstimateSmoothnessPrivate(const Eigen::MatrixXd& features,
                                              const std::vector<double>& bounds,
                                              double eps_prime, SeededRng& rng);

struct SmoothnessEstimationSpec {
  // Fraction of epsilon spent on estimation; must lie in (0, 1). The
  // remaining budget drives the optimization (basic composition; delta is
  // left untouched because the estimation step is pure-DP Laplace).
  double epsilon_fraction = 0.1;
  std::vector<double> feature_bounds;  // b_i, positive
};

struct DpCdConfig {
  LossKind loss = LossKind::kLeastSquares;
  RegularizerKind regularizer = RegularizerKind::kL2;
  double regularizer_strength = 1e-3;
  int passes = 20;          // L; the resource is split equally across passes
  double step_scale = 1.0;  // tau, per-coordinate step is tau / M_i
  double clip_scale = 1.0;  // C, per-coordinate clip is C sqrt(M_i / sum M_j)
  PrivacyBudget budget;
  Mechanism mechanism = Mechanism::kGaussian;
  Mode mode = Mode::kInid;
  // Known coordinate-wise smoothness constants. When empty they are computed
  // from the data directly (treated as given, the generalized-linear-model
  // case), unless estimate_smoothness asks for the private estimate.
  std::vector<double> smoothness;
  bool estimate_smoothness = false;
  SmoothnessEstimationSpec estimation;
  // Budget -> infinity limit: plain proximal CD, no clipping and no noise.
  bool noiseless = false;
};

struct DpCdResult {
  // (J(theta^(l)) - J*) / J* after each pass, against the noiseless optimum.
  std::vector<double> relative_errors;
  Eigen::VectorXd theta;
  std::vector<double> lambda;       // per-coordinate sensitivities 2 tau_i C_i / N
  double per_pass_resource = 0.0;   // realized resource of one pass
  double reference_objective = 0.0; // J(theta*)
};

// Proximal coordinate descent with per-sample gradient clipping and additive
// noise inside the proximal step; noise scales come from the Gaussian or
// Laplace calibration for the per-pass share of the budget.
DpCdResult DpCdRun(const DpCdConfig& config, const Dataset& data,
                   SeededRng& rng);

// Full objective J(theta) = (1/N) sum_n loss_n + psi(theta).
double Objective(const DpCdConfig& config, const Dataset& data,
                 const Eigen::VectorXd& theta);

}  // namespace inid

#endif  // INID_APPLICATIONS_COORDINATE_DESCENT_H_
