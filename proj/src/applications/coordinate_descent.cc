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

#include "inid/applications/coordinate_descent.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "inid/gaussian.h"
#include "inid/laplace.h"

namespace inid {
namespace {

constexpr double kReferenceTolerance = 1e-10;
constexpr int kReferenceMaxPasses = 200000;
constexpr double kSmoothnessFloorFraction = 1e-6;

double Clip(double value, double bound) {
  return std::max(-bound, std::min(bound, value));
}

double Prox(RegularizerKind kind, double strength, double step, double value) {
  if (kind == RegularizerKind::kL1) {
    // soft threshold for psi(t) = strength * |t|
    const double threshold = step * strength;
    if (value > threshold) return value - threshold;
    if (value < -threshold) return value + threshold;
    return 0.0;
  }
  // psi(t) = (strength / 2) * t^2
  return value / (1.0 + step * strength);
}

// Per-sample coordinate gradient; `margin` caches x_n . theta for least
// squares residuals or y_n * (x_n . theta) for logistic margins.
double SampleGradient(LossKind loss, const Dataset& data, int n, int i,
                      double margin) {
  if (loss == LossKind::kLeastSquares) {
    return data.features(n, i) * (margin - data.labels(n));
  }
  const double s = 1.0 / (1.0 + std::exp(margin));
  return -data.labels(n) * data.features(n, i) * s;
}

std::vector<double> SmoothnessFromData(LossKind loss, const Dataset& data) {
  const int n = static_cast<int>(data.features.rows());
  const int k = static_cast<int>(data.features.cols());
  const double factor = loss == LossKind::kLeastSquares ? 1.0 : 0.25;
  std::vector<double> smoothness(k);
  for (int i = 0; i < k; ++i) {
    smoothness[i] = factor * data.features.col(i).squaredNorm() / n;
  }
  return smoothness;
}

struct ReferenceKey {
  std::size_t data_hash;
  LossKind loss;
  RegularizerKind regularizer;
  double strength;
  bool operator<(const ReferenceKey& other) const {
    return std::tie(data_hash, loss, regularizer, strength) <
           std::tie(other.data_hash, other.loss, other.regularizer,
                    other.strength);
  }
};

std::size_t HashDataset(const Dataset& data) {
  std::size_t h = 1469598103934665603ULL;
  auto mix = [&h](double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    h ^= bits;
    h *= 1099511628211ULL;
  };
  for (Eigen::Index i = 0; i < data.features.size(); ++i) {
    mix(data.features.data()[i]);
  }
  for (Eigen::Index i = 0; i < data.labels.size(); ++i) {
    mix(data.labels(i));
  }
  return h;
}

// Noiseless proximal CD to the composite-gradient fixed point; the result is
// the comparison target for the relative-error trajectories.
Eigen::VectorXd SolveReference(const DpCdConfig& config, const Dataset& data) {
  const int n = static_cast<int>(data.features.rows());
  const int k = static_cast<int>(data.features.cols());
  const std::vector<double> smoothness = SmoothnessFromData(config.loss, data);
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(k);
  Eigen::VectorXd margin(n);
  if (config.loss == LossKind::kLeastSquares) {
    margin.setZero();
  } else {
    margin.setZero();  // y_n * x_n.theta with theta = 0
  }
  for (int pass = 0; pass < kReferenceMaxPasses; ++pass) {
    double max_residual = 0.0;
    for (int i = 0; i < k; ++i) {
      const double step = 1.0 / smoothness[i];
      double grad = 0.0;
      for (int s = 0; s < n; ++s) {
        grad += SampleGradient(config.loss, data, s, i, margin(s));
      }
      grad /= n;
      const double updated =
          Prox(config.regularizer, config.regularizer_strength, step,
               theta(i) - step * grad);
      const double delta = updated - theta(i);
      // composite gradient mapping for the stopping rule
      max_residual = std::max(max_residual, std::fabs(delta) / step);
      if (delta != 0.0) {
        if (config.loss == LossKind::kLeastSquares) {
          margin += delta * data.features.col(i);
        } else {
          margin += delta * (data.features.col(i).array() *
                             data.labels.array()).matrix();
        }
        theta(i) = updated;
      }
    }
    if (max_residual <= kReferenceTolerance) break;
  }
  return theta;
}

const Eigen::VectorXd& CachedReference(const DpCdConfig& config,
                                       const Dataset& data) {
  static std::mutex mutex;
  static std::map<ReferenceKey, Eigen::VectorXd> cache;
  const ReferenceKey key{HashDataset(data), config.loss, config.regularizer,
                         config.regularizer_strength};
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, SolveReference(config, data)).first;
  }
  return it->second;
}

}  // namespace

Dataset LoadDatasetCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset file: " + path);
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("dataset file is empty: " + path);
  }
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw std::runtime_error("dataset file has ragged rows: " + path);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.front().size() < 2) {
    throw std::runtime_error(
        "dataset needs at least one row and two columns (features + label)");
  }
  Dataset data;
  const int n = static_cast<int>(rows.size());
  const int k = static_cast<int>(rows.front().size()) - 1;
  data.features.resize(n, k);
  data.labels.resize(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < k; ++c) data.features(r, c) = rows[r][c];
    data.labels(r) = rows[r][k];
  }
  return data;
}

Dataset SyntheticRegression(int n, int k, SeededRng& rng, double scale_lo,
                            double scale_hi, double rho) {
  Dataset data;
  data.features.resize(n, k);
  data.labels.resize(n);
  std::vector<double> scales(k);
  const double log_lo = std::log(scale_lo);
  const double log_hi = std::log(scale_hi);
  for (int i = 0; i < k; ++i) {
    scales[i] = std::exp(log_lo + (log_hi - log_lo) * rng.Uniform01());
  }
  Eigen::VectorXd truth(k);
  for (int i = 0; i < k; ++i) truth(i) = rng.Gaussian(1.0);
  const double shared = std::sqrt(rho);
  const double own = std::sqrt(1.0 - rho);
  for (int r = 0; r < n; ++r) {
    const double factor = rng.Gaussian(1.0);
    for (int c = 0; c < k; ++c) {
      data.features(r, c) =
          scales[c] * (shared * factor + own * rng.Gaussian(1.0));
    }
    data.labels(r) = data.features.row(r).dot(truth) + 0.1 * rng.Gaussian(1.0);
  }
  const double mean = data.labels.mean();
  const double stddev =
      std::sqrt((data.labels.array() - mean).square().mean());
  data.labels = (data.labels.array() - mean) / stddev;
  return data;
}

Dataset SyntheticClassification(int n, int k, SeededRng& rng, double scale_lo,
                                double scale_hi, double rho) {
  Dataset data = SyntheticRegression(n, k, rng, scale_lo, scale_hi, rho);
  for (int r = 0; r < n; ++r) {
    const double p = 1.0 / (1.0 + std::exp(-2.0 * data.labels(r)));
    data.labels(r) = rng.Uniform01() < p ? 1.0 : -1.0;
  }
  return data;
}

std::vector<double> EstimateSmoothnessPrivate(const Eigen::MatrixXd& features,
                                              const std::vector<double>& bounds,
                                              double eps_prime, SeededRng& rng) {
  if (!(eps_prime > 0.0)) {
    throw std::domain_error("smoothness estimation: eps' must be positive");
  }
  const int n = static_cast<int>(features.rows());
  const int k = static_cast<int>(features.cols());
  if (static_cast<int>(bounds.size()) != k) {
    throw std::invalid_argument("smoothness estimation: need one bound per column");
  }
  std::vector<double> estimates(k);
  for (int i = 0; i < k; ++i) {
    if (!(bounds[i] > 0.0)) {
      throw std::domain_error("smoothness estimation: bounds must be positive");
    }
    const double cap = bounds[i] * bounds[i];
    double mean = 0.0;
    for (int r = 0; r < n; ++r) {
      mean += std::min(features(r, i) * features(r, i), cap);
    }
    mean /= n;
    const double noise_scale =
        std::isinf(eps_prime) ? 0.0 : cap * k / (n * eps_prime);
    estimates[i] = mean + noise_scale * rng.Laplace(1.0);
  }
  // Floor negative/near-zero noisy estimates so step sizes stay finite.
  const double max_estimate =
      *std::max_element(estimates.begin(), estimates.end());
  const double floor = max_estimate > 0.0
                           ? kSmoothnessFloorFraction * max_estimate
                           : kSmoothnessFloorFraction;
  for (double& m : estimates) m = std::max(m, floor);
  return estimates;
}

double Objective(const DpCdConfig& config, const Dataset& data,
                 const Eigen::VectorXd& theta) {
  const int n = static_cast<int>(data.features.rows());
  double loss = 0.0;
  for (int r = 0; r < n; ++r) {
    const double pred = data.features.row(r).dot(theta);
    if (config.loss == LossKind::kLeastSquares) {
      const double e = pred - data.labels(r);
      loss += 0.5 * e * e;
    } else {
      // log(1 + exp(-m)) evaluated stably
      const double m = data.labels(r) * pred;
      loss += m > 0.0 ? std::log1p(std::exp(-m)) : -m + std::log1p(std::exp(m));
    }
  }
  loss /= n;
  if (config.regularizer == RegularizerKind::kL1) {
    loss += config.regularizer_strength * theta.lpNorm<1>();
  } else {
    loss += 0.5 * config.regularizer_strength * theta.squaredNorm();
  }
  return loss;
}

DpCdResult DpCdRun(const DpCdConfig& config, const Dataset& data,
                   SeededRng& rng) {
  const int n = static_cast<int>(data.features.rows());
  const int k = static_cast<int>(data.features.cols());
  if (n < 1 || k < 1) {
    throw std::invalid_argument("DP-CD: dataset must be nonempty");
  }
  if (config.passes < 1) {
    throw std::invalid_argument("DP-CD: passes must be >= 1");
  }

  double epsilon_opt = config.budget.epsilon;
  std::vector<double> smoothness = config.smoothness;
  if (config.estimate_smoothness && !config.noiseless) {
    if (!smoothness.empty()) {
      throw std::invalid_argument(
          "DP-CD: smoothness constants are either given or estimated, not both");
    }
    const double fraction = config.estimation.epsilon_fraction;
    if (!(fraction > 0.0 && fraction < 1.0)) {
      throw std::invalid_argument(
          "DP-CD: estimation budget fraction eps'/eps must lie in (0, 1)");
    }
    const double eps_prime = fraction * config.budget.epsilon;
    smoothness = EstimateSmoothnessPrivate(
        data.features, config.estimation.feature_bounds, eps_prime, rng);
    if (config.loss == LossKind::kLogistic) {
      for (double& m : smoothness) m *= 0.25;
    }
    epsilon_opt -= eps_prime;
  } else if (smoothness.empty()) {
    smoothness = SmoothnessFromData(config.loss, data);
  }
  if (static_cast<int>(smoothness.size()) != k) {
    throw std::invalid_argument("DP-CD: need one smoothness constant per column");
  }

  // Step sizes, clip constants and the induced sensitivity profile.
  double smoothness_sum = 0.0;
  for (double m : smoothness) smoothness_sum += m;
  std::vector<double> steps(k), clips(k), lambda(k);
  for (int i = 0; i < k; ++i) {
    if (!(smoothness[i] > 0.0)) {
      throw std::domain_error("DP-CD: smoothness constants must be positive");
    }
    steps[i] = config.step_scale / smoothness[i];
    clips[i] = config.clip_scale * std::sqrt(smoothness[i] / smoothness_sum);
    lambda[i] = 2.0 * steps[i] * clips[i] / n;  // replace-one adjacency
  }

  // Per-pass noise scales: the total resource is split equally across passes.
  NoiseScales scales;
  double per_pass_resource = 0.0;
  if (!config.noiseless) {
    const SensitivityProfile profile{lambda};
    if (config.mechanism == Mechanism::kGaussian) {
      const double mu_total =
          CachedMu0({epsilon_opt, config.budget.delta});
      const double mu_pass = mu_total / std::sqrt(double(config.passes));
      scales = CalibrateGaussianWithMu0(profile, mu_pass, config.mode, 2.0);
      for (int i = 0; i < k; ++i) {
        per_pass_resource +=
            0.5 * lambda[i] * lambda[i] / (scales.scales[i] * scales.scales[i]);
      }
    } else {
      scales = CalibrateLaplace(profile, epsilon_opt / config.passes,
                                config.mode, 2.0);
      per_pass_resource = PureDpCheck(profile, scales);
    }
  } else {
    scales.scales.assign(k, 0.0);
  }

  const Eigen::VectorXd reference = CachedReference(config, data);
  const double reference_objective = Objective(config, data, reference);

  DpCdResult result;
  result.lambda = lambda;
  result.per_pass_resource = per_pass_resource;
  result.reference_objective = reference_objective;

  Eigen::VectorXd theta = Eigen::VectorXd::Zero(k);
  Eigen::VectorXd margin = Eigen::VectorXd::Zero(n);
  for (int pass = 0; pass < config.passes; ++pass) {
    for (int i = 0; i < k; ++i) {
      double grad = 0.0;
      for (int s = 0; s < n; ++s) {
        const double g = SampleGradient(config.loss, data, s, i, margin(s));
        grad += config.noiseless ? g : Clip(g, clips[i]);
      }
      grad /= n;
      if (!std::isfinite(grad)) {
        throw std::runtime_error(
            "DP-CD: non-finite clipped gradient at pass " +
            std::to_string(pass) + ", coordinate " + std::to_string(i));
      }
      const double noise = config.noiseless
                               ? 0.0
                               : (config.mechanism == Mechanism::kGaussian
                                      ? rng.Gaussian(scales.scales[i])
                                      : rng.Laplace(scales.scales[i]));
      const double updated =
          Prox(config.regularizer, config.regularizer_strength, steps[i],
               theta(i) - steps[i] * grad + noise);
      const double delta = updated - theta(i);
      if (delta != 0.0) {
        if (config.loss == LossKind::kLeastSquares) {
          margin += delta * data.features.col(i);
        } else {
          margin += delta * (data.features.col(i).array() *
                             data.labels.array()).matrix();
        }
        theta(i) = updated;
      }
    }
    result.relative_errors.push_back(
        (Objective(config, data, theta) - reference_objective) /
        reference_objective);
  }
  result.theta = theta;
  return result;
}

}  // namespace inid
