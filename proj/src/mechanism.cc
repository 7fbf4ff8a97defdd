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

#include "inid/mechanism.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "inid/gaussian.h"
#include "inid/numerics.h"

namespace inid {
namespace {

std::uint64_t SplitMix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t RotL(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

// Order-independent compensated accumulator for the Monte-Carlo reductions.
class KahanSum {
 public:
  void Add(double value) {
    const double y = value - compensation_;
    const double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

void CheckPositiveScalesWhereSensitive(const NoiseScales& scales,
                                       const SensitivityProfile& profile) {
  if (scales.scales.size() != profile.size()) {
    throw std::invalid_argument("scales and profile lengths differ");
  }
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] > 0.0 && scales.scales[i] == 0.0) {
      throw std::domain_error(
          "zero noise scale on a coordinate with positive sensitivity: "
          "privacy loss is unbounded");
    }
  }
}

}  // namespace

SeededRng::SeededRng(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  // splitmix64 over (seed, stream) fills the xoshiro256++ state; distinct
  // streams from one seed are statistically independent.
  std::uint64_t mix = seed ^ (0xA0761D6478BD642FULL * (stream_id + 1));
  for (auto& word : state_) word = SplitMix64(mix);
}

SeededRng SeededRng::Substream(std::uint64_t stream_id) const {
  return SeededRng(seed_, stream_id);
}

std::uint64_t SeededRng::Next() {
  const std::uint64_t result = RotL(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = RotL(state_[3], 45);
  return result;
}

double SeededRng::Uniform01() {
  // 53 random bits, centered in the bin: strictly inside (0, 1).
  return (static_cast<double>(Next() >> 11) + 0.5) * 0x1.0p-53;
}

double SeededRng::Gaussian(double sigma) {
  if (sigma == 0.0) return 0.0;
  return sigma * GaussianQInv(Uniform01());
}

double SeededRng::Laplace(double scale) {
  if (scale == 0.0) return 0.0;
  const double u = Uniform01();
  return (u < 0.5) ? scale * std::log(2.0 * u)
                   : -scale * std::log(2.0 * (1.0 - u));
}

std::vector<double> SampleNoise(const NoiseScales& scales, SeededRng& rng) {
  std::vector<double> noise(scales.scales.size());
  if (scales.mechanism == Mechanism::kGaussian) {
    for (std::size_t i = 0; i < noise.size(); ++i) {
      noise[i] = rng.Gaussian(scales.scales[i]);
    }
  } else {
    for (std::size_t i = 0; i < noise.size(); ++i) {
      noise[i] = rng.Laplace(scales.scales[i]);
    }
  }
  return noise;
}

MonteCarloEstimate EmpiricalLpError(const NoiseScales& scales, double p, long n,
                                    SeededRng& rng) {
  if (n < 1) throw std::invalid_argument("EmpiricalLpError: n must be >= 1");
  KahanSum sum;
  KahanSum sum_sq;
  for (long j = 0; j < n; ++j) {
    double lp = 0.0;
    for (double s : scales.scales) {
      const double t = scales.mechanism == Mechanism::kGaussian
                           ? rng.Gaussian(s)
                           : rng.Laplace(s);
      lp += std::pow(std::fabs(t), p);
    }
    sum.Add(lp);
    sum_sq.Add(lp * lp);
  }
  MonteCarloEstimate out;
  out.n_samples = n;
  out.mean = sum.value() / n;
  const double var =
      std::max(0.0, (sum_sq.value() / n - out.mean * out.mean) * n / (n - 1.0));
  out.std_error = n > 1 ? std::sqrt(var / n) : 0.0;
  return out;
}

PrivacyLossTail GaussianPrivacyLossTail(const NoiseScales& scales,
                                        const SensitivityProfile& profile,
                                        double epsilon) {
  if (scales.mechanism != Mechanism::kGaussian) {
    throw std::invalid_argument(
        "Gaussian privacy-loss tail applies to Gaussian scales only");
  }
  CheckPositiveScalesWhereSensitive(scales, profile);
  PrivacyLossTail out;
  out.worst_case_d = profile.lambda();
  double mu_sq = 0.0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] == 0.0) continue;
    const double m = profile[i] / scales.scales[i];
    mu_sq += m * m;
  }
  const double mu = std::sqrt(mu_sq);
  // mu -> 0 means the shifted and unshifted outputs coincide: zero leakage.
  out.analytic = mu > 0.0 ? PrivacyProfile(mu, {epsilon, 0.0}) : 0.0;
  return out;
}

AuditReport Audit(const NoiseScales& scales, const SensitivityProfile& profile,
                  double epsilon, long n, SeededRng& rng) {
  if (n < 10000) {
    throw std::invalid_argument("Audit: needs n >= 10^4 samples");
  }
  CheckPositiveScalesWhereSensitive(scales, profile);
  const std::size_t k = profile.size();
  const bool gaussian = scales.mechanism == Mechanism::kGaussian;
  const double amplification = std::exp(epsilon);

  // Constant part of the Gaussian loss, sum_i d_i^2 / (2 sigma_i^2).
  double gaussian_offset = 0.0;
  if (gaussian) {
    for (std::size_t i = 0; i < k; ++i) {
      if (profile[i] == 0.0) continue;
      const double m = profile[i] / scales.scales[i];
      gaussian_offset += 0.5 * m * m;
    }
  }

  KahanSum sum;
  KahanSum sum_sq;
  double max_loss = -std::numeric_limits<double>::infinity();
  for (long j = 0; j < n; ++j) {
    double loss_plus = 0.0;   // loss under +d at the drawn noise
    double loss_minus = 0.0;  // loss under -d
    if (gaussian) {
      double linear = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        const double t = rng.Gaussian(scales.scales[i]);
        if (profile[i] == 0.0) continue;
        linear += t * profile[i] / (scales.scales[i] * scales.scales[i]);
      }
      loss_plus = linear + gaussian_offset;
      loss_minus = -linear + gaussian_offset;
    } else {
      for (std::size_t i = 0; i < k; ++i) {
        const double t = rng.Laplace(scales.scales[i]);
        if (profile[i] == 0.0) continue;
        loss_plus +=
            (std::fabs(t + profile[i]) - std::fabs(t)) / scales.scales[i];
        loss_minus +=
            (std::fabs(t - profile[i]) - std::fabs(t)) / scales.scales[i];
      }
    }
    max_loss = std::max(max_loss, loss_plus);
    const double stat = (loss_plus >= epsilon ? 1.0 : 0.0) -
                        amplification * (loss_minus <= -epsilon ? 1.0 : 0.0);
    sum.Add(stat);
    sum_sq.Add(stat * stat);
  }

  AuditReport report;
  report.epsilon = epsilon;
  report.n_samples = n;
  report.worst_case_d = profile.lambda();
  report.empirical_profile = sum.value() / n;
  const double var = std::max(
      0.0, (sum_sq.value() / n - report.empirical_profile * report.empirical_profile) *
               n / (n - 1.0));
  report.std_error = std::sqrt(var / n);
  report.max_loss = max_loss;
  return report;
}

}  // namespace inid
