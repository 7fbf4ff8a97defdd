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

#ifndef INID_PROFILE_H_
#define INID_PROFILE_H_

#include <cstddef>
#include <string>
#include <vector>

namespace inid {

// Vector of per-coordinate sensitivities: the worst-case absolute change of
// each output coordinate across neighbouring datasets. Coordinates may be
// zero (an output a dataset change can never move) but not all of them.
//
// The lp norms of the profile are used as the lp-sensitivities throughout.
// This is the decoupled-coordinates approximation: it is exact when every
// sign pattern of the per-coordinate extremes is realizable by some pair of
// neighbouring datasets, and conservative-by-assumption otherwise. Callers
// with tightly coupled coordinates must derive their own sensitivities.
class SensitivityProfile {
 public:
  // Throws std::domain_error if lambda is empty, has a negative or non-finite
  // entry, or is all-zero.
  explicit SensitivityProfile(std::vector<double> lambda);

  const std::vector<double>& lambda() const { return lambda_; }
  std::size_t size() const { return lambda_.size(); }
  double operator[](std::size_t i) const { return lambda_[i]; }

 private:
  std::vector<double> lambda_;
};

enum class ProfileKind { kUniform, kOneHot, kLinear, kQuadratic, kExponential };
enum class Normalization { kL1Unit, kL2Unit, kNone };

ProfileKind ProfileKindFromString(const std::string& name);
std::string ToString(ProfileKind kind);
Normalization NormalizationFromString(const std::string& name);

struct ProfileFamily {
  ProfileKind kind = ProfileKind::kUniform;
  int k = 1;
  Normalization normalization = Normalization::kL2Unit;
};

// lambda_i proportional to 1, e_{K,K}, i, i^2, e^i for the respective kinds,
// normalized as requested. The exponential family is generated via e^{i-K}
// so that K up to ~1e4 stays within double range before normalization.
SensitivityProfile Generate(const ProfileFamily& family);

// ||lambda||_p; p may be infinity (returns max_i lambda_i). Throws
// std::domain_error for p < 1.
double LpSensitivity(const SensitivityProfile& profile, double p);

// Gini coefficient (1 / (2 K ||lambda||_1)) * sum_ij |lambda_i - lambda_j|,
// computed in O(K log K) via sorted prefix sums.
double Gini(const SensitivityProfile& profile);

// Mean-to-max ratio ||lambda||_1 / (K * max_i lambda_i), in (0, 1].
double DisparityNu(const SensitivityProfile& profile);

// True iff a majorizes b: the sorted-descending prefix sums of a dominate
// those of b and the totals agree (absolute tolerance 1e-12 on prefix sums).
// Throws std::invalid_argument on length mismatch.
bool Majorizes(const std::vector<double>& a, const std::vector<double>& b);

// Loads a profile from JSON {"lambda": [...]} or from a single-column CSV
// (selected by file extension .json / anything else); validates invariants.
SensitivityProfile LoadProfile(const std::string& path);

}  // namespace inid

#endif  // INID_PROFILE_H_
