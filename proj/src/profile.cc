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

#include "inid/profile.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace inid {
namespace {

constexpr double kMajorizationTol = 1e-12;

std::vector<double> SortedDescending(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<double>());
  return v;
}

void NormalizeInPlace(std::vector<double>& lambda, Normalization normalization) {
  double norm = 0.0;
  switch (normalization) {
    case Normalization::kL1Unit:
      for (double x : lambda) norm += x;
      break;
    case Normalization::kL2Unit:
      for (double x : lambda) norm += x * x;
      norm = std::sqrt(norm);
      break;
    case Normalization::kNone:
      return;
  }
  for (double& x : lambda) x /= norm;
}

}  // namespace

SensitivityProfile::SensitivityProfile(std::vector<double> lambda)
    : lambda_(std::move(lambda)) {
  if (lambda_.empty()) {
    throw std::domain_error("sensitivity profile: must have at least one coordinate");
  }
  bool any_positive = false;
  for (double x : lambda_) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw std::domain_error(
          "sensitivity profile: entries must be finite and non-negative");
    }
    any_positive |= x > 0.0;
  }
  if (!any_positive) {
    throw std::domain_error("sensitivity profile: must have a positive entry");
  }
}

ProfileKind ProfileKindFromString(const std::string& name) {
  if (name == "uniform") return ProfileKind::kUniform;
  if (name == "one_hot") return ProfileKind::kOneHot;
  if (name == "linear") return ProfileKind::kLinear;
  if (name == "quadratic") return ProfileKind::kQuadratic;
  if (name == "exponential") return ProfileKind::kExponential;
  throw std::invalid_argument("unknown profile family: " + name);
}

std::string ToString(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::kUniform:
      return "uniform";
    case ProfileKind::kOneHot:
      return "one_hot";
    case ProfileKind::kLinear:
      return "linear";
    case ProfileKind::kQuadratic:
      return "quadratic";
    case ProfileKind::kExponential:
      return "exponential";
  }
  return "uniform";
}

Normalization NormalizationFromString(const std::string& name) {
  if (name == "l1") return Normalization::kL1Unit;
  if (name == "l2") return Normalization::kL2Unit;
  if (name == "none") return Normalization::kNone;
  throw std::invalid_argument("unknown normalization: " + name);
}

SensitivityProfile Generate(const ProfileFamily& family) {
  if (family.k < 1) {
    throw std::domain_error("profile family: K must be at least 1");
  }
  const int k = family.k;
  std::vector<double> lambda(k);
  switch (family.kind) {
    case ProfileKind::kUniform:
      std::fill(lambda.begin(), lambda.end(), 1.0);
      break;
    case ProfileKind::kOneHot:
      std::fill(lambda.begin(), lambda.end(), 0.0);
      lambda.back() = 1.0;
      break;
    case ProfileKind::kLinear:
      for (int i = 0; i < k; ++i) lambda[i] = i + 1.0;
      break;
    case ProfileKind::kQuadratic:
      for (int i = 0; i < k; ++i) lambda[i] = (i + 1.0) * (i + 1.0);
      break;
    case ProfileKind::kExponential:
      // e^{i-K} instead of e^i keeps the largest entry at 1 before
      // normalization; tiny leading entries underflow to 0, which the
      // profile invariants allow.
      for (int i = 0; i < k; ++i) lambda[i] = std::exp(i + 1.0 - k);
      break;
  }
  NormalizeInPlace(lambda, family.normalization);
  return SensitivityProfile(std::move(lambda));
}

double LpSensitivity(const SensitivityProfile& profile, double p) {
  if (std::isinf(p) && p > 0.0) {
    return *std::max_element(profile.lambda().begin(), profile.lambda().end());
  }
  if (!(p >= 1.0)) {
    throw std::domain_error("lp sensitivity: p must be >= 1");
  }
  // Factor out the maximum so large p does not underflow term-by-term.
  const double max =
      *std::max_element(profile.lambda().begin(), profile.lambda().end());
  double sum = 0.0;
  for (double x : profile.lambda()) sum += std::pow(x / max, p);
  return max * std::pow(sum, 1.0 / p);
}

double Gini(const SensitivityProfile& profile) {
  const std::size_t k = profile.size();
  std::vector<double> sorted = profile.lambda();
  std::sort(sorted.begin(), sorted.end());
  double total = 0.0;
  double weighted = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    total += sorted[i];
    weighted += (i + 1.0) * sorted[i];
  }
  // sum_ij |x_i - x_j| = 2 * (2 * sum_i i*x_(i) - (K+1) * sum_i x_i) for
  // ascending x_(i); dividing by 2*K*||x||_1 gives the Gini coefficient.
  return (2.0 * weighted - (k + 1.0) * total) / (k * total);
}

double DisparityNu(const SensitivityProfile& profile) {
  const double max =
      *std::max_element(profile.lambda().begin(), profile.lambda().end());
  double sum = 0.0;
  for (double x : profile.lambda()) sum += x;
  return sum / (profile.size() * max);
}

bool Majorizes(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("majorization: vectors must have equal length");
  }
  const std::vector<double> sa = SortedDescending(a);
  const std::vector<double> sb = SortedDescending(b);
  double prefix_a = 0.0;
  double prefix_b = 0.0;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    prefix_a += sa[i];
    prefix_b += sb[i];
    if (prefix_a < prefix_b - kMajorizationTol) return false;
  }
  return std::fabs(prefix_a - prefix_b) <= kMajorizationTol;
}

SensitivityProfile LoadProfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open profile file: " + path);
  }
  std::vector<double> lambda;
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    nlohmann::json doc;
    in >> doc;
    if (!doc.contains("lambda") || !doc["lambda"].is_array()) {
      throw std::runtime_error("profile JSON must contain a \"lambda\" array");
    }
    for (const auto& v : doc["lambda"]) lambda.push_back(v.get<double>());
  } else {
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      lambda.push_back(std::stod(line));
    }
  }
  return SensitivityProfile(std::move(lambda));
}

}  // namespace inid
