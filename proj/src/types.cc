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

#include "inid/types.h"

#include <cmath>
#include <stdexcept>

namespace inid {

std::string ToString(Mechanism mechanism) {
  return mechanism == Mechanism::kGaussian ? "gaussian" : "laplace";
}

std::string ToString(Mode mode) {
  switch (mode) {
    case Mode::kIid:
      return "iid";
    case Mode::kSpr:
      return "spr";
    case Mode::kInid:
      return "inid";
  }
  return "inid";
}

Mechanism MechanismFromString(const std::string& name) {
  if (name == "gaussian") return Mechanism::kGaussian;
  if (name == "laplace") return Mechanism::kLaplace;
  throw std::invalid_argument("unknown mechanism: " + name);
}

Mode ModeFromString(const std::string& name) {
  if (name == "iid") return Mode::kIid;
  if (name == "spr") return Mode::kSpr;
  if (name == "inid") return Mode::kInid;
  throw std::invalid_argument("unknown mode: " + name);
}

void Validate(const PrivacyBudget& budget) {
  if (!(budget.epsilon >= 0.0) || !std::isfinite(budget.epsilon)) {
    throw std::domain_error("privacy budget: epsilon must be finite and >= 0");
  }
  if (!(budget.delta >= 0.0 && budget.delta <= 1.0)) {
    throw std::domain_error("privacy budget: delta must lie in [0, 1]");
  }
}

double TheoreticalLpError(Mechanism mechanism, const std::vector<double>& scales,
                          double p) {
  double sum = 0.0;
  for (double s : scales) sum += std::pow(s, p);
  if (mechanism == Mechanism::kGaussian) {
    // E|N(0, s^2)|^p = sqrt(2^p / pi) * Gamma((p+1)/2) * s^p.
    return std::sqrt(std::pow(2.0, p) / M_PI) * std::tgamma(0.5 * (p + 1.0)) *
           sum;
  }
  // E|L(0, s)|^p = Gamma(p+1) * s^p.
  return std::tgamma(p + 1.0) * sum;
}

}  // namespace inid
