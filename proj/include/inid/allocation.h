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

#ifndef INID_ALLOCATION_H_
#define INID_ALLOCATION_H_

#include <vector>

#include "inid/profile.h"

namespace inid {

enum class ResourceKind {
  // eta = mu0^2 / 2, the zCDP-style resource whose per-coordinate share is
  // eta_i = lambda_i^2 / (2 sigma_i^2). Bookkeeping only: no composition
  // calculus is implemented here.
  kZcdpEta,
  // epsilon itself, with per-coordinate share eps_i = lambda_i / beta_i.
  kPureEpsilon,
};

struct ResourceSplit {
  ResourceKind kind = ResourceKind::kZcdpEta;
  double total = 0.0;
  // shares sum to total; shares_i = 0 iff lambda_i = 0.
  std::vector<double> shares;
};

// Optimal per-coordinate resource allocation: shares proportional to
// lambda_i for the zCDP resource and to lambda_i^{2/3} for pure epsilon.
// Converting shares back to scales (sigma_i = lambda_i / sqrt(2 eta_i),
// beta_i = lambda_i / eps_i) reproduces the optimal inid scales; an equal
// split instead reproduces the SPR scales.
ResourceSplit SplitResource(const SensitivityProfile& profile, double total,
                            ResourceKind kind);

struct LayerClippingPlan {
  std::vector<int> layer_sizes;       // K_m
  std::vector<double> layer_budgets;  // C_m
  double norm_order_p = 2.0;
  // lambda_i^(m) = C_m / K_m^{1/p}, constant within a layer.
  std::vector<std::vector<double>> per_coordinate_lambda;

  // Concatenated per-coordinate bounds, usable as a sensitivity profile.
  SensitivityProfile Flatten() const;
};

// Flat per-layer clipping: the layer budgets C_m are set equal with their
// lp-norm equal to the overall budget, C_m = C0 / M^{1/p}. Layers of unequal
// size still produce a non-uniform flattened profile.
LayerClippingPlan FlatPerLayerPlan(const std::vector<int>& layer_sizes,
                                   double total_budget, double p = 2.0);

}  // namespace inid

#endif  // INID_ALLOCATION_H_
