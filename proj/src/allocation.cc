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

#include "inid/allocation.h"

#include <cmath>
#include <stdexcept>

namespace inid {

ResourceSplit SplitResource(const SensitivityProfile& profile, double total,
                            ResourceKind kind) {
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw std::domain_error("resource split: total must be positive");
  }
  const std::vector<double>& lambda = profile.lambda();
  std::vector<double> weights(lambda.size());
  double weight_sum = 0.0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    weights[i] = kind == ResourceKind::kZcdpEta
                     ? lambda[i]
                     : std::pow(lambda[i], 2.0 / 3.0);
    weight_sum += weights[i];
  }
  ResourceSplit split;
  split.kind = kind;
  split.total = total;
  split.shares.resize(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    split.shares[i] = total * weights[i] / weight_sum;
  }
  return split;
}

SensitivityProfile LayerClippingPlan::Flatten() const {
  std::vector<double> lambda;
  for (const auto& layer : per_coordinate_lambda) {
    lambda.insert(lambda.end(), layer.begin(), layer.end());
  }
  return SensitivityProfile(std::move(lambda));
}

LayerClippingPlan FlatPerLayerPlan(const std::vector<int>& layer_sizes,
                                   double total_budget, double p) {
  if (layer_sizes.empty()) {
    throw std::invalid_argument("clipping plan: needs at least one layer");
  }
  if (!(total_budget > 0.0)) {
    throw std::domain_error("clipping plan: total budget must be positive");
  }
  if (!(p >= 1.0)) {
    throw std::domain_error("clipping plan: p must be >= 1");
  }
  LayerClippingPlan plan;
  plan.layer_sizes = layer_sizes;
  plan.norm_order_p = p;
  const double per_layer =
      total_budget / std::pow(static_cast<double>(layer_sizes.size()), 1.0 / p);
  for (int size : layer_sizes) {
    if (size < 1) {
      throw std::invalid_argument("clipping plan: layer sizes must be >= 1");
    }
    plan.layer_budgets.push_back(per_layer);
    const double bound = per_layer / std::pow(static_cast<double>(size), 1.0 / p);
    plan.per_coordinate_lambda.emplace_back(size, bound);
  }
  return plan;
}

}  // namespace inid
