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

#ifndef INID_NUMERICS_H_
#define INID_NUMERICS_H_

#include <functional>

namespace inid {

// Survival function of the standard normal, Q(x) = P{N(0,1) > x}.
// Self-contained rational-minimax erfc so that ports of this library agree
// to ~1e-12 regardless of the platform's libm. Total on finite inputs.
double GaussianQ(double x);

// Inverse of GaussianQ on (0, 1). Rational initial estimate polished with one
// Newton step against GaussianQ. Throws std::domain_error outside (0, 1).
double GaussianQInv(double u);

// exp(x*x) * erfc(x), evaluated without forming either factor. Finite for all
// x >= 0; for x < 0 falls back to exp(x*x)*erfc(x) directly (overflows only
// when the true value does).
double ErfcScaled(double x);

// e^eps * Q(x) evaluated in log space, so no intermediate overflows for
// eps up to ~1e4 and |x| up to ~1e3. Requires eps >= 0.
double ScaledTailProduct(double eps, double x);

struct BisectionConfig {
  // Absolute width of the final bracketing interval.
  double tolerance = 1e-12;
  // Safety cap; must be at least ceil(log2(initial_width / tolerance)).
  int max_iterations = 200;
};

struct BisectionResult {
  // Lower endpoint of the final bracket, so f(root) <= 0 is guaranteed.
  double root = 0.0;
  int iterations = 0;
};

// Bisection for a monotone increasing f with f(lo) <= 0 <= f(hi).
// Returns the lower endpoint of the final bracket of width <= tolerance.
// Throws std::invalid_argument if the sign condition fails at the endpoints
// and std::runtime_error if max_iterations is exhausted first.
BisectionResult BisectMonotone(const std::function<double(double)>& f,
                               double lo, double hi,
                               const BisectionConfig& config = {});

}  // namespace inid

#endif  // INID_NUMERICS_H_
