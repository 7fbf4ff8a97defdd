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

#include "inid/numerics.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace inid {
namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
constexpr double kInvSqrtPi = 0.56418958354775628695;

// Rational Chebyshev approximations for erf/erfc after W. J. Cody (1969),
// the same scheme as netlib's CALERF. Split into the unscaled and scaled
// (exp(x^2)-multiplied) forms so the tail can be evaluated without underflow.

// erf(x) for |x| <= 0.46875.
double ErfSmall(double x) {
  static const double a[5] = {3.16112374387056560e+00, 1.13864154151050156e+02,
                              3.77485237685302021e+02, 3.20937758913846947e+03,
                              1.85777706184603153e-01};
  static const double b[4] = {2.36012909523441209e+01, 2.44024637934444173e+02,
                              1.28261652607737228e+03, 2.84423683343917062e+03};
  const double z = x * x;
  double num = a[4] * z;
  double den = z;
  for (int i = 0; i < 3; ++i) {
    num = (num + a[i]) * z;
    den = (den + b[i]) * z;
  }
  return x * (num + a[3]) / (den + b[3]);
}

// exp(x^2) * erfc(x) for 0.46875 < x <= 4.
double ErfcxMid(double x) {
  static const double c[9] = {5.64188496988670089e-01, 8.88314979438837594e+00,
                              6.61191906371416295e+01, 2.98635138197400131e+02,
                              8.81952221241769090e+02, 1.71204761263407058e+03,
                              2.05107837782607147e+03, 1.23033935479799725e+03,
                              2.15311535474403846e-08};
  static const double d[8] = {1.57449261107098347e+01, 1.17693950891312499e+02,
                              5.37181101862009858e+02, 1.62138957456669019e+03,
                              3.29079923573345963e+03, 4.36261909014324716e+03,
                              3.43936767414372164e+03, 1.23033935480374942e+03};
  double num = c[8] * x;
  double den = x;
  for (int i = 0; i < 7; ++i) {
    num = (num + c[i]) * x;
    den = (den + d[i]) * x;
  }
  return (num + c[7]) / (den + d[7]);
}

// exp(x^2) * erfc(x) for x > 4.
double ErfcxLarge(double x) {
  static const double p[6] = {3.05326634961232344e-01, 3.60344899949804439e-01,
                              1.25781726111229246e-01, 1.60837851487422766e-02,
                              6.58749161529837803e-04, 1.63153871373020978e-02};
  static const double q[5] = {2.56852019228982242e+00, 1.87295284992346047e+00,
                              5.27905102951428412e-01, 6.05183413124413191e-02,
                              2.33520497626869185e-03};
  const double z = 1.0 / (x * x);
  double num = p[5] * z;
  double den = z;
  for (int i = 0; i < 4; ++i) {
    num = (num + p[i]) * z;
    den = (den + q[i]) * z;
  }
  const double r = z * (num + p[4]) / (den + q[4]);
  return (kInvSqrtPi - r) / x;
}

// exp(-x^2) with the argument split so the rounding of x*x does not dominate
// the relative error of the product exp(-x^2) * erfcx(x).
double ExpNegSquare(double x) {
  const double xs = std::trunc(x * 16.0) / 16.0;
  const double del = (x - xs) * (x + xs);
  return std::exp(-xs * xs) * std::exp(-del);
}

double Erfc(double x) {
  const double ax = std::fabs(x);
  if (ax <= 0.46875) return 1.0 - ErfSmall(x);
  if (x < 0.0) return 2.0 - Erfc(-x);
  if (x > 26.6) return 0.0;  // below the smallest subnormal
  const double scaled = (x <= 4.0) ? ErfcxMid(x) : ErfcxLarge(x);
  return ExpNegSquare(x) * scaled;
}

// Lower quantile of the standard normal, Wichura's algorithm AS 241 (PPND16).
double NormalQuantile(double p) {
  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    static const double a[8] = {
        3.3871328727963666080e+00, 1.3314166789178437745e+02,
        1.9715909503065514427e+03, 1.3731693765509461125e+04,
        4.5921953931549871457e+04, 6.7265770927008700853e+04,
        3.3430575583588128105e+04, 2.5090809287301226727e+03};
    static const double b[7] = {
        4.2313330701600911252e+01, 6.8718700749205790830e+02,
        5.3941960214247511077e+03, 2.1213794301586595867e+04,
        3.9307895800092710610e+04, 2.8729085735721942674e+04,
        5.2264952788528545610e+03};
    const double r = 0.180625 - q * q;
    double num = a[7];
    double den = b[6];
    for (int i = 6; i >= 0; --i) num = num * r + a[i];
    for (int i = 5; i >= 0; --i) den = den * r + b[i];
    return q * num / (den * r + 1.0);
  }
  double r = (q < 0.0) ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    static const double c[8] = {
        1.42343711074968357734e+00, 4.63033784615654529590e+00,
        5.76949722146069140550e+00, 3.64784832476320460504e+00,
        1.27045825245236838258e+00, 2.41780725177450611770e-01,
        2.27238449892691845833e-02, 7.74545014278341407640e-04};
    static const double d[7] = {
        2.05319162663775882187e+00, 1.67638483018380384940e+00,
        6.89767334985100004550e-01, 1.48103976427480074590e-01,
        1.51986665636164571966e-02, 5.47593808499534494600e-04,
        1.05075007164441684324e-09};
    const double s = r - 1.6;
    double num = c[7];
    double den = d[6];
    for (int i = 6; i >= 0; --i) num = num * s + c[i];
    for (int i = 5; i >= 0; --i) den = den * s + d[i];
    value = num / (den * s + 1.0);
  } else {
    static const double e[8] = {
        6.65790464350110377720e+00, 5.46378491116411436990e+00,
        1.78482653991729133580e+00, 2.96560571828504891230e-01,
        2.65321895265761230930e-02, 1.24266094738807843860e-03,
        2.71155556874348757815e-05, 2.01033439929228813265e-07};
    static const double f[7] = {
        5.99832206555887937690e-01, 1.36929880922735805310e-01,
        1.48753612908506148525e-02, 7.86869131145613259100e-04,
        1.84631831751005468180e-05, 1.42151175831644588870e-07,
        2.04426310338993978564e-15};
    const double s = r - 5.0;
    double num = e[7];
    double den = f[6];
    for (int i = 6; i >= 0; --i) num = num * s + e[i];
    for (int i = 5; i >= 0; --i) den = den * s + f[i];
    value = num / (den * s + 1.0);
  }
  return (q < 0.0) ? -value : value;
}

}  // namespace

double GaussianQ(double x) { return 0.5 * Erfc(x / kSqrt2); }

double ErfcScaled(double x) {
  if (x <= 0.46875) {
    // Direct product is safe here: exp(x^2) stays bounded for the negative
    // arguments this library passes (|x| small in practice).
    return std::exp(x * x) * Erfc(x);
  }
  return (x <= 4.0) ? ErfcxMid(x) : ErfcxLarge(x);
}

double GaussianQInv(double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("GaussianQInv: argument must lie in (0, 1), got " +
                            std::to_string(u));
  }
  double x = -NormalQuantile(u);
  // One Newton step on Q(x) - u = 0 ties the inverse to this library's Q.
  const double density = kInvSqrt2Pi * ExpNegSquare(x / kSqrt2);
  if (density > 0.0 && std::isfinite(density)) {
    x += (GaussianQ(x) - u) / density;
  }
  return x;
}

double ScaledTailProduct(double eps, double x) {
  if (eps < 0.0) {
    throw std::domain_error("ScaledTailProduct: eps must be non-negative");
  }
  if (x >= 0.0) {
    const double scaled = ErfcScaled(x / kSqrt2);
    if (scaled <= 0.0) return 0.0;
    return std::exp(eps - 0.5 * x * x + std::log(0.5 * scaled));
  }
  // Q(x) in (1/2, 1): log Q(x) = log1p(-Q(-x)) is exact enough here.
  return std::exp(eps + std::log1p(-GaussianQ(-x)));
}

BisectionResult BisectMonotone(const std::function<double(double)>& f,
                               double lo, double hi,
                               const BisectionConfig& config) {
  if (!(config.tolerance > 0.0)) {
    throw std::invalid_argument("BisectMonotone: tolerance must be positive");
  }
  if (!(lo < hi)) {
    throw std::invalid_argument("BisectMonotone: requires lo < hi");
  }
  if (f(lo) > 0.0 || f(hi) < 0.0) {
    throw std::invalid_argument(
        "BisectMonotone: sign condition f(lo) <= 0 <= f(hi) violated");
  }
  BisectionResult result;
  while (hi - lo > config.tolerance) {
    if (result.iterations >= config.max_iterations) {
      throw std::runtime_error(
          "BisectMonotone: max_iterations exhausted before the bracket "
          "reached the requested tolerance");
    }
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval at double resolution
    if (f(mid) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
    ++result.iterations;
  }
  result.root = lo;
  return result;
}

}  // namespace inid
