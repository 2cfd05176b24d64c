// Copyright 2026 The Lotto Alliance Authors
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

#include "lotto/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lotto {

Interval intersect(const Interval& a, const Interval& b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

Interval bounded_by(std::initializer_list<double> lowers,
                    std::initializer_list<double> uppers) {
  Interval out;
  for (double v : lowers) out.lo = std::max(out.lo, v);
  for (double v : uppers) out.hi = std::min(out.hi, v);
  return out;
}

Interval QuadraticWindow::interval() const {
  if (!has_roots()) return {0.0, 0.0};
  return {*z_minus, *z_plus};
}

bool QuadraticWindow::contains(double nu) const {
  return has_roots() && *z_minus < nu && nu < *z_plus;
}

QuadraticWindow quadratic_window(double a, double b, double c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw std::invalid_argument("quadratic coefficients must be finite");
  }
  if (!(a > 0.0)) {
    throw std::invalid_argument("quadratic window needs a positive leading coefficient");
  }
  QuadraticWindow w;
  w.discriminant = b * b - 4.0 * a * c;
  if (w.discriminant > 0.0) {
    // Cancellation-free pair: q = -(b + sign(b) sqrt(d)) / 2.
    const double root = std::sqrt(w.discriminant);
    const double q = -0.5 * (b + std::copysign(root, b));
    double r1 = q / a;
    double r2 = q != 0.0 ? c / q : -r1;
    if (r1 > r2) std::swap(r1, r2);
    w.z_minus = r1;
    w.z_plus = r2;
  }
  return w;
}

}  // namespace lotto
