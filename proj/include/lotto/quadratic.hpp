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

#pragma once

#include <initializer_list>
#include <limits>
#include <optional>

namespace lotto {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Open interval (lo, hi); empty unless lo < hi.
struct Interval {
  double lo = -kInf;
  double hi = kInf;

  bool empty() const { return !(lo < hi); }
  double width() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
  bool contains(double v) const { return lo < v && v < hi; }
};

Interval intersect(const Interval& a, const Interval& b);

// (max lowers, min uppers): the "max{...} < min{...}" pattern.
Interval bounded_by(std::initializer_list<double> lowers,
                    std::initializer_list<double> uppers);

// Solution set of a nu^2 + b nu + c < 0 for a > 0.
struct QuadraticWindow {
  double discriminant = 0.0;
  std::optional<double> z_minus;
  std::optional<double> z_plus;

  bool has_roots() const { return z_minus.has_value(); }
  // The open window, or an empty interval when the discriminant is <= 0.
  Interval interval() const;
  bool contains(double nu) const;
};

// Throws std::invalid_argument if a <= 0 or any coefficient is non-finite.
QuadraticWindow quadratic_window(double a, double b, double c);

}  // namespace lotto
