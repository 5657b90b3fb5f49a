// Copyright 2026 The cvqkd Authors
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

#ifndef CVQKD_NUMERICS_H
#define CVQKD_NUMERICS_H

#include <functional>
#include <optional>

namespace cvqkd::numerics {

using ScalarFunction = std::function<double(double)>;

struct Minimum {
    double x;
    double value;
};

/// Golden-section search on [lo, hi]; assumes f is unimodal there.
Minimum golden_section_minimize(const ScalarFunction &f, double lo, double hi, double x_tol = 1e-12);

/// Minimum of a pi-periodic function with a single well per period. A coarse
/// scan locates the well, golden-section search narrows it and a bisection on
/// the central-difference slope polishes the abscissa. The result is reduced
/// to (-pi/2, pi/2].
Minimum minimize_periodic(const ScalarFunction &f, int coarse_points = 64);

/// Root of f on [lo, hi] by bisection. Returns nullopt unless f(lo) and f(hi)
/// have opposite signs (or one of them is exactly zero).
std::optional<double> bisect_root(const ScalarFunction &f, double lo, double hi, double x_tol = 1e-15,
                                  int max_iter = 200);

/// Reduces an angle modulo pi into (-pi/2, pi/2].
double wrap_half_turn(double angle);

}  // namespace cvqkd::numerics

#endif
