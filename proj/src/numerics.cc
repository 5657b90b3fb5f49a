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

#include "cvqkd/numerics.h"

#include <cmath>
#include <numbers>
#include <utility>

namespace cvqkd::numerics {

Minimum golden_section_minimize(const ScalarFunction &f, double lo, double hi, double x_tol) {
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > x_tol) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
        if (x2 <= x1) {
            break;
        }
    }
    double x = f1 <= f2 ? x1 : x2;
    return Minimum{.x = x, .value = f(x)};
}

double wrap_half_turn(double angle) {
    const double pi = std::numbers::pi;
    double r = std::remainder(angle, pi);  // in [-pi/2, pi/2]
    if (r <= -pi / 2) {
        r += pi;
    }
    return r;
}

Minimum minimize_periodic(const ScalarFunction &f, int coarse_points) {
    const double pi = std::numbers::pi;
    double step = pi / coarse_points;
    double best_x = -pi / 2;
    double best_f = f(best_x);
    for (int k = 1; k < coarse_points; k++) {
        double x = -pi / 2 + k * step;
        double v = f(x);
        if (v < best_f) {
            best_f = v;
            best_x = x;
        }
    }
    Minimum coarse = golden_section_minimize(f, best_x - step, best_x + step, 1e-9);

    // Golden section stalls near sqrt(eps) in x where the well is flat; the
    // slope keeps its sign information well below that.
    const double h = 1e-6;
    auto slope = [&](double x) { return f(x + h) - f(x - h); };
    double lo = coarse.x - 1e-4;
    double hi = coarse.x + 1e-4;
    double x = coarse.x;
    if (slope(lo) < 0 && slope(hi) > 0) {
        for (int it = 0; it < 100 && hi - lo > 1e-15; it++) {
            double mid = 0.5 * (lo + hi);
            if (slope(mid) < 0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        x = 0.5 * (lo + hi);
    }
    double fx = f(x);
    if (fx > coarse.value) {
        x = coarse.x;
        fx = coarse.value;
    }
    return Minimum{.x = wrap_half_turn(x), .value = fx};
}

std::optional<double> bisect_root(const ScalarFunction &f, double lo, double hi, double x_tol, int max_iter) {
    if (lo > hi) {
        std::swap(lo, hi);
    }
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (f_lo == 0) {
        return lo;
    }
    if (f_hi == 0) {
        return hi;
    }
    if (std::signbit(f_lo) == std::signbit(f_hi) || std::isnan(f_lo) || std::isnan(f_hi)) {
        return std::nullopt;
    }
    for (int it = 0; it < max_iter && hi - lo > x_tol; it++) {
        double mid = 0.5 * (lo + hi);
        double f_mid = f(mid);
        if (f_mid == 0) {
            return mid;
        }
        if (std::signbit(f_mid) == std::signbit(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace cvqkd::numerics
