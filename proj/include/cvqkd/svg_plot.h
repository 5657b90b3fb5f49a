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

#ifndef CVQKD_SVG_PLOT_H
#define CVQKD_SVG_PLOT_H

#include <array>
#include <string>
#include <string_view>

#include "cvqkd/attacks.h"

namespace cvqkd {

struct SeriesStyle {
    std::string_view id;
    std::string_view label;
    std::string_view dasharray;  // empty = solid
};

/// Legend order and dash pattern for each threshold column.
inline constexpr std::array<SeriesStyle, 5> kThresholdSeries = {{
    {"eta_clone", "cloning attack", "10,4,2,4"},
    {"eta_anticlone", "anticloning attack", "2,4"},
    {"eta_bma", "Bell measurement attack", "10,5"},
    {"eta_opt", "optimal Gaussian attack", ""},
    {"eta_intercept_resend", "intercept-resend bound", "2,4,10,4,2,8"},
}};

/// Self-contained SVG with excess noise on the horizontal axis and threshold
/// transmission on the vertical axis. Non-finite points are left out of the
/// polylines.
std::string render_threshold_svg(const ThresholdCurve &curve);

}  // namespace cvqkd

#endif
