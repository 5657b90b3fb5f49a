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

#include "cvqkd/svg_plot.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace cvqkd {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 480;
constexpr double kLeft = 70;
constexpr double kRight = 200;  // room for the legend
constexpr double kTop = 30;
constexpr double kBottom = 60;

double column(const ThresholdRow &row, size_t series) {
    switch (series) {
        case 0:
            return row.eta_clone;
        case 1:
            return row.eta_anticlone;
        case 2:
            return row.eta_bma;
        case 3:
            return row.eta_opt;
        default:
            return row.eta_intercept_resend;
    }
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

// 1, 2 or 5 times a power of ten, giving roughly `target` intervals.
double nice_step(double span, int target) {
    if (!(span > 0)) {
        return 1;
    }
    double raw = span / target;
    double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (m * mag >= raw) {
            return m * mag;
        }
    }
    return 10 * mag;
}

}  // namespace

std::string render_threshold_svg(const ThresholdCurve &curve) {
    double x_min = curve.rows.front().delta;
    double x_max = curve.rows.front().delta;
    double y_max = 0;
    for (const ThresholdRow &row : curve.rows) {
        x_min = std::min(x_min, row.delta);
        x_max = std::max(x_max, row.delta);
        for (size_t s = 0; s < kThresholdSeries.size(); s++) {
            double v = column(row, s);
            if (std::isfinite(v)) {
                y_max = std::max(y_max, v);
            }
        }
    }
    if (!(x_max > x_min)) {
        x_max = x_min + 1;
    }
    if (!(y_max > 0)) {
        y_max = 1;
    }
    double y_step = nice_step(y_max, 5);
    y_max = std::ceil(y_max / y_step) * y_step;
    double x_step = nice_step(x_max - x_min, 6);

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double y) { return kTop + plot_h - y / y_max * plot_h; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<title>Security thresholds, V_A=" << tick_label(curve.v_a) << "</title>\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

    // Axes and ticks.
    svg << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
    svg << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(plot_w) << "\" height=\""
        << num(plot_h) << "\"/>\n";
    svg << "</g>\n<g font-size=\"11\">\n";
    for (double x = std::ceil(x_min / x_step) * x_step; x <= x_max + 1e-9 * x_step; x += x_step) {
        svg << "<line x1=\"" << num(px(x)) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\"" << num(px(x))
            << "\" y2=\"" << num(kTop + plot_h + 5) << "\" stroke=\"black\"/>";
        svg << "<text x=\"" << num(px(x)) << "\" y=\"" << num(kTop + plot_h + 18) << "\" text-anchor=\"middle\">"
            << tick_label(std::abs(x) < 1e-12 * x_step ? 0.0 : x) << "</text>\n";
    }
    for (double y = 0; y <= y_max + 1e-9 * y_step; y += y_step) {
        svg << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(py(y)) << "\" x2=\"" << num(kLeft)
            << "\" y2=\"" << num(py(y)) << "\" stroke=\"black\"/>";
        svg << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(py(y) + 4) << "\" text-anchor=\"end\">"
            << tick_label(y) << "</text>\n";
    }
    svg << "</g>\n";
    svg << "<text id=\"x-label\" x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 15)
        << "\" text-anchor=\"middle\">excess noise \xCE\xB4</text>\n";
    svg << "<text id=\"y-label\" x=\"18\" y=\"" << num(kTop + plot_h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << num(kTop + plot_h / 2) << ")\">line transmission threshold \xCE\xB7</text>\n";

    // Series.
    svg << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
    for (size_t s = 0; s < kThresholdSeries.size(); s++) {
        const SeriesStyle &style = kThresholdSeries[s];
        svg << "<polyline id=\"" << style.id << "\"";
        if (!style.dasharray.empty()) {
            svg << " stroke-dasharray=\"" << style.dasharray << "\"";
        }
        svg << " points=\"";
        bool first = true;
        for (const ThresholdRow &row : curve.rows) {
            double v = column(row, s);
            if (!std::isfinite(v)) {
                continue;
            }
            svg << (first ? "" : " ") << num(px(row.delta)) << "," << num(py(std::min(v, y_max)));
            first = false;
        }
        svg << "\"/>\n";
    }
    svg << "</g>\n";

    // Legend.
    double lx = kWidth - kRight + 15;
    svg << "<g id=\"legend\">\n";
    for (size_t s = 0; s < kThresholdSeries.size(); s++) {
        const SeriesStyle &style = kThresholdSeries[s];
        double ly = kTop + 15 + 22 * static_cast<double>(s);
        svg << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 40) << "\" y2=\""
            << num(ly) << "\" stroke=\"black\" stroke-width=\"1.5\"";
        if (!style.dasharray.empty()) {
            svg << " stroke-dasharray=\"" << style.dasharray << "\"";
        }
        svg << "/><text class=\"legend-entry\" x=\"" << num(lx + 46) << "\" y=\"" << num(ly + 4) << "\">"
            << style.label << "</text>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}  // namespace cvqkd
