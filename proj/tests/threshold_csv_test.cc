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

#include "cvqkd/threshold_csv.h"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "cvqkd/svg_plot.h"
#include "gtest/gtest.h"

using namespace cvqkd;

namespace {

std::string read_golden(const std::string &name) {
    std::ifstream f(std::string(CVQKD_GOLDEN_DIR) + "/" + name, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

size_t count(const std::string &haystack, const std::string &needle) {
    size_t n = 0;
    for (size_t pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) {
        n++;
    }
    return n;
}

}  // namespace

TEST(format_double, shortest_round_trip) {
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(0), "0");
    EXPECT_EQ(format_double(1e6), "1e+06");
    EXPECT_EQ(format_double(0.21), "0.21");
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int i = 0; i < 10000; i++) {
        double v = std::pow(10.0, u(rng)) * (i % 2 ? 1 : -1);
        EXPECT_EQ(std::stod(format_double(v)), v);
    }
}

TEST(threshold_csv, round_trip) {
    std::vector<double> grid;
    for (int i = 0; i <= 40; i++) {
        grid.push_back(0.015 * i);
    }
    ThresholdCurve curve = threshold_curve(10, grid);
    ThresholdCurve back = parse_threshold_csv(write_threshold_csv(curve));
    EXPECT_EQ(back.v_a, 10);
    ASSERT_EQ(back.rows.size(), curve.rows.size());
    for (size_t i = 0; i < curve.rows.size(); i++) {
        EXPECT_EQ(back.rows[i].delta, curve.rows[i].delta);
        EXPECT_EQ(back.rows[i].eta_clone, curve.rows[i].eta_clone);
        EXPECT_EQ(back.rows[i].eta_anticlone, curve.rows[i].eta_anticlone);
        EXPECT_EQ(back.rows[i].eta_bma, curve.rows[i].eta_bma);
        EXPECT_EQ(back.rows[i].eta_opt, curve.rows[i].eta_opt);
        EXPECT_EQ(back.rows[i].eta_intercept_resend, curve.rows[i].eta_intercept_resend);
    }
}

TEST(threshold_csv, nan_round_trips) {
    std::vector<double> grid{0.6};
    ThresholdCurve curve = threshold_curve(0.5, grid);
    std::string text = write_threshold_csv(curve);
    EXPECT_NE(text.find("nan"), std::string::npos);
    EXPECT_TRUE(std::isnan(parse_threshold_csv(text).rows[0].eta_bma));
}

TEST(threshold_csv, layout) {
    std::vector<double> grid{0.0, 0.1};
    std::string text = write_threshold_csv(threshold_curve(10, grid));
    EXPECT_EQ(text,
              "# cvqkd-thresholds v1 va=10\n"
              "delta,eta_clone,eta_anticlone,eta_bma,eta_opt,eta_intercept_resend\n"
              "0,0,0,0,0,0\n" +
                  text.substr(text.find("0.1,")));
    EXPECT_EQ(count(text, "\n"), 4u);
    EXPECT_EQ(text.find('\r'), std::string::npos);
}

TEST(threshold_csv, golden_small_sweep) {
    // cvqkd thresholds --va 10 --delta-min 0 --delta-max 0.2 --steps 3
    std::vector<double> grid{0.0, 0.1, 0.2};
    EXPECT_EQ(write_threshold_csv(threshold_curve(10, grid)), read_golden("thresholds_va10_3.csv"));
}

TEST(parse_threshold_csv, errors_name_the_line) {
    auto line_of = [](const std::string &text) -> size_t {
        try {
            parse_threshold_csv(text);
        } catch (const MalformedInput &e) {
            return e.line();
        }
        return 0;
    };
    const std::string head = "# cvqkd-thresholds v1 va=10\ndelta,eta_clone,eta_anticlone,eta_bma,eta_opt,eta_intercept_resend\n";
    EXPECT_EQ(line_of(""), 1u);
    EXPECT_EQ(line_of("delta,eta\n"), 1u);
    EXPECT_EQ(line_of("# cvqkd-thresholds v1 va=abc\n"), 1u);
    EXPECT_EQ(line_of("# cvqkd-thresholds v1 va=10\n"), 2u);
    EXPECT_EQ(line_of("# cvqkd-thresholds v1 va=10\ndelta\n"), 2u);
    EXPECT_EQ(line_of(head), 3u);
    EXPECT_EQ(line_of(head + "0.1,1,2,3,4,5\n0.2,1,2,x,4,5\n"), 4u);
    EXPECT_EQ(line_of(head + "0.1,1,2,3,4\n"), 3u);
    EXPECT_EQ(line_of(head + "0.1,1,2,3,4,5,6\n"), 3u);
    EXPECT_EQ(line_of(head + "0.1,1,2,3,4,5\n"), 0u);
}

TEST(render_threshold_svg, five_series_and_legend) {
    std::vector<double> grid;
    for (int i = 0; i <= 60; i++) {
        grid.push_back(0.01 * i);
    }
    std::string svg = render_threshold_svg(threshold_curve(1e6, grid));
    EXPECT_EQ(svg.rfind("<svg", 0) == 0 || svg.rfind("<?xml", 0) == 0, true);
    EXPECT_EQ(count(svg, "<polyline"), 5u);
    EXPECT_EQ(count(svg, "class=\"legend-entry\""), 5u);
    for (const SeriesStyle &s : kThresholdSeries) {
        EXPECT_NE(svg.find("id=\"" + std::string(s.id) + "\""), std::string::npos) << s.id;
        EXPECT_NE(svg.find(std::string(s.label)), std::string::npos) << s.label;
    }
    EXPECT_NE(svg.find("excess noise"), std::string::npos);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(render_threshold_svg, single_row_is_point_series) {
    std::vector<double> grid{0.1};
    std::string svg = render_threshold_svg(threshold_curve(10, grid));
    EXPECT_EQ(count(svg, "<polyline"), 5u);
    EXPECT_EQ(svg.find("nan"), std::string::npos);
}

TEST(render_threshold_svg, skips_undefined_points) {
    std::vector<double> grid{0.1, 0.6, 0.7};
    std::string svg = render_threshold_svg(threshold_curve(0.5, grid));
    EXPECT_EQ(svg.find("nan"), std::string::npos);
    EXPECT_EQ(count(svg, "<polyline"), 5u);
}
