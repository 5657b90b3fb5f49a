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

#include "gtest/gtest.h"

using namespace cvqkd::numerics;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(golden_section_minimize, parabola) {
    Minimum m = golden_section_minimize([](double x) { return (x - 0.3) * (x - 0.3) + 2; }, -1, 4);
    EXPECT_NEAR(m.x, 0.3, 1e-7);
    EXPECT_NEAR(m.value, 2, 1e-14);
}

TEST(golden_section_minimize, minimum_on_boundary) {
    Minimum m = golden_section_minimize([](double x) { return x; }, 1, 2);
    EXPECT_NEAR(m.x, 1, 1e-9);
}

TEST(minimize_periodic, shifted_cosine) {
    // period pi, minimum at 0.4
    Minimum m = minimize_periodic([](double t) { return -std::cos(2 * (t - 0.4)); });
    EXPECT_NEAR(m.x, 0.4, 1e-9);
    EXPECT_NEAR(m.value, -1, 1e-15);
}

TEST(minimize_periodic, minimum_near_wrap_point) {
    Minimum m = minimize_periodic([](double t) { return -std::cos(2 * (t - 1.56)); });
    EXPECT_NEAR(m.x, 1.56, 1e-9);
    Minimum n = minimize_periodic([](double t) { return -std::cos(2 * (t + 1.565)); });
    EXPECT_NEAR(n.x, -1.565, 1e-9);
    EXPECT_GT(n.x, -kPi / 2);
    EXPECT_LE(n.x, kPi / 2);
}

TEST(bisect_root, finds_root) {
    auto r = bisect_root([](double x) { return x * x - 2; }, 0, 2);
    ASSERT_TRUE(r.has_value());
    EXPECT_NEAR(*r, std::sqrt(2.0), 1e-15);
    auto s = bisect_root([](double x) { return std::cos(x); }, 3, 1);
    ASSERT_TRUE(s.has_value());
    EXPECT_NEAR(*s, kPi / 2, 1e-15);
}

TEST(bisect_root, endpoint_root) {
    auto r = bisect_root([](double x) { return x - 1; }, 1, 2);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r, 1);
}

TEST(bisect_root, no_sign_change) {
    EXPECT_FALSE(bisect_root([](double x) { return x * x + 1; }, -1, 1).has_value());
}

TEST(wrap_half_turn, range) {
    EXPECT_NEAR(wrap_half_turn(0.3 + kPi), 0.3, 1e-15);
    EXPECT_NEAR(wrap_half_turn(0.3 - 3 * kPi), 0.3, 1e-14);
    EXPECT_NEAR(wrap_half_turn(-kPi / 2), kPi / 2, 1e-15);
    EXPECT_NEAR(wrap_half_turn(kPi / 2), kPi / 2, 1e-15);
    for (double a = -10; a < 10; a += 0.37) {
        double w = wrap_half_turn(a);
        EXPECT_GT(w, -kPi / 2);
        EXPECT_LE(w, kPi / 2);
        EXPECT_NEAR(std::sin(2 * w), std::sin(2 * a), 1e-12);
    }
}
