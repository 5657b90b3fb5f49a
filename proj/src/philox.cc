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

#include "cvqkd/philox.h"

#include <cmath>
#include <numbers>

namespace cvqkd {

namespace {

constexpr uint32_t kMultiplier0 = 0xD2511F53;
constexpr uint32_t kMultiplier1 = 0xCD9E8D57;
constexpr uint32_t kWeyl0 = 0x9E3779B9;
constexpr uint32_t kWeyl1 = 0xBB67AE85;

inline void mulhilo(uint32_t a, uint32_t b, uint32_t &hi, uint32_t &lo) {
    uint64_t product = static_cast<uint64_t>(a) * b;
    hi = static_cast<uint32_t>(product >> 32);
    lo = static_cast<uint32_t>(product);
}

}  // namespace

PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key) {
    for (int round = 0; round < 10; round++) {
        uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMultiplier0, ctr[0], hi0, lo0);
        mulhilo(kMultiplier1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

RoundStream::RoundStream(uint64_t seed, uint64_t round)
    : key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)}, round_(round) {}

uint64_t RoundStream::next_u64() {
    if (used_ >= 4) {
        buffer_ = philox4x32_10(
            {static_cast<uint32_t>(round_), static_cast<uint32_t>(round_ >> 32), block_++, 0}, key_);
        used_ = 0;
    }
    uint64_t value = (static_cast<uint64_t>(buffer_[used_ + 1]) << 32) | buffer_[used_];
    used_ += 2;
    return value;
}

double RoundStream::next_open_unit() {
    // (k + 1) / 2^53 for k in [0, 2^53)
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

std::array<double, 2> RoundStream::next_normal_pair() {
    double u1 = next_open_unit();
    double u2 = next_open_unit();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace cvqkd
