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

#ifndef CVQKD_PHILOX_H
#define CVQKD_PHILOX_H

#include <array>
#include <cstdint>

namespace cvqkd {

// Salmon et al., "Parallel random numbers: as easy as 1, 2, 3" (SC 2011).
// Philox4x32 with 10 rounds: a keyed bijection on 128-bit counters, so the
// stream for any (key, counter) is available without touching its neighbours.

using PhiloxCounter = std::array<uint32_t, 4>;
using PhiloxKey = std::array<uint32_t, 2>;

PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key);

/// Random draws for one simulation round, derived only from (seed, round).
class RoundStream {
   public:
    RoundStream(uint64_t seed, uint64_t round);

    uint64_t next_u64();
    /// Uniform on (0, 1], 53 bits.
    double next_open_unit();
    /// Standard normal pair by Box-Muller.
    std::array<double, 2> next_normal_pair();

   private:
    PhiloxKey key_;
    uint64_t round_;
    uint32_t block_ = 0;
    PhiloxCounter buffer_{};
    int used_ = 4;  // 32-bit words consumed from buffer_
};

}  // namespace cvqkd

#endif
