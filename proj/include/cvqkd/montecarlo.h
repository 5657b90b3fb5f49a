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

#ifndef CVQKD_MONTECARLO_H
#define CVQKD_MONTECARLO_H

#include <array>
#include <cstdint>
#include <vector>

#include "cvqkd/attacks.h"
#include "cvqkd/circuit.h"

namespace cvqkd {

inline constexpr uint64_t kMinSamples = 1000;

class SimConfig {
   public:
    /// Throws DomainError when samples < kMinSamples.
    SimConfig(const ChannelParams &channel, AttackKind kind, uint64_t samples, uint64_t seed);

    const ChannelParams &channel() const { return channel_; }
    AttackKind kind() const { return kind_; }
    uint64_t samples() const { return samples_; }
    uint64_t seed() const { return seed_; }

   private:
    ChannelParams channel_;
    AttackKind kind_;
    uint64_t samples_;
    uint64_t seed_;
};

/// What gets measured in a round once Bob's basis is known.
struct BasisPlan {
    PhaseVector bob_row;                  // x_a'' or p_a'' in terms of the inputs
    PhaseVector eve_row;                  // Eve's kept outcome
    std::vector<QuadIndex> eve_recorded;  // every output Eve measures in the round
};

struct RoundPlan {
    std::array<BasisPlan, 2> by_basis;  // indexed by Quadrature
};

/// For the Bell measurement attack both x_b''(pi/4) and p_c''(pi/4) are
/// measured every round; every other attack measures a single quadrature.
RoundPlan round_plan(AttackKind kind, const ChannelParams &channel);

/// Empirical conditional variances over sifted rounds, quadrature units.
struct EmpiricalReport {
    double v_ba_x_hat;
    double v_ba_p_hat;
    double v_be_x_hat;
    double v_be_p_hat;
    double se_ba_x;
    double se_ba_p;
    double se_be_x;
    double se_be_p;
    uint64_t rounds_x;
    uint64_t rounds_p;
    uint64_t samples;

    bool operator==(const EmpiricalReport &) const = default;
};

/// Rounds are derived from (seed, round index) alone and accumulated in fixed
/// chunks, so the report is bit-identical for any worker count. workers = 0
/// picks the hardware concurrency.
EmpiricalReport run_simulation(const SimConfig &config, unsigned workers = 0);

/// Gaussian residual-variance standard error, estimate * sqrt(2/(samples - 1)).
double standard_error(double variance_estimate, uint64_t samples);

}  // namespace cvqkd

#endif
