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

#ifndef CVQKD_ENSEMBLE_H
#define CVQKD_ENSEMBLE_H

#include <cstddef>

#include "cvqkd/circuit.h"
#include "cvqkd/quad_core.h"

namespace cvqkd {

/// Variables of the joint Gaussian ensemble, in storage order.
enum class Variable : std::size_t {
    AliceX = 0,  // x_A, Alice's classical position signal
    AliceP,      // p_A
    BobX,        // x_a''
    BobP,        // p_a''
    CloneX,      // x_b''
    CloneP,      // p_b''
    AnticloneX,  // x_c''
    AnticloneP,  // p_c''
};

inline constexpr std::size_t kNumVariables = 8;

inline constexpr Variable output_variable(QuadIndex q) { return static_cast<Variable>(2 + q.position()); }

enum class VarianceConvention {
    QuadratureUnits,  // vacuum = 1/4
    ShotNoiseUnits,   // vacuum = 1
};

inline constexpr double in_convention(double quadrature_variance, VarianceConvention convention) {
    return convention == VarianceConvention::ShotNoiseUnits ? to_shot_noise_units(quadrature_variance)
                                                            : quadrature_variance;
}

using JointMatrix = Eigen::Matrix<double, 8, 8>;

/// Zero-mean second moments over (x_A, p_A) and the six output quadratures,
/// in quadrature units.
class JointMoments {
   public:
    explicit JointMoments(const JointMatrix &cov);

    const JointMatrix &cov() const { return cov_; }
    double variance(Variable v) const { return cov_(index(v), index(v)); }
    double covariance(Variable v, Variable w) const { return cov_(index(v), index(w)); }

   private:
    static Eigen::Index index(Variable v) { return static_cast<Eigen::Index>(v); }
    JointMatrix cov_;
};

/// Alice modulates x_a = x_A + vacuum (and likewise p), b and c start in
/// vacuum, and the three modes pass through the circuit at Eve's angle theta.
JointMoments ensemble_moments(const ChannelParams &channel, double theta);

struct ConditionalVariance {
    double value;
    /// Set when the conditioning variable has zero variance; value is then Var(target).
    bool degenerate = false;
};

/// V(target | given) = Var(target) - Cov(target, given)^2 / Var(given).
ConditionalVariance conditional_variance(const JointMoments &m, Variable target, Variable given,
                                         VarianceConvention convention = VarianceConvention::QuadratureUnits);

struct AliceConditionalVariances {
    double x;  // V(x_B | x_A)
    double p;  // V(p_B | p_A)
};

/// Both equal (1 + delta)/4 in quadrature units.
AliceConditionalVariances alice_conditional_variances(
    const ChannelParams &channel, VarianceConvention convention = VarianceConvention::QuadratureUnits);

}  // namespace cvqkd

#endif
