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

#include "cvqkd/ensemble.h"

#include <algorithm>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace cvqkd {

JointMoments::JointMoments(const JointMatrix &cov) : cov_(cov) {
    double scale = std::max(1.0, cov.cwiseAbs().maxCoeff());
    if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-14 * scale) {
        throw std::invalid_argument("JointMoments: covariance is not symmetric");
    }
    Eigen::SelfAdjointEigenSolver<JointMatrix> solver(cov, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-12 * scale) {
        throw std::invalid_argument("JointMoments: covariance is not positive semidefinite");
    }
}

JointMoments ensemble_moments(const ChannelParams &channel, double theta) {
    SymplecticMap circuit = build_circuit(circuit_for(channel, theta));
    double signal = channel.v_a() / 4;

    PhaseMatrix input_cov = kVacuumVariance * PhaseMatrix::Identity();
    input_cov(0, 0) += signal;
    input_cov(1, 1) += signal;
    MomentState output = propagate(MomentState(PhaseVector::Zero(), input_cov), circuit);

    // Alice's variables enter only mode a, so Cov(alice, input) = signal on (x_a, p_a).
    Eigen::Matrix<double, 2, 6> alice_input = Eigen::Matrix<double, 2, 6>::Zero();
    alice_input(0, 0) = signal;
    alice_input(1, 1) = signal;
    Eigen::Matrix<double, 2, 6> alice_output = alice_input * circuit.matrix().transpose();

    JointMatrix cov;
    cov.topLeftCorner<2, 2>() = signal * Eigen::Matrix2d::Identity();
    cov.topRightCorner<2, 6>() = alice_output;
    cov.bottomLeftCorner<6, 2>() = alice_output.transpose();
    cov.bottomRightCorner<6, 6>() = output.cov();
    return JointMoments(cov);
}

ConditionalVariance conditional_variance(const JointMoments &m, Variable target, Variable given,
                                         VarianceConvention convention) {
    double var_target = m.variance(target);
    double var_given = m.variance(given);
    if (var_given <= 0) {
        return ConditionalVariance{.value = in_convention(var_target, convention), .degenerate = true};
    }
    double cov = m.covariance(target, given);
    double residual = std::clamp(var_target - cov * cov / var_given, 0.0, var_target);
    return ConditionalVariance{.value = in_convention(residual, convention)};
}

AliceConditionalVariances alice_conditional_variances(const ChannelParams &channel, VarianceConvention convention) {
    // Bob's mode does not depend on Eve's angle.
    JointMoments m = ensemble_moments(channel, 0.0);
    return AliceConditionalVariances{
        .x = conditional_variance(m, Variable::BobX, Variable::AliceX, convention).value,
        .p = conditional_variance(m, Variable::BobP, Variable::AliceP, convention).value,
    };
}

}  // namespace cvqkd
