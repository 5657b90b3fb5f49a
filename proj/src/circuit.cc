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

#include "cvqkd/circuit.h"

#include <sstream>

namespace cvqkd {

namespace {

void check_eta_delta(double eta, double delta) {
    if (!std::isfinite(eta) || !(eta > 0 && eta <= 1)) {
        std::ostringstream ss;
        ss << "line transmission must satisfy 0 < eta <= 1 (got eta=" << eta << ")";
        throw DomainError(ss.str());
    }
    if (!std::isfinite(delta) || delta < 0) {
        std::ostringstream ss;
        ss << "excess noise must satisfy delta >= 0 (got delta=" << delta << ")";
        throw DomainError(ss.str());
    }
    if (delta >= 2 * eta) {
        std::ostringstream ss;
        ss << "cloning circuit requires delta < 2*eta (got eta=" << eta << ", delta=" << delta << ")";
        throw DomainError(ss.str());
    }
}

}  // namespace

ChannelParams::ChannelParams(double eta, double delta, double v_a) : eta_(eta), delta_(delta), v_a_(v_a) {
    check_eta_delta(eta, delta);
    if (!std::isfinite(v_a) || !(v_a > 0)) {
        std::ostringstream ss;
        ss << "modulation variance must satisfy v_a > 0 (got v_a=" << v_a << ")";
        throw DomainError(ss.str());
    }
}

AmplifierSetting invert_channel(double eta, double delta) {
    check_eta_delta(eta, delta);
    double transmitted = eta - delta / 2;
    double reflected = 1 - transmitted;
    return AmplifierSetting{
        .lambda = std::atanh(std::sqrt(delta / (2 * eta))),
        .phi = std::atan2(std::sqrt(reflected), std::sqrt(transmitted)),
    };
}

CircuitParams circuit_for(const ChannelParams &channel, double theta) {
    AmplifierSetting amp = invert_channel(channel.eta(), channel.delta());
    return CircuitParams{.lambda = amp.lambda, .phi = amp.phi, .theta = theta};
}

SymplecticMap build_circuit(const CircuitParams &params) {
    SymplecticMap amp = tms_map(Mode::A, Mode::C, params.lambda);
    SymplecticMap split = bs_map(Mode::A, Mode::B, params.phi);
    SymplecticMap combine = bs_map(Mode::B, Mode::C, params.theta);
    return compose(combine, compose(split, amp));
}

OutputAmplitudes output_amplitudes(const CircuitParams &params, CoherentAmplitude alpha) {
    double ch = std::cosh(params.lambda);
    double sh = std::sinh(params.lambda);
    double cp = std::cos(params.phi);
    double sp = std::sin(params.phi);
    double ct = std::cos(params.theta);
    double st = std::sin(params.theta);
    CoherentAmplitude conj = std::conj(alpha);
    return OutputAmplitudes{
        .a = alpha * ch * cp,
        .b = alpha * ch * ct * sp + conj * sh * st,
        .c = alpha * ch * st * sp - conj * sh * ct,
    };
}

MeasuredChannel verify_channel(const CircuitParams &params) {
    SymplecticMap circuit = build_circuit(params);
    double gain = std::cosh(params.lambda) * std::cos(params.phi);
    MomentState out = propagate(MomentState::vacuum(), circuit);
    double var_x = out.variance({Mode::A, Quadrature::X});
    return MeasuredChannel{.eta = gain * gain, .delta = 4 * var_x - 1};
}

}  // namespace cvqkd
