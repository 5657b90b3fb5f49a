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

#ifndef CVQKD_CIRCUIT_H
#define CVQKD_CIRCUIT_H

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "cvqkd/quad_core.h"

namespace cvqkd {

/// Raised when parameters leave the region where the eavesdropping circuit exists.
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Channel seen by Alice and Bob: line transmission eta, excess noise delta
/// (shot-noise units, Var(x_B | alpha) = (1 + delta)/4) and Alice's modulation
/// variance v_a.
class ChannelParams {
   public:
    /// Throws DomainError unless 0 < eta <= 1, 0 <= delta < 2 eta, v_a > 0.
    ChannelParams(double eta, double delta, double v_a);

    double eta() const { return eta_; }
    double delta() const { return delta_; }
    double v_a() const { return v_a_; }

   private:
    double eta_;
    double delta_;
    double v_a_;
};

/// Amplifier squeezing lambda, first beam splitter angle phi and Eve's
/// combining angle theta.
struct CircuitParams {
    double lambda = 0;
    double phi = 0;
    double theta = 0;

    double gain() const { return std::cosh(lambda) * std::cosh(lambda); }
};

/// alpha with x_alpha = Re(alpha) and p_alpha = Im(alpha).
using CoherentAmplitude = std::complex<double>;

struct AmplifierSetting {
    double lambda;
    double phi;
};

/// Solves for the amplifier and first beam splitter reproducing (eta, delta):
/// tan(phi) = sqrt((1 - eta + delta/2)/(eta - delta/2)), tanh(lambda) = sqrt(delta/(2 eta)).
/// Throws DomainError when delta >= 2 eta or eta outside (0, 1].
AmplifierSetting invert_channel(double eta, double delta);

/// Convenience: CircuitParams from a channel and a choice of Eve's angle.
CircuitParams circuit_for(const ChannelParams &channel, double theta);

/// tms(A, C, lambda), then bs(A, B, phi), then bs(B, C, theta).
SymplecticMap build_circuit(const CircuitParams &params);

struct OutputAmplitudes {
    CoherentAmplitude a;  // Bob's clone, a''
    CoherentAmplitude b;  // b''
    CoherentAmplitude c;  // c''
};

/// Closed-form coherent amplitudes of the three outputs for input |alpha>_a |0>_b |0>_c.
OutputAmplitudes output_amplitudes(const CircuitParams &params, CoherentAmplitude alpha);

struct MeasuredChannel {
    double eta;
    double delta;
};

/// Reads (eta, delta) back off the circuit: eta from Bob's amplitude gain and
/// delta from the propagated vacuum variance of x_a''.
MeasuredChannel verify_channel(const CircuitParams &params);

}  // namespace cvqkd

#endif
