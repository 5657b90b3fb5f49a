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

#ifndef CVQKD_ATTACKS_H
#define CVQKD_ATTACKS_H

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cvqkd/circuit.h"
#include "cvqkd/ensemble.h"

namespace cvqkd {

/// Eve's strategies built on the cloning circuit.
///
///   Cloning          theta = 0, reads clone 2 (b').
///   Anticloning      theta = 0, reads the anticlone (c').
///   BellMeasurement  theta = pi/4 fixed up front; x of b'' and p of c'' are
///                    both measured immediately and one is kept after Bob
///                    announces his basis.
///   OptimalGaussian  holds b', c' until the basis is announced, then measures
///                    x_b''(theta_opt) or p_b''(-theta_opt).
enum class AttackKind { Cloning, Anticloning, BellMeasurement, OptimalGaussian };

inline constexpr std::array<AttackKind, 4> kAllAttacks = {
    AttackKind::Cloning, AttackKind::Anticloning, AttackKind::BellMeasurement, AttackKind::OptimalGaussian};

/// CLI spelling: clone, anticlone, bma, optimal.
std::string_view attack_name(AttackKind kind);
std::optional<AttackKind> parse_attack_kind(std::string_view name);

/// Expansion x_b''(theta) = X x_a + Y x_b + Z x_c for the circuit matched to (eta, delta).
struct XYZCoefficients {
    double x_coef;
    double y_coef;
    double z_coef;
};

XYZCoefficients xyz(double theta, double eta, double delta);

/// V(x_a'' | x_b''(theta)) from the closed form in X, Y, Z and
///   Omega = X - Y sqrt((1 - eta + delta/2)/eta) - Z sqrt(delta/(2 eta)).
double v_be(double theta, double eta, double delta, double v_a,
            VarianceConvention convention = VarianceConvention::ShotNoiseUnits);

/// Eve's four single-quadrature conditional variances at angle theta, taken
/// from the covariance route (not from the closed form).
struct SymmetryVariances {
    double x_given_b;  // V(x_B | x_b''(theta))
    double x_given_c;  // V(x_B | x_c''(theta))
    double p_given_b;  // V(p_B | p_b''(theta))
    double p_given_c;  // V(p_B | p_c''(theta))
};

SymmetryVariances v_be_symmetries(double theta, double eta, double delta, double v_a,
                                  VarianceConvention convention = VarianceConvention::ShotNoiseUnits);

// Per-attack closed forms, shot-noise units.
double v_be_cloning(double eta, double delta, double v_a);
double v_be_anticloning(double eta, double delta, double v_a);
double v_be_bell(double eta, double delta, double v_a);
double v_be_optimal(double eta, double delta, double v_a);

struct OptimalAngle {
    double theta;            // authoritative angle, in (-pi/2, pi/2]
    double closed_form;      // principal-branch arctan formula
    double minimizer;        // numerical minimizer of v_be over theta
    bool discrepancy = false;  // closed form did not reach the minimum; theta is the minimizer
};

/// Both routes to Eve's best combining angle. delta = 0 gives 0 (the
/// anticlone is vacuum and carries nothing).
OptimalAngle optimal_angle(double eta, double delta, double v_a);
double theta_opt(double eta, double delta, double v_a);
double theta_opt_closed_form(double eta, double delta, double v_a);

/// Which output Eve reads for a given announced basis, and at what angle.
struct EveReadout {
    double theta;
    QuadIndex output;
};

EveReadout eve_readout(AttackKind kind, const ChannelParams &channel, Quadrature bob_basis);

/// Eve can read out before the basis announcement (no quantum memory).
constexpr bool needs_quantum_memory(AttackKind kind) { return kind != AttackKind::BellMeasurement; }

/// Covariance-route conditional variance of Bob's quadrature given Eve's readout.
double eve_conditional_variance_from_moments(AttackKind kind, const ChannelParams &channel, Quadrature bob_basis,
                                             VarianceConvention convention = VarianceConvention::ShotNoiseUnits);

struct Threshold {
    double eta;
    /// Above 1 (or undefined): no transmission makes the channel secure.
    bool unreachable = false;
};

/// Smallest line transmission for which V(x_B|x_A) <= V(x_B|x_E) against the attack.
Threshold threshold(AttackKind kind, double delta, double v_a);

double eta_clone_closed_form(double delta, double v_a);

/// Root in eta of (1 + delta) - v_be(eta) on (delta/2, 1], evaluated through
/// the general closed form at the attack's angle. nullopt when no root lies there.
std::optional<double> threshold_by_bisection(AttackKind kind, double delta, double v_a);

/// Necessary condition for any coherent-state protocol: eta > delta/2.
double intercept_resend_bound(double delta);

struct AttackReport {
    AttackKind kind;
    double theta = 0;  // Eve's angle for the x basis
    double v_be_x = 0;
    double v_be_p = 0;
    double v_ba = 0;
    VarianceConvention convention = VarianceConvention::ShotNoiseUnits;
    bool secure = false;
    Threshold threshold_eta{};
    bool theta_discrepancy = false;
};

AttackReport attack_report(AttackKind kind, const ChannelParams &channel,
                           VarianceConvention convention = VarianceConvention::ShotNoiseUnits);

struct HighModulationLimits {
    double v_be_opt;   // 1/(1 + delta - eta), shot-noise units
    double theta_opt;  // arctan(sqrt(eta delta)/(sqrt(2 - 2 eta + delta)(eta - delta)))
    bool theta_at_boundary = false;  // eta == delta: the limit sits on +-pi/2
};

HighModulationLimits high_modulation_limits(double eta, double delta);

struct ThresholdRow {
    double delta;
    double eta_clone;
    double eta_anticlone;
    double eta_bma;
    double eta_opt;
    double eta_intercept_resend;
};

/// eta_opt >= eta_bma >= eta_anticlone >= eta_clone, each up to tol.
bool is_ordered(const ThresholdRow &row, double tol = 1e-12);

struct ThresholdCurve {
    double v_a;
    std::vector<ThresholdRow> rows;
};

ThresholdRow threshold_row(double delta, double v_a);

/// Rows come back in ascending delta regardless of the grid order.
ThresholdCurve threshold_curve(double v_a, std::span<const double> delta_grid);

}  // namespace cvqkd

#endif
