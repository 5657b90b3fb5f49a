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

#include "cvqkd/attacks.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cvqkd/numerics.h"

namespace cvqkd {

namespace {

constexpr double kPi = std::numbers::pi;

void check_modulation(double v_a) {
    if (!std::isfinite(v_a) || !(v_a > 0)) {
        std::ostringstream ss;
        ss << "modulation variance must satisfy v_a > 0 (got v_a=" << v_a << ")";
        throw DomainError(ss.str());
    }
}

void check_excess_noise(double delta) {
    if (!std::isfinite(delta) || delta < 0) {
        std::ostringstream ss;
        ss << "excess noise must satisfy delta >= 0 (got delta=" << delta << ")";
        throw DomainError(ss.str());
    }
}

Variable bob_variable(Quadrature basis) { return basis == Quadrature::X ? Variable::BobX : Variable::BobP; }

// Angle at which conditioning on x_b'' reproduces the attack's x-basis readout.
double clone_port_angle(AttackKind kind, double eta, double delta, double v_a);

}  // namespace

std::string_view attack_name(AttackKind kind) {
    switch (kind) {
        case AttackKind::Cloning:
            return "clone";
        case AttackKind::Anticloning:
            return "anticlone";
        case AttackKind::BellMeasurement:
            return "bma";
        case AttackKind::OptimalGaussian:
            return "optimal";
    }
    return "?";
}

std::optional<AttackKind> parse_attack_kind(std::string_view name) {
    for (AttackKind kind : kAllAttacks) {
        if (attack_name(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

XYZCoefficients xyz(double theta, double eta, double delta) {
    // Same domain as the circuit inversion.
    (void)invert_channel(eta, delta);
    double transmitted = std::sqrt(eta - delta / 2);
    double reflected = std::sqrt(1 - eta + delta / 2);
    double noise = std::sqrt(delta / 2);
    double root_eta = std::sqrt(eta);
    double c = std::cos(theta);
    double s = std::sin(theta);
    return XYZCoefficients{
        .x_coef = (root_eta * reflected * c + noise * s) / transmitted,
        .y_coef = transmitted * c,
        .z_coef = -(root_eta * s + noise * reflected * c) / transmitted,
    };
}

double v_be(double theta, double eta, double delta, double v_a, VarianceConvention convention) {
    check_modulation(v_a);
    XYZCoefficients k = xyz(theta, eta, delta);
    double x = k.x_coef;
    double y = k.y_coef;
    double z = k.z_coef;
    double omega = x - y * std::sqrt((1 - eta + delta / 2) / eta) - z * std::sqrt(delta / (2 * eta));
    double norm = x * x + y * y + z * z;
    double snu = 1 + delta + eta * (v_a * (norm - 2 * x * omega) - omega * omega) / ((v_a + 1) * x * x + y * y + z * z);
    return convention == VarianceConvention::ShotNoiseUnits ? snu : to_quadrature_units(snu);
}

SymmetryVariances v_be_symmetries(double theta, double eta, double delta, double v_a,
                                  VarianceConvention convention) {
    JointMoments m = ensemble_moments(ChannelParams(eta, delta, v_a), theta);
    auto cv = [&](Variable target, Variable given) {
        return conditional_variance(m, target, given, convention).value;
    };
    return SymmetryVariances{
        .x_given_b = cv(Variable::BobX, Variable::CloneX),
        .x_given_c = cv(Variable::BobX, Variable::AnticloneX),
        .p_given_b = cv(Variable::BobP, Variable::CloneP),
        .p_given_c = cv(Variable::BobP, Variable::AnticloneP),
    };
}

double v_be_cloning(double eta, double delta, double v_a) {
    double num = delta + 2 * (1 + v_a) * eta;
    double den = delta * delta + delta * (1 + (v_a - 2) * eta) + 2 * eta * (1 + v_a * (1 - eta));
    return num / den;
}

double v_be_anticloning(double eta, double delta, double v_a) {
    return 1 + delta - eta * ((4 + 3 * v_a) * delta - 2 * v_a * eta) / ((1 + v_a) * delta + 2 * eta);
}

double v_be_bell(double eta, double delta, double v_a) {
    double gap = 2 * eta - delta;
    double den = delta * delta + 2 * (v_a + 2) * std::sqrt(2 * eta * delta * (1 - eta + delta / 2)) +
                 delta * (v_a + 2 + (v_a - 2) * eta) + 2 * eta * (2 + v_a * (1 - eta));
    return 1 + v_a * gap * gap / den;
}

double v_be_optimal(double eta, double delta, double v_a) {
    return (1 + v_a) / ((1 + v_a) * (1 + delta) - eta * v_a);
}

double theta_opt_closed_form(double eta, double delta, double v_a) {
    if (delta == 0) {
        return 0;
    }
    double num = std::sqrt(eta * delta) * (2 + v_a);
    double den = std::sqrt(2 - 2 * eta + delta) * (v_a * (eta - delta) - delta);
    if (den == 0) {
        return kPi / 2;
    }
    return numerics::wrap_half_turn(std::atan(num / den));
}

OptimalAngle optimal_angle(double eta, double delta, double v_a) {
    (void)ChannelParams(eta, delta, v_a);
    if (delta == 0) {
        return OptimalAngle{.theta = 0, .closed_form = 0, .minimizer = 0};
    }
    auto f = [&](double t) { return v_be(t, eta, delta, v_a); };
    double closed = theta_opt_closed_form(eta, delta, v_a);
    numerics::Minimum best = numerics::minimize_periodic(f);
    OptimalAngle out{.theta = closed, .closed_form = closed, .minimizer = best.x};
    double at_closed = f(closed);
    if (at_closed > best.value * (1 + 1e-9)) {
        out.theta = best.x;
        out.discrepancy = true;
    }
    return out;
}

double theta_opt(double eta, double delta, double v_a) { return optimal_angle(eta, delta, v_a).theta; }

EveReadout eve_readout(AttackKind kind, const ChannelParams &channel, Quadrature bob_basis) {
    switch (kind) {
        case AttackKind::Cloning:
            return EveReadout{.theta = 0, .output = {Mode::B, bob_basis}};
        case AttackKind::Anticloning:
            return EveReadout{.theta = 0, .output = {Mode::C, bob_basis}};
        case AttackKind::BellMeasurement:
            return EveReadout{
                .theta = kPi / 4,
                .output = bob_basis == Quadrature::X ? QuadIndex{Mode::B, Quadrature::X}
                                                     : QuadIndex{Mode::C, Quadrature::P},
            };
        case AttackKind::OptimalGaussian: {
            double t = theta_opt(channel.eta(), channel.delta(), channel.v_a());
            return EveReadout{
                .theta = bob_basis == Quadrature::X ? t : -t,
                .output = {Mode::B, bob_basis},
            };
        }
    }
    throw std::invalid_argument("unknown attack kind");
}

double eve_conditional_variance_from_moments(AttackKind kind, const ChannelParams &channel, Quadrature bob_basis,
                                             VarianceConvention convention) {
    EveReadout readout = eve_readout(kind, channel, bob_basis);
    JointMoments m = ensemble_moments(channel, readout.theta);
    return conditional_variance(m, bob_variable(bob_basis), output_variable(readout.output), convention).value;
}

namespace {

double clone_port_angle(AttackKind kind, double eta, double delta, double v_a) {
    switch (kind) {
        case AttackKind::Cloning:
            return 0;
        case AttackKind::Anticloning:
            return kPi / 2;
        case AttackKind::BellMeasurement:
            return kPi / 4;
        case AttackKind::OptimalGaussian:
            return theta_opt(eta, delta, v_a);
    }
    throw std::invalid_argument("unknown attack kind");
}

}  // namespace

double eta_clone_closed_form(double delta, double v_a) {
    double a = (3 + delta) * v_a;
    double root = std::sqrt((a + 2 * delta) * (a + 2 * delta) + 16 * v_a);
    return delta / (4 * v_a * (1 + delta)) * (a - 2 * delta + root);
}

Threshold threshold(AttackKind kind, double delta, double v_a) {
    check_excess_noise(delta);
    check_modulation(v_a);
    double eta = 0;
    switch (kind) {
        case AttackKind::Cloning:
            eta = eta_clone_closed_form(delta, v_a);
            break;
        case AttackKind::Anticloning:
            eta = (4 + 3 * v_a) * delta / (2 * v_a);
            break;
        case AttackKind::BellMeasurement: {
            // Radicand (v_a + 2)(v_a - delta) goes negative for v_a < delta: no real threshold.
            double radicand = (v_a + 2) * (v_a - delta);
            eta = radicand < 0 ? std::numeric_limits<double>::quiet_NaN()
                               : 2 * delta * (v_a + 1 - delta / 2 + std::sqrt(radicand)) / (v_a * (2 + delta));
            break;
        }
        case AttackKind::OptimalGaussian:
            eta = (1 + v_a) / v_a * delta * (2 + delta) / (1 + delta);
            break;
    }
    return Threshold{.eta = eta, .unreachable = !(eta <= 1)};
}

std::optional<double> threshold_by_bisection(AttackKind kind, double delta, double v_a) {
    check_excess_noise(delta);
    check_modulation(v_a);
    if (delta == 0) {
        return 0.0;
    }
    auto margin = [&](double eta) {
        return v_be(clone_port_angle(kind, eta, delta, v_a), eta, delta, v_a) - (1 + delta);
    };
    double lo = std::nextafter(delta / 2, 2.0) * (1 + 1e-12);
    if (lo >= 1) {
        return std::nullopt;
    }
    return numerics::bisect_root(margin, lo, 1.0);
}

double intercept_resend_bound(double delta) {
    check_excess_noise(delta);
    return delta / 2;
}

AttackReport attack_report(AttackKind kind, const ChannelParams &channel, VarianceConvention convention) {
    double eta = channel.eta();
    double delta = channel.delta();
    double v_a = channel.v_a();
    AttackReport report{.kind = kind, .convention = convention};
    double snu = 0;
    switch (kind) {
        case AttackKind::Cloning:
            report.theta = 0;
            snu = v_be_cloning(eta, delta, v_a);
            break;
        case AttackKind::Anticloning:
            report.theta = 0;
            snu = v_be_anticloning(eta, delta, v_a);
            break;
        case AttackKind::BellMeasurement:
            report.theta = kPi / 4;
            snu = v_be_bell(eta, delta, v_a);
            break;
        case AttackKind::OptimalGaussian: {
            OptimalAngle angle = optimal_angle(eta, delta, v_a);
            report.theta = angle.theta;
            report.theta_discrepancy = angle.discrepancy;
            snu = v_be_optimal(eta, delta, v_a);
            break;
        }
    }
    // Every attack here reaches the same uncertainty on x and p.
    report.v_be_x = in_convention(to_quadrature_units(snu), convention);
    report.v_be_p = report.v_be_x;
    report.v_ba = in_convention(to_quadrature_units(1 + delta), convention);
    report.secure = report.v_ba <= std::min(report.v_be_x, report.v_be_p);
    report.threshold_eta = threshold(kind, delta, v_a);
    return report;
}

HighModulationLimits high_modulation_limits(double eta, double delta) {
    (void)invert_channel(eta, delta);
    HighModulationLimits out{.v_be_opt = 1 / (1 + delta - eta), .theta_opt = 0};
    if (delta == 0) {
        return out;
    }
    if (eta == delta) {
        out.theta_opt = kPi / 2;
        out.theta_at_boundary = true;
        return out;
    }
    double ratio = std::sqrt(eta * delta) / (std::sqrt(2 - 2 * eta + delta) * (eta - delta));
    out.theta_opt = std::atan(ratio);
    return out;
}

bool is_ordered(const ThresholdRow &row, double tol) {
    return row.eta_opt >= row.eta_bma - tol && row.eta_bma >= row.eta_anticlone - tol &&
           row.eta_anticlone >= row.eta_clone - tol;
}

ThresholdRow threshold_row(double delta, double v_a) {
    return ThresholdRow{
        .delta = delta,
        .eta_clone = threshold(AttackKind::Cloning, delta, v_a).eta,
        .eta_anticlone = threshold(AttackKind::Anticloning, delta, v_a).eta,
        .eta_bma = threshold(AttackKind::BellMeasurement, delta, v_a).eta,
        .eta_opt = threshold(AttackKind::OptimalGaussian, delta, v_a).eta,
        .eta_intercept_resend = intercept_resend_bound(delta),
    };
}

ThresholdCurve threshold_curve(double v_a, std::span<const double> delta_grid) {
    std::vector<double> deltas(delta_grid.begin(), delta_grid.end());
    std::sort(deltas.begin(), deltas.end());
    ThresholdCurve curve{.v_a = v_a, .rows = {}};
    curve.rows.reserve(deltas.size());
    for (double delta : deltas) {
        curve.rows.push_back(threshold_row(delta, v_a));
    }
    return curve;
}

}  // namespace cvqkd
