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

#include "cvqkd/quad_core.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace cvqkd {

namespace {

Eigen::Index x_of(Mode m) { return static_cast<Eigen::Index>(QuadIndex{m, Quadrature::X}.position()); }
Eigen::Index p_of(Mode m) { return static_cast<Eigen::Index>(QuadIndex{m, Quadrature::P}.position()); }

void require_distinct(Mode mode_i, Mode mode_j, const char *op) {
    if (mode_i == mode_j) {
        throw std::invalid_argument(std::string(op) + ": the two modes must be distinct");
    }
}

}  // namespace

const PhaseMatrix &symplectic_form() {
    static const PhaseMatrix form = [] {
        PhaseMatrix j = PhaseMatrix::Zero();
        for (Eigen::Index k = 0; k < 3; k++) {
            j(2 * k, 2 * k + 1) = 1;
            j(2 * k + 1, 2 * k) = -1;
        }
        return j;
    }();
    return form;
}

SymplecticMap::SymplecticMap() : matrix_(PhaseMatrix::Identity()) {}

SymplecticMap::SymplecticMap(const PhaseMatrix &matrix) : matrix_(matrix) {}

double SymplecticMap::symplectic_defect() const {
    const PhaseMatrix &j = symplectic_form();
    return (matrix_ * j * matrix_.transpose() - j).cwiseAbs().maxCoeff();
}

bool SymplecticMap::is_symplectic(double tol) const {
    return symplectic_defect() <= tol && std::abs(matrix_.determinant() - 1.0) <= tol;
}

MomentState::MomentState(const PhaseVector &mean, const PhaseMatrix &cov) : mean_(mean), cov_(cov) {
    double scale = std::max(1.0, cov.cwiseAbs().maxCoeff());
    if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-14 * scale) {
        throw std::invalid_argument("MomentState: covariance is not symmetric");
    }
    if (min_eigenvalue() < -1e-12 * scale) {
        throw std::invalid_argument("MomentState: covariance is not positive semidefinite");
    }
}

MomentState MomentState::vacuum() {
    return MomentState(PhaseVector::Zero(), kVacuumVariance * PhaseMatrix::Identity());
}

double MomentState::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<PhaseMatrix> solver(cov_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

SymplecticMap bs_map(Mode mode_i, Mode mode_j, double angle) {
    require_distinct(mode_i, mode_j, "bs_map");
    if (!std::isfinite(angle)) {
        throw std::invalid_argument("bs_map: angle must be finite");
    }
    double c = std::cos(angle);
    double s = std::sin(angle);
    PhaseMatrix m = PhaseMatrix::Identity();
    for (auto idx : {&x_of, &p_of}) {
        Eigen::Index i = idx(mode_i);
        Eigen::Index j = idx(mode_j);
        m(i, i) = c;
        m(i, j) = -s;
        m(j, i) = s;
        m(j, j) = c;
    }
    return SymplecticMap(m);
}

SymplecticMap tms_map(Mode mode_i, Mode mode_j, double lambda) {
    require_distinct(mode_i, mode_j, "tms_map");
    if (!std::isfinite(lambda) || lambda < 0) {
        throw std::invalid_argument("tms_map: lambda must be finite and nonnegative");
    }
    double ch = std::cosh(lambda);
    double sh = std::sinh(lambda);
    PhaseMatrix m = PhaseMatrix::Identity();
    // i' = ch i - sh j^dag: the conjugate flips the sign of the p coupling.
    m(x_of(mode_i), x_of(mode_i)) = ch;
    m(x_of(mode_i), x_of(mode_j)) = -sh;
    m(x_of(mode_j), x_of(mode_j)) = ch;
    m(x_of(mode_j), x_of(mode_i)) = -sh;
    m(p_of(mode_i), p_of(mode_i)) = ch;
    m(p_of(mode_i), p_of(mode_j)) = sh;
    m(p_of(mode_j), p_of(mode_j)) = ch;
    m(p_of(mode_j), p_of(mode_i)) = sh;
    return SymplecticMap(m);
}

SymplecticMap compose(const SymplecticMap &outer, const SymplecticMap &inner) {
    return SymplecticMap(outer.matrix() * inner.matrix());
}

MomentState propagate(const MomentState &state, const SymplecticMap &map) {
    const PhaseMatrix &m = map.matrix();
    PhaseMatrix cov = m * state.cov() * m.transpose();
    // Re-symmetrize: the triple product is symmetric only up to round-off.
    cov = 0.5 * (cov + cov.transpose()).eval();
    return MomentState(m * state.mean(), cov);
}

}  // namespace cvqkd
