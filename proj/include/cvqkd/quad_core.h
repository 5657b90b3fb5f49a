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

#ifndef CVQKD_QUAD_CORE_H
#define CVQKD_QUAD_CORE_H

#include <cstddef>

#include <Eigen/Dense>

namespace cvqkd {

/// Phase-space algebra for the three-mode (a, b, c) system.
///
/// Quadratures follow x = (k + k^dag)/2, p = (k - k^dag)/2i, so the vacuum
/// variance is 1/4. Every 6-vector and 6x6 matrix in this library is laid out
/// against the fixed basis (x_a, p_a, x_b, p_b, x_c, p_c).

inline constexpr std::size_t kNumModes = 3;
inline constexpr std::size_t kPhaseSpaceDim = 2 * kNumModes;
inline constexpr double kVacuumVariance = 0.25;

using PhaseVector = Eigen::Matrix<double, 6, 1>;
using PhaseMatrix = Eigen::Matrix<double, 6, 6>;

enum class Mode { A = 0, B = 1, C = 2 };
enum class Quadrature { X = 0, P = 1 };

struct QuadIndex {
    Mode mode;
    Quadrature quadrature;

    /// Position in the (x_a, p_a, x_b, p_b, x_c, p_c) basis.
    constexpr std::size_t position() const {
        return 2 * static_cast<std::size_t>(mode) + static_cast<std::size_t>(quadrature);
    }
    static constexpr QuadIndex from_position(std::size_t pos) {
        return QuadIndex{static_cast<Mode>(pos / 2), static_cast<Quadrature>(pos % 2)};
    }
    constexpr bool operator==(const QuadIndex &) const = default;
};

/// Block-diagonal symplectic form, [[0, 1], [-1, 0]] per mode.
const PhaseMatrix &symplectic_form();

/// Linear phase-space map preserving the canonical structure.
class SymplecticMap {
   public:
    SymplecticMap();  // identity
    explicit SymplecticMap(const PhaseMatrix &matrix);

    static SymplecticMap identity() { return SymplecticMap(); }

    const PhaseMatrix &matrix() const { return matrix_; }
    double operator()(std::size_t row, std::size_t col) const {
        return matrix_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }
    double coefficient(QuadIndex out, QuadIndex in) const { return (*this)(out.position(), in.position()); }
    PhaseVector row(QuadIndex out) const {
        return matrix_.row(static_cast<Eigen::Index>(out.position())).transpose();
    }

    /// Largest entry of |M J M^T - J|.
    double symplectic_defect() const;
    bool is_symplectic(double tol = 1e-12) const;

   private:
    PhaseMatrix matrix_;
};

/// Mean vector and symmetrized covariance of a Gaussian three-mode state.
class MomentState {
   public:
    /// Throws std::invalid_argument if cov is not symmetric to 1e-14 relative
    /// or has a negative eigenvalue beyond round-off.
    MomentState(const PhaseVector &mean, const PhaseMatrix &cov);

    static MomentState vacuum();

    const PhaseVector &mean() const { return mean_; }
    const PhaseMatrix &cov() const { return cov_; }
    double variance(QuadIndex q) const {
        auto i = static_cast<Eigen::Index>(q.position());
        return cov_(i, i);
    }
    double covariance(QuadIndex q1, QuadIndex q2) const {
        return cov_(static_cast<Eigen::Index>(q1.position()), static_cast<Eigen::Index>(q2.position()));
    }
    /// Smallest eigenvalue of cov.
    double min_eigenvalue() const;

   private:
    PhaseVector mean_;
    PhaseMatrix cov_;
};

/// Beam splitter rotation on (mode_i, mode_j), identical on x and p:
/// out_i = cos(angle) in_i - sin(angle) in_j, out_j = sin(angle) in_i + cos(angle) in_j.
SymplecticMap bs_map(Mode mode_i, Mode mode_j, double angle);

/// Two-mode squeezer (phase-insensitive amplifier) on (mode_i, mode_j):
/// x_i' = cosh x_i - sinh x_j, p_i' = cosh p_i + sinh p_j, and symmetrically for j.
SymplecticMap tms_map(Mode mode_i, Mode mode_j, double lambda);

/// outer after inner.
SymplecticMap compose(const SymplecticMap &outer, const SymplecticMap &inner);

MomentState propagate(const MomentState &state, const SymplecticMap &map);

/// Shot-noise units scale quadrature-unit variances by 4.
inline constexpr double to_shot_noise_units(double quadrature_variance) { return 4.0 * quadrature_variance; }
inline constexpr double to_quadrature_units(double shot_noise_variance) { return 0.25 * shot_noise_variance; }

}  // namespace cvqkd

#endif
