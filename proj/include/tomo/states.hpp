// Copyright 2026 The tomoprob developers
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

#ifndef TOMOPROB_STATES_HPP
#define TOMOPROB_STATES_HPP

#include <Eigen/Dense>
#include <utility>

#include "tomo/numerics.hpp"

namespace tomo {

// Dimensionless units throughout: hbar = 1, mass = 1, oscillator frequency = 1.

using PositionGrid = Axis;

/// Default sampling used by constructors and the CLI: wide enough for the
/// vacuum through n = 10 oscillator states with a 4-sigma margin.
inline PositionGrid default_position_grid() {
    return PositionGrid(-10.0, 10.0, 1001);
}

/// Complex amplitude sampled on a position grid, unit-normalized under the
/// trapezoid rule.
struct Wavefunction {
    PositionGrid grid;
    Eigen::VectorXcd values;

    double norm_defect() const;

    /// Throws ContractError if the trapezoid norm is off by more than 1e-8.
    void check_normalized() const;
};

/// Density matrix in the truncated number basis.
struct FockDensityMatrix {
    Eigen::MatrixXcd elements;

    int dim() const {
        return static_cast<int>(elements.rows());
    }
};

/// Hermitian matrix in the truncated number basis.
struct Observable {
    Eigen::MatrixXcd elements;

    Observable() = default;
    explicit Observable(Eigen::MatrixXcd m);

    int dim() const {
        return static_cast<int>(elements.rows());
    }
};

/// Coefficients (mu, nu) of the rotated and scaled quadrature mu*x + nu*p.
struct SymplecticFrame {
    double mu = 1.0;
    double nu = 0.0;

    SymplecticFrame() = default;
    SymplecticFrame(double mu_, double nu_) : mu(mu_), nu(nu_) {
        if (mu == 0.0 && nu == 0.0) {
            throw InputError("SymplecticFrame: (mu, nu) must not both be zero");
        }
    }

    double scale() const {
        return std::hypot(mu, nu);
    }
};

struct StateDiagnostics {
    double hermiticity_defect = 0.0;
    double trace_defect = 0.0;
    double min_eigenvalue = 0.0;
    bool pass = false;
};

/// n-th oscillator eigenfunction sampled on the grid and renormalized there.
/// The grid must span +-(sqrt(2n+1) + 4).
Wavefunction fock_wavefunction(int n, const PositionGrid &grid);

/// Coherent-state amplitude pi^{-1/4} exp(-x^2/2 + sqrt(2) a x - a^2/2 - |a|^2/2).
/// The grid must cover the displaced Gaussian (center sqrt(2) Re a) with a
/// 4-sigma margin.
Wavefunction coherent_wavefunction(cdouble alpha, const PositionGrid &grid);

/// Quadrature matrices x = (a + a^dag)/sqrt(2) and p = (a - a^dag)/(i sqrt(2))
/// in the truncated number basis; both exactly Hermitian.
std::pair<Observable, Observable> ladder_operators(int dim);

/// mu*x + nu*p in the truncated number basis.
Observable quadrature_operator(const SymplecticFrame &frame, int dim);

/// Rank-1 projector |c><c| from number-basis coefficients.  The input must be
/// normalized; no renormalization is applied afterwards, so a truncated
/// expansion shows up as a small trace deficit.
FockDensityMatrix density_from_coefficients(const Eigen::VectorXcd &coeffs);

/// Projects a sampled wavefunction onto the first `dim` number states and
/// forms the rank-1 density matrix.
FockDensityMatrix density_from_wavefunction(const Wavefunction &psi, int dim);

/// Hermiticity, trace and positivity report.  Diagnostic only; never throws.
StateDiagnostics validate_state(const FockDensityMatrix &rho);

/// Matrix whose column n holds the n-th oscillator eigenfunction sampled on
/// the grid (no per-column grid renormalization, so projections of smooth
/// amplitudes converge with the grid).
Eigen::MatrixXd oscillator_basis_matrix(const PositionGrid &grid, int dim);

/// Position-representation kernel rho(y, y') = sum_mn rho_mn h_m(y) h_n(y')
/// of a number-basis density matrix.
Eigen::MatrixXcd position_kernel(const FockDensityMatrix &rho, const PositionGrid &grid);

}  // namespace tomo

#endif
