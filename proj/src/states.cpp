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

#include "tomo/states.hpp"

#include <cmath>

namespace tomo {

double Wavefunction::norm_defect() const {
    Eigen::VectorXd density = values.cwiseAbs2();
    return std::abs(trapezoid(density, grid.step()) - 1.0);
}

void Wavefunction::check_normalized() const {
    if (norm_defect() > 1e-8) {
        throw ContractError("Wavefunction: grid norm deviates from 1 by more than 1e-8");
    }
}

Observable::Observable(Eigen::MatrixXcd m) : elements(std::move(m)) {
    if (elements.rows() != elements.cols() || elements.rows() < 1) {
        throw InputError("Observable: matrix must be square");
    }
    if (hermiticity_defect(elements) > 1e-12) {
        throw InputError("Observable: matrix is not Hermitian (defect > 1e-12)");
    }
}

Wavefunction fock_wavefunction(int n, const PositionGrid &grid) {
    if (n < 0 || n > 200) {
        throw InputError("fock_wavefunction: n must be in [0, 200]");
    }
    double support = std::sqrt(2.0 * n + 1.0) + 4.0;
    if (grid.lo > -support || grid.hi < support) {
        throw InputError("fock_wavefunction: grid too small for requested n");
    }
    Eigen::VectorXcd vals(grid.n);
    for (int i = 0; i < grid.n; i++) {
        vals(i) = oscillator_eigenfunctions(n, grid[i])[n];
    }
    Eigen::VectorXd density = vals.cwiseAbs2();
    vals /= std::sqrt(trapezoid(density, grid.step()));
    return Wavefunction{grid, std::move(vals)};
}

Wavefunction coherent_wavefunction(cdouble alpha, const PositionGrid &grid) {
    const double center = std::sqrt(2.0) * alpha.real();
    const double margin = 4.0 / std::sqrt(2.0);
    if (grid.lo > center - margin || grid.hi < center + margin) {
        throw InputError("coherent_wavefunction: grid too small for displaced Gaussian");
    }
    const double pi_quarter = std::pow(kPi, -0.25);
    const cdouble a2 = alpha * alpha;
    const double mod2 = std::norm(alpha);
    Eigen::VectorXcd vals(grid.n);
    for (int i = 0; i < grid.n; i++) {
        double x = grid[i];
        vals(i) = pi_quarter *
                  std::exp(-0.5 * x * x + std::sqrt(2.0) * alpha * x - 0.5 * a2 - 0.5 * mod2);
    }
    return Wavefunction{grid, std::move(vals)};
}

std::pair<Observable, Observable> ladder_operators(int dim) {
    if (dim < 2) {
        throw InputError("ladder_operators: dim must be >= 2");
    }
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
    for (int k = 0; k + 1 < dim; k++) {
        double c = std::sqrt((k + 1) / 2.0);
        x(k, k + 1) = c;
        x(k + 1, k) = c;
        p(k, k + 1) = cdouble(0.0, -c);
        p(k + 1, k) = cdouble(0.0, c);
    }
    return {Observable(std::move(x)), Observable(std::move(p))};
}

Observable quadrature_operator(const SymplecticFrame &frame, int dim) {
    auto [x, p] = ladder_operators(dim);
    return Observable(frame.mu * x.elements + frame.nu * p.elements);
}

FockDensityMatrix density_from_coefficients(const Eigen::VectorXcd &coeffs) {
    double norm = coeffs.norm();
    if (std::abs(norm - 1.0) > 1e-8) {
        throw ContractError("density_from_coefficients: coefficients not normalized");
    }
    return FockDensityMatrix{coeffs * coeffs.adjoint()};
}

FockDensityMatrix density_from_wavefunction(const Wavefunction &psi, int dim) {
    psi.check_normalized();
    Eigen::MatrixXd basis = oscillator_basis_matrix(psi.grid, dim);
    // c_n = <h_n | psi> by trapezoid quadrature.
    Eigen::VectorXcd weighted = psi.values * psi.grid.step();
    weighted(0) *= 0.5;
    weighted(psi.grid.n - 1) *= 0.5;
    Eigen::VectorXcd coeffs = basis.transpose().cast<cdouble>() * weighted;
    return FockDensityMatrix{coeffs * coeffs.adjoint()};
}

StateDiagnostics validate_state(const FockDensityMatrix &rho) {
    StateDiagnostics d;
    d.hermiticity_defect = hermiticity_defect(rho.elements);
    d.trace_defect = std::abs(rho.elements.trace() - cdouble(1.0, 0.0));
    Eigen::MatrixXcd herm = 0.5 * (rho.elements + rho.elements.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
    d.min_eigenvalue = es.eigenvalues().minCoeff();
    d.pass = d.hermiticity_defect <= 1e-12 && d.trace_defect <= 1e-10 &&
             d.min_eigenvalue >= -1e-10;
    return d;
}

Eigen::MatrixXd oscillator_basis_matrix(const PositionGrid &grid, int dim) {
    Eigen::MatrixXd basis(grid.n, dim);
    for (int i = 0; i < grid.n; i++) {
        auto h = oscillator_eigenfunctions(dim - 1, grid[i]);
        for (int n = 0; n < dim; n++) {
            basis(i, n) = h[n];
        }
    }
    return basis;
}

Eigen::MatrixXcd position_kernel(const FockDensityMatrix &rho, const PositionGrid &grid) {
    Eigen::MatrixXd basis = oscillator_basis_matrix(grid, rho.dim());
    return basis.cast<cdouble>() * rho.elements * basis.transpose().cast<cdouble>();
}

}  // namespace tomo
