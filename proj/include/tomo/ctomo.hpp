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

#ifndef TOMOPROB_CTOMO_HPP
#define TOMOPROB_CTOMO_HPP

#include <Eigen/Dense>
#include <vector>

#include "tomo/states.hpp"

namespace tomo {

// Wigner normalization used throughout this project:
//
//     W(q, p) = integral rho(q + u/2, q - u/2) e^{-ipu} du,
//     (1/2pi) integral integral W dq dp = 1.
//
// Other conventions differ by factors of 2pi; every transform below and the
// CSV emitters assume this one.

/// Quadrature distribution w(X; mu, nu) of the frame mu*x + nu*p.
struct Tomogram {
    SymplecticFrame frame;
    Axis x_axis;
    Eigen::VectorXd values;

    double integral() const;
    /// True when both X ends have decayed below 1e-8, i.e. the sampled
    /// window carries essentially all of the mass.
    bool covers_support() const;
    /// Normalization within 1e-6 and no value below -1e-9.  Only meaningful
    /// when covers_support(); throws ContractError on violation.
    void validate() const;
};

/// W(q, p) sampled on a rectangular phase-space grid (values(iq, ip)).
struct WignerGrid {
    Axis q_axis;
    Axis p_axis;
    Eigen::MatrixXd values;

    /// (1/2pi) * double trapezoid - 1.
    double normalization_defect() const;
    bool covers_support() const;
};

/// Tomograms of one state over a rectangular (mu, nu) frame grid, sharing
/// one X axis.  slice(i, j) holds w(X; mu_i, nu_j).
struct TomogramFamily {
    Axis mu_axis;
    Axis nu_axis;
    Axis x_axis;
    std::vector<Eigen::VectorXd> slices;

    Eigen::VectorXd &slice(int imu, int inu) {
        return slices[static_cast<size_t>(imu) * nu_axis.n + inu];
    }
    const Eigen::VectorXd &slice(int imu, int inu) const {
        return slices[static_cast<size_t>(imu) * nu_axis.n + inu];
    }
};

/// (mu, nu) = (e^lambda cos phi, e^{-lambda} sin phi).
SymplecticFrame frame_from_angles(double lambda, double phi);

/// Closed-form oscillator-eigenstate tomogram,
/// pi^{-1/2} (2^n n!)^{-1} s^{-1} H_n(X/s)^2 e^{-X^2/s^2}, s^2 = mu^2 + nu^2.
double oracle_tomogram_fock(int n, double x, const SymplecticFrame &frame);

/// Closed-form coherent-state tomogram: Gaussian with mean
/// sqrt(2)(Re a mu + Im a nu) and variance (mu^2 + nu^2)/2.
double oracle_tomogram_coherent(cdouble alpha, double x, const SymplecticFrame &frame);

/// W from the position-representation kernel rho(y, y') sampled on `grid`.
/// q_axis nodes must coincide with grid nodes (see aligned_subaxis).
WignerGrid wigner_from_density(const Eigen::MatrixXcd &kernel, const PositionGrid &grid,
                               const Axis &q_axis, const Axis &p_axis);

/// Tomogram from the position kernel via the double oscillatory quadrature.
/// Refuses (InputError) when the phase advances by pi/4 or more per grid
/// step; exact nu = 0 is routed to the position-density branch.
Tomogram tomogram_from_density(const Eigen::MatrixXcd &kernel, const PositionGrid &grid,
                               const SymplecticFrame &frame, const Axis &x_axis);

/// Pure-state tomogram |integral psi(y) e^{i mu y^2 / 2nu - i X y / nu} dy|^2
/// / (2 pi |nu|), same guards as tomogram_from_density.
Tomogram tomogram_from_wavefunction(const Wavefunction &psi, const SymplecticFrame &frame,
                                    const Axis &x_axis);

/// Line integral of W along mu q + nu p = X.  Requires the Wigner grid to
/// cover each line until W has decayed.
Tomogram tomogram_from_wigner(const WignerGrid &w, const SymplecticFrame &frame,
                              const Axis &x_axis);

/// Inverse map: Fourier integral of a tomogram family over the (mu, nu) box.
/// Every slice must have decayed below 1e-8 at its X ends.
WignerGrid wigner_from_tomogram(const TomogramFamily &family, const Axis &q_axis,
                                const Axis &p_axis);

/// Sub-axis of `grid` snapped to grid nodes: starts at the node nearest
/// `lo`, takes every `stride`-th node while <= hi.
Axis aligned_subaxis(const PositionGrid &grid, double lo, double hi, int stride = 1);

/// Family over a frame grid via tomogram_from_wavefunction (nu = 0 handled).
TomogramFamily family_from_wavefunction(const Wavefunction &psi, const Axis &mu_axis,
                                        const Axis &nu_axis, const Axis &x_axis);

/// Family over a frame grid via tomogram_from_wigner.
TomogramFamily family_from_wigner(const WignerGrid &w, const Axis &mu_axis,
                                  const Axis &nu_axis, const Axis &x_axis);

}  // namespace tomo

#endif
