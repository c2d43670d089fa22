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

#ifndef TOMOPROB_EVOLUTION_HPP
#define TOMOPROB_EVOLUTION_HPP

#include "tomo/measures.hpp"

namespace tomo {

/// V(q) = a2 q^2 + a1 q + a0, with H = p^2/2 + V(q).  Quadratic potentials
/// are the supported scope: for them the tomogram evolution closes into
/// first-order transport solved exactly by characteristics.
struct QuadraticPotential {
    double a2 = 0.0;
    double a1 = 0.0;
    double a0 = 0.0;
};

/// Tomogram samples on a regular (t, mu, nu, X) grid.
struct TomogramTrajectory {
    std::vector<double> times;
    Axis mu_axis;
    Axis nu_axis;
    Axis x_axis;
    std::vector<double> data;

    double &at(int it, int imu, int inu, int ix) {
        return data[((static_cast<size_t>(it) * mu_axis.n + imu) * nu_axis.n + inu) * x_axis.n +
                    ix];
    }
    double at(int it, int imu, int inu, int ix) const {
        return data[((static_cast<size_t>(it) * mu_axis.n + imu) * nu_axis.n + inu) * x_axis.n +
                    ix];
    }
    double dt() const {
        return times.size() > 1 ? times[1] - times[0] : 0.0;
    }
};

/// Where the point (x, mu, nu) came from t units of time ago.  For the
/// transport equation derived from the quadratic-potential evolution the
/// velocity field is (dX, dmu, dnu)/dt = (-a1 nu, 2 a2 nu, -mu); the sign
/// convention is pinned by agreement with the unitary-evolution oracle.
struct FlowPoint {
    double x;
    double mu;
    double nu;
};
FlowPoint backward_characteristic(double x, double mu, double nu, const QuadraticPotential &v,
                                  double t);

/// Transports a tomogram family exactly along the characteristics, sampling
/// the initial family by cubic interpolation in (mu, nu) and X (linear
/// fallback in the edge cells, reported once on stderr).  Throws InputError
/// when a pulled-back frame leaves the sampled region.
TomogramFamily characteristics_propagator(const TomogramFamily &w0, const QuadraticPotential &v,
                                          double t);

/// rho(t) = e^{-iHt} rho0 e^{iHt} by eigendecomposition; trace and spectrum
/// preserved to 1e-10 (checked).
Eigen::MatrixXcd von_neumann_oracle(const Eigen::MatrixXcd &rho0, const Observable &h, double t);

/// H = p^2/2 + a2 x^2 + a1 x + a0 in the truncated number basis.
Observable quadratic_hamiltonian(const QuadraticPotential &v, int dim);

/// Sup-norm residual of the evolution equation on the interior of the
/// trajectory grid.  First derivatives are central differences; the inverse
/// X-derivative inside the potential term is the spectral antiderivative
/// (zero-frequency component set to zero), so the residual is O(dt^2 + dX^2
/// + dmu^2) on smooth exact trajectories.
double pde_residual(const TomogramTrajectory &traj, const QuadraticPotential &v);

/// Same backward transport applied to the distribution functions.
CdfFamily measure_evolution(const CdfFamily &m0, const QuadraticPotential &v, double t);

/// Max deviation between d/dX of an evolved CDF family and an evolved
/// tomogram family on the shared grid (the check that evolution commutes
/// with taking the density).
double measure_tomogram_consistency(const CdfFamily &cdfs, const TomogramFamily &tomos);

}  // namespace tomo

#endif
