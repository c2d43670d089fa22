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

#ifndef TOMOPROB_MEASURES_HPP
#define TOMOPROB_MEASURES_HPP

#include <optional>
#include <vector>

#include "tomo/ctomo.hpp"
#include "tomo/states.hpp"

namespace tomo {

/// One atom (x, weight) of a discrete measure.
struct MeasureAtom {
    double x = 0.0;
    double weight = 0.0;
};

/// Distribution function F(X) = measure of (-infty, X], sampled on x_axis.
/// Monotone with F(last) = 1 for states; signed (non-monotone) for general
/// observables.  When the measure came from a spectral decomposition the
/// atoms are kept alongside the samples; `sigma` > 0 means each atom was
/// replaced by a Gaussian of that width before sampling (needed to compare
/// a truncated operator's staircase against a smooth continuum CDF).
struct QuantumMeasureCDF {
    std::optional<SymplecticFrame> frame;
    Axis x_axis;
    Eigen::VectorXd F;
    std::vector<MeasureAtom> atoms;
    double sigma = 0.0;

    bool is_discrete() const {
        return !atoms.empty() && sigma == 0.0;
    }

    /// Right-continuous evaluation.  Uses the atoms exactly when present,
    /// otherwise interpolates the samples.
    double value_at(double x) const;

    /// integral X dF and integral (X - mean)^2 dF over the sampled window.
    double mean() const;
    double variance() const;
};

/// CDFs of one operator over a rectangular (mu, nu) frame grid.
struct CdfFamily {
    Axis mu_axis;
    Axis nu_axis;
    std::vector<QuantumMeasureCDF> entries;

    QuantumMeasureCDF &entry(int imu, int inu) {
        return entries[static_cast<size_t>(imu) * nu_axis.n + inu];
    }
    const QuantumMeasureCDF &entry(int imu, int inu) const {
        return entries[static_cast<size_t>(imu) * nu_axis.n + inu];
    }
};

/// Eigenvalues (ascending, degenerate levels merged below gap 1e-10) and the
/// corresponding orthogonal projectors summing to the identity.
struct SpectralMeasure {
    Eigen::VectorXd eigenvalues;
    std::vector<Eigen::MatrixXcd> projectors;
};

SpectralMeasure spectral_measure(const Observable &a);

/// F(X) = sum over eigenvalues <= X of Tr(rho P_k).  sigma = 0 gives the
/// exact right-continuous staircase; sigma > 0 regularizes each step with a
/// Gaussian CDF of width sigma.
QuantumMeasureCDF measure_from_observable(const Eigen::MatrixXcd &rho, const Observable &a,
                                          const Axis &x_axis, double sigma = 0.0);

/// Running integral of a (normalized, support-covering) tomogram.
QuantumMeasureCDF cdf_from_tomogram(const Tomogram &tomo);

/// Central-difference derivative of a smooth CDF; rejects discrete inputs.
Tomogram derivative_is_tomogram(const QuantumMeasureCDF &cdf);

/// Closed-form distribution function of the n-th oscillator state's
/// quadrature measure, from the generating-function expansion:
///   G_n(z) = (1 + erf z)/2
///          - (e^{-z^2}/sqrt(pi)) sum_{m=1}^{n} n! / ((n-m)! (m!)^2 2^m) H_{2m-1}(z),
/// evaluated at z = X / sqrt(mu^2 + nu^2).  Supported for n <= 10.
double oracle_cdf_fock(int n, double x, const SymplecticFrame &frame);

/// Gaussian position measure of the vacuum: F(X) = (1 + erf X)/2
/// (zero mean, variance 1/2), frame (1, 0).
QuantumMeasureCDF vacuum_position_measure(const Axis &x_axis);

/// Linear extension of the state-to-measure map to all Hermitian operators:
/// F(X) = Tr(a M((-infty, X])) with M the spectral measure of mu*x + nu*p in
/// a's truncated basis.  Non-monotone in general.
QuantumMeasureCDF signed_measure_of_observable(const Observable &a, const SymplecticFrame &frame,
                                               const Axis &x_axis, double sigma = 0.0);

/// signed_measure_of_observable on every node of a frame grid.
CdfFamily measure_family_of_observable(const Observable &a, const Axis &mu_axis,
                                       const Axis &nu_axis, const Axis &x_axis,
                                       double sigma = 0.0);

}  // namespace tomo

#endif
