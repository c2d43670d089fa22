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

#ifndef TOMOPROB_SPIN_HPP
#define TOMOPROB_SPIN_HPP

#include <vector>

#include "tomo/measures.hpp"

namespace tomo {

struct EulerAngles {
    double phi = 0.0;
    double psi = 0.0;
    double theta = 0.0;
};

/// Density matrix of a spin-j system in the standard basis (row 0 is the
/// J_z = +j eigenvector, descending from there).
struct SpinState {
    int two_j = 1;
    Eigen::MatrixXcd elements;

    double j() const {
        return 0.5 * two_j;
    }
    int dim() const {
        return two_j + 1;
    }
    /// Hermiticity 1e-12, trace 1e-10, eigenvalues >= -1e-10.
    void validate() const;
};

/// Measured spin-projection distribution at one orientation.  prob(k) is the
/// probability of the outcome m = k - j (labels ascend with the storage
/// index; at theta = 0 this reproduces the diagonal of rho in storage
/// order, the atom placement the reference convention pins).
struct SpinTomogram {
    int two_j = 1;
    EulerAngles angles;
    Eigen::VectorXd probs;

    double outcome(int k) const {
        return k - 0.5 * two_j;
    }
};

struct SpinMeasurePair {
    QuantumMeasureCDF cdf;
    SpinTomogram tomogram;
};

/// J_z = diag(j, j-1, ..., -j) and J_x with the standard real ladder
/// couplings, for two_j/2 = j.
Eigen::MatrixXcd jz_matrix(int two_j);
Eigen::MatrixXcd jx_matrix(int two_j);

/// Irreducible SU(2) representation matrix parametrized so the j = 1/2 case
/// equals the reference two-by-two form entrywise:
///   R = exp(i psi J_z) exp(i theta J_x) exp(i phi J_z).
/// Supported for j <= 20.
Eigen::MatrixXcd rotation_matrix(int two_j, const EulerAngles &angles);

/// R J_z R^{-1}.
Observable rotated_jz(int two_j, const EulerAngles &angles);

/// w(m) = <e_{m+j}| R^{-1} rho R |e_{m+j}>, i.e. the outcome labeled m uses
/// the rotated eigenvector of J_z eigenvalue -m.  The measured observable is
/// therefore the spin projection on the rotated MINUS-z axis, which is what
/// makes the spin-measure identity below exact.
SpinTomogram spin_tomogram(const SpinState &rho, const EulerAngles &angles);

/// Builds the step CDF of the tomographic axis observable -R J_z R^{-1} and
/// checks w(m) = F(m) - F(m-1) for every m (half-open interval (m-1, m]).
/// Throws ContractError if the identity is violated beyond 1e-10.
SpinMeasurePair spin_measure_relation(const SpinState &rho, const EulerAngles &angles);

/// Least-squares inversion of the linear system w(m, angles) = Tr(rho Pi_m).
/// Throws InputError when the angle set leaves the system ill-conditioned
/// (condition number above 1e8).
SpinState reconstruct_spin_density(int two_j, const std::vector<SpinTomogram> &tomograms);

}  // namespace tomo

#endif
