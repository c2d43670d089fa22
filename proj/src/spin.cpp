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

#include "tomo/spin.hpp"

#include <cmath>

namespace tomo {

void SpinState::validate() const {
    if (elements.rows() != dim() || elements.cols() != dim()) {
        throw InputError("SpinState: matrix size does not match 2j+1");
    }
    if (hermiticity_defect(elements) > 1e-12) {
        throw ContractError("SpinState: not Hermitian to 1e-12");
    }
    if (std::abs(elements.trace() - cdouble(1.0, 0.0)) > 1e-10) {
        throw ContractError("SpinState: trace deviates from 1 beyond 1e-10");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(elements, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) {
        throw ContractError("SpinState: negative eigenvalue beyond -1e-10");
    }
}

Eigen::MatrixXcd jz_matrix(int two_j) {
    if (two_j < 0) {
        throw InputError("jz_matrix: negative spin");
    }
    int d = two_j + 1;
    Eigen::MatrixXcd jz = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; k++) {
        jz(k, k) = 0.5 * two_j - k;
    }
    return jz;
}

Eigen::MatrixXcd jx_matrix(int two_j) {
    if (two_j < 0) {
        throw InputError("jx_matrix: negative spin");
    }
    int d = two_j + 1;
    double j = 0.5 * two_j;
    Eigen::MatrixXcd jx = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k + 1 < d; k++) {
        // couples m = j - k - 1 to m + 1 = j - k
        double m = j - k - 1;
        double c = 0.5 * std::sqrt(j * (j + 1) - m * (m + 1));
        jx(k, k + 1) = c;
        jx(k + 1, k) = c;
    }
    return jx;
}

Eigen::MatrixXcd rotation_matrix(int two_j, const EulerAngles &angles) {
    if (two_j > 40) {
        throw InputError("rotation_matrix: j must be <= 20");
    }
    int d = two_j + 1;
    Eigen::VectorXcd zphase_psi(d), zphase_phi(d);
    for (int k = 0; k < d; k++) {
        double m = 0.5 * two_j - k;
        zphase_psi(k) = std::exp(cdouble(0.0, angles.psi * m));
        zphase_phi(k) = std::exp(cdouble(0.0, angles.phi * m));
    }
    Eigen::MatrixXcd mid = exp_i_hermitian(jx_matrix(two_j), angles.theta);
    return zphase_psi.asDiagonal() * mid * zphase_phi.asDiagonal();
}

Observable rotated_jz(int two_j, const EulerAngles &angles) {
    Eigen::MatrixXcd r = rotation_matrix(two_j, angles);
    Eigen::MatrixXcd a = r * jz_matrix(two_j) * r.adjoint();
    // Symmetrize away eigensolver round-off before the Hermiticity gate.
    return Observable(0.5 * (a + a.adjoint()));
}

SpinTomogram spin_tomogram(const SpinState &rho, const EulerAngles &angles) {
    if (rho.elements.rows() != rho.dim()) {
        throw InputError("spin_tomogram: dimension mismatch");
    }
    Eigen::MatrixXcd r = rotation_matrix(rho.two_j, angles);
    Eigen::MatrixXcd conjugated = r.adjoint() * rho.elements * r;
    SpinTomogram out{rho.two_j, angles, Eigen::VectorXd(rho.dim())};
    for (int k = 0; k < rho.dim(); k++) {
        out.probs(k) = conjugated(k, k).real();
    }
    return out;
}

SpinMeasurePair spin_measure_relation(const SpinState &rho, const EulerAngles &angles) {
    SpinTomogram w = spin_tomogram(rho, angles);
    Observable axis_obs = rotated_jz(rho.two_j, angles);
    axis_obs = Observable(-axis_obs.elements);

    double j = rho.j();
    Axis x_axis(-j - 1.0, j + 1.0, 2 * (rho.two_j + 2) + 1);
    QuantumMeasureCDF cdf = measure_from_observable(rho.elements, axis_obs, x_axis);

    for (int k = 0; k < rho.dim(); k++) {
        double m = w.outcome(k);
        double interval_mass = cdf.value_at(m) - cdf.value_at(m - 1.0);
        if (std::abs(interval_mass - w.probs(k)) > 1e-10) {
            throw ContractError(
                "spin_measure_relation: tomogram and measure disagree beyond 1e-10");
        }
    }
    return SpinMeasurePair{std::move(cdf), std::move(w)};
}

SpinState reconstruct_spin_density(int two_j, const std::vector<SpinTomogram> &tomograms) {
    int d = two_j + 1;
    int n_params = d * d;  // d real diagonal + 2 * d(d-1)/2 off-diagonal parts
    int n_rows = 1;
    for (const auto &t : tomograms) {
        if (t.two_j != two_j) {
            throw InputError("reconstruct_spin_density: mixed spin values");
        }
        n_rows += d;
    }
    if (n_rows - 1 < n_params) {
        throw InputError("reconstruct_spin_density: not enough tomograms for the unknowns");
    }

    // Parameter layout: [diag(0..d-1), Re upper(k<l), Im upper(k<l)].
    auto re_index = [&](int k, int l) {
        int base = d;
        int idx = 0;
        for (int a = 0; a < k; a++) {
            idx += d - 1 - a;
        }
        return base + idx + (l - k - 1);
    };
    int n_off = d * (d - 1) / 2;

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n_rows, n_params);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n_rows);
    int row = 0;
    for (const auto &t : tomograms) {
        Eigen::MatrixXcd r = rotation_matrix(two_j, t.angles);
        for (int k = 0; k < d; k++) {
            // Pi = (column k of R)(column k of R)^dagger; Tr(rho Pi) is the
            // probability of outcome m = k - j.
            Eigen::VectorXcd col = r.col(k);
            for (int a = 0; a < d; a++) {
                A(row, a) = std::norm(col(a));
            }
            for (int a = 0; a < d; a++) {
                for (int l = a + 1; l < d; l++) {
                    cdouble pi_la = col(l) * std::conj(col(a));
                    A(row, re_index(a, l)) = 2.0 * pi_la.real();
                    A(row, re_index(a, l) + n_off) = -2.0 * pi_la.imag();
                }
            }
            b(row) = t.probs(k);
            row++;
        }
    }
    // Unit-trace constraint.
    for (int a = 0; a < d; a++) {
        A(row, a) = 1.0;
    }
    b(row) = 1.0;

    Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    double cond = svd.singularValues()(0) / svd.singularValues()(svd.singularValues().size() - 1);
    if (!std::isfinite(cond) || cond > 1e8) {
        throw InputError("reconstruct_spin_density: angle set is rank-deficient");
    }
    Eigen::VectorXd params = svd.solve(b);

    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
    for (int a = 0; a < d; a++) {
        rho(a, a) = params(a);
    }
    for (int a = 0; a < d; a++) {
        for (int l = a + 1; l < d; l++) {
            cdouble v(params(re_index(a, l)), params(re_index(a, l) + n_off));
            rho(a, l) = v;
            rho(l, a) = std::conj(v);
        }
    }
    rho /= rho.trace();
    return SpinState{two_j, std::move(rho)};
}

}  // namespace tomo
