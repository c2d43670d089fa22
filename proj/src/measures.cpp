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

#include "tomo/measures.hpp"

#include <algorithm>
#include <cmath>

namespace tomo {

namespace {

double step_tolerance(double x) {
    return 1e-9 * std::max(1.0, std::abs(x));
}

double gauss_cdf(double t, double sigma) {
    return 0.5 * std::erfc(-t / (sigma * std::sqrt(2.0)));
}

// Samples a CDF from atoms, either as the exact staircase or regularized.
Eigen::VectorXd sample_atoms(const std::vector<MeasureAtom> &atoms, const Axis &x_axis,
                             double sigma) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(x_axis.n);
    for (int i = 0; i < x_axis.n; i++) {
        double x = x_axis[i];
        double acc = 0.0;
        if (sigma == 0.0) {
            for (const auto &atom : atoms) {
                if (atom.x <= x + step_tolerance(x)) {
                    acc += atom.weight;
                }
            }
        } else {
            for (const auto &atom : atoms) {
                acc += atom.weight * gauss_cdf(x - atom.x, sigma);
            }
        }
        out(i) = acc;
    }
    return out;
}

}  // namespace

double QuantumMeasureCDF::value_at(double x) const {
    if (is_discrete()) {
        double acc = 0.0;
        for (const auto &atom : atoms) {
            if (atom.x <= x + step_tolerance(x)) {
                acc += atom.weight;
            }
        }
        return acc;
    }
    if (!atoms.empty()) {
        double acc = 0.0;
        for (const auto &atom : atoms) {
            acc += atom.weight * gauss_cdf(x - atom.x, sigma);
        }
        return acc;
    }
    return interp_cubic(x_axis, F, x);
}

double QuantumMeasureCDF::mean() const {
    // integral X dF via the density F' on the sampled window.
    Eigen::VectorXd density = central_difference(F, x_axis.step());
    Eigen::VectorXd integrand(x_axis.n);
    for (int i = 0; i < x_axis.n; i++) {
        integrand(i) = x_axis[i] * density(i);
    }
    return trapezoid(integrand, x_axis.step());
}

double QuantumMeasureCDF::variance() const {
    double m = mean();
    Eigen::VectorXd density = central_difference(F, x_axis.step());
    Eigen::VectorXd integrand(x_axis.n);
    for (int i = 0; i < x_axis.n; i++) {
        double d = x_axis[i] - m;
        integrand(i) = d * d * density(i);
    }
    return trapezoid(integrand, x_axis.step());
}

SpectralMeasure spectral_measure(const Observable &a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.elements);
    if (es.info() != Eigen::Success) {
        throw ContractError("spectral_measure: eigendecomposition failed");
    }
    const Eigen::VectorXd &vals = es.eigenvalues();
    const Eigen::MatrixXcd &vecs = es.eigenvectors();

    SpectralMeasure out;
    std::vector<double> merged;
    int n = static_cast<int>(vals.size());
    int k = 0;
    while (k < n) {
        int j = k;
        while (j + 1 < n && vals(j + 1) - vals(j) < 1e-10) {
            j++;
        }
        Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(n, n);
        double level = 0.0;
        for (int m = k; m <= j; m++) {
            proj += vecs.col(m) * vecs.col(m).adjoint();
            level += vals(m);
        }
        merged.push_back(level / (j - k + 1));
        out.projectors.push_back(std::move(proj));
        k = j + 1;
    }
    out.eigenvalues = Eigen::Map<Eigen::VectorXd>(merged.data(), merged.size());
    return out;
}

QuantumMeasureCDF measure_from_observable(const Eigen::MatrixXcd &rho, const Observable &a,
                                          const Axis &x_axis, double sigma) {
    if (rho.rows() != a.elements.rows() || rho.cols() != a.elements.cols()) {
        throw InputError("measure_from_observable: dimension mismatch");
    }
    SpectralMeasure sm = spectral_measure(a);
    QuantumMeasureCDF out;
    out.x_axis = x_axis;
    out.sigma = sigma;
    out.atoms.reserve(sm.projectors.size());
    for (size_t k = 0; k < sm.projectors.size(); k++) {
        cdouble w = (rho * sm.projectors[k]).trace();
        if (std::abs(w.imag()) > 1e-10) {
            throw ContractError("measure_from_observable: complex probability residue");
        }
        out.atoms.push_back(MeasureAtom{sm.eigenvalues(k), w.real()});
    }
    out.F = sample_atoms(out.atoms, x_axis, sigma);
    return out;
}

QuantumMeasureCDF cdf_from_tomogram(const Tomogram &tomo) {
    double mass = tomo.integral();
    if (std::abs(mass - 1.0) > 1e-6) {
        throw InputError("cdf_from_tomogram: tomogram not normalized on the sampled window");
    }
    QuantumMeasureCDF out;
    out.frame = tomo.frame;
    out.x_axis = tomo.x_axis;
    out.F = cumulative_trapezoid(tomo.values, tomo.x_axis.step());
    return out;
}

Tomogram derivative_is_tomogram(const QuantumMeasureCDF &cdf) {
    if (!cdf.atoms.empty()) {
        throw InputError("derivative_is_tomogram: discrete (step) distribution has no density");
    }
    if (!cdf.frame) {
        throw InputError("derivative_is_tomogram: CDF carries no frame");
    }
    return Tomogram{*cdf.frame, cdf.x_axis, central_difference(cdf.F, cdf.x_axis.step())};
}

double oracle_cdf_fock(int n, double x, const SymplecticFrame &frame) {
    if (n < 0 || n > 10) {
        throw InputError("oracle_cdf_fock: n must be in [0, 10]");
    }
    double z = x / frame.scale();
    double acc = 0.0;
    // coefficient n! / ((n-m)! (m!)^2 2^m), built up by the recurrence
    // c_{m} = c_{m-1} * (n - m + 1) / (2 m^2), c_0 = 1.
    double c = 1.0;
    for (int m = 1; m <= n; m++) {
        c *= (n - m + 1) / (2.0 * m * m);
        acc += c * hermite(2 * m - 1, z);
    }
    return 0.5 * (1.0 + std::erf(z)) - std::exp(-z * z) / std::sqrt(kPi) * acc;
}

QuantumMeasureCDF vacuum_position_measure(const Axis &x_axis) {
    QuantumMeasureCDF out;
    out.frame = SymplecticFrame(1.0, 0.0);
    out.x_axis = x_axis;
    out.F.resize(x_axis.n);
    for (int i = 0; i < x_axis.n; i++) {
        out.F(i) = 0.5 * (1.0 + std::erf(x_axis[i]));
    }
    return out;
}

QuantumMeasureCDF signed_measure_of_observable(const Observable &a, const SymplecticFrame &frame,
                                               const Axis &x_axis, double sigma) {
    Observable quad = quadrature_operator(frame, a.dim());
    SpectralMeasure sm = spectral_measure(quad);
    QuantumMeasureCDF out;
    out.frame = frame;
    out.x_axis = x_axis;
    out.sigma = sigma;
    out.atoms.reserve(sm.projectors.size());
    for (size_t k = 0; k < sm.projectors.size(); k++) {
        cdouble w = (a.elements * sm.projectors[k]).trace();
        if (std::abs(w.imag()) > 1e-9 * std::max(1.0, std::abs(w.real()))) {
            throw ContractError("signed_measure_of_observable: complex weight residue");
        }
        out.atoms.push_back(MeasureAtom{sm.eigenvalues(k), w.real()});
    }
    out.F = sample_atoms(out.atoms, x_axis, sigma);
    return out;
}

CdfFamily measure_family_of_observable(const Observable &a, const Axis &mu_axis,
                                       const Axis &nu_axis, const Axis &x_axis, double sigma) {
    CdfFamily fam{mu_axis, nu_axis, {}};
    fam.entries.resize(static_cast<size_t>(mu_axis.n) * nu_axis.n);
    parallel_for_2d(mu_axis.n, nu_axis.n, [&](int im, int in) {
        fam.entry(im, in) = signed_measure_of_observable(
            a, SymplecticFrame(mu_axis[im], nu_axis[in]), x_axis, sigma);
    });
    return fam;
}

}  // namespace tomo
