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

#include "tomo/starprod.hpp"

#include <cmath>

namespace tomo {

namespace {

double gauss_density(double t, double sigma) {
    return std::exp(-0.5 * t * t / (sigma * sigma)) / (sigma * std::sqrt(kTwoPi));
}

Eigen::VectorXd axis_trapezoid_weights(const Axis &axis) {
    Eigen::VectorXd w = Eigen::VectorXd::Constant(axis.n, axis.step());
    w(0) *= 0.5;
    w(axis.n - 1) *= 0.5;
    return w;
}

/// Piecewise-linear Stieltjes integral of e^{iX} dF over the sampled CDF.
cdouble stieltjes_expix(const QuantumMeasureCDF &m) {
    const Axis &xa = m.x_axis;
    double h = xa.step();
    double cell_factor = std::sin(0.5 * h) / (0.5 * h);
    cdouble acc = 0.0;
    for (int i = 0; i + 1 < xa.n; i++) {
        double df = m.F(i + 1) - m.F(i);
        double mid = 0.5 * (xa[i] + xa[i + 1]);
        acc += df * cell_factor * std::exp(cdouble(0.0, mid));
    }
    return acc;
}

struct FrameEigen {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXcd eigenvectors;
};

FrameEigen frame_eigensystem(double mu, double nu, int dim) {
    Observable quad = quadrature_operator(SymplecticFrame(mu, nu), dim);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(quad.elements);
    if (es.info() != Eigen::Success) {
        throw ContractError("quadrature eigendecomposition failed");
    }
    return FrameEigen{es.eigenvalues(), es.eigenvectors()};
}

Eigen::MatrixXcd quadrature_unitary(double mu, double nu, int dim) {
    if (mu == 0.0 && nu == 0.0) {
        return Eigen::MatrixXcd::Identity(dim, dim);
    }
    return exp_i_hermitian(quadrature_operator(SymplecticFrame(mu, nu), dim).elements, -1.0);
}

Eigen::MatrixXcd pairwise_matrix_sum(const std::vector<Eigen::MatrixXcd> &v, size_t lo,
                                     size_t hi) {
    if (hi - lo == 1) {
        return v[lo];
    }
    size_t mid = lo + (hi - lo) / 2;
    return pairwise_matrix_sum(v, lo, mid) + pairwise_matrix_sum(v, mid, hi);
}

/// (1/2pi) sum_{im,in} wmu wnu g(im,in) U(mu_im, nu_in): the per-node terms
/// are computed in parallel, then reduced pairwise in a fixed order so the
/// result is bit-stable across runs and thread counts.
Eigen::MatrixXcd weighted_unitary_sum(const Eigen::MatrixXcd &g, const Axis &mu_axis,
                                      const Axis &nu_axis, int dim) {
    Eigen::VectorXd wmu = axis_trapezoid_weights(mu_axis);
    Eigen::VectorXd wnu = axis_trapezoid_weights(nu_axis);
    std::vector<Eigen::MatrixXcd> terms(static_cast<size_t>(mu_axis.n) * nu_axis.n);
    parallel_for_2d(mu_axis.n, nu_axis.n, [&](int im, int in) {
        Eigen::MatrixXcd u = quadrature_unitary(mu_axis[im], nu_axis[in], dim);
        terms[static_cast<size_t>(im) * nu_axis.n + in] =
            (wmu(im) * wnu(in) / kTwoPi) * g(im, in) * u;
    });
    return pairwise_matrix_sum(terms, 0, terms.size());
}

}  // namespace

SymbolGrid dequantize(const Observable &a, const Axis &x_axis, const Axis &mu_axis,
                      const Axis &nu_axis, double sigma) {
    if (sigma <= 0.0) {
        throw InputError("dequantize: sigma must be positive");
    }
    SymbolGrid out{x_axis, mu_axis, nu_axis, {}, sigma};
    out.values.resize(static_cast<size_t>(mu_axis.n) * nu_axis.n * x_axis.n);
    parallel_for_2d(mu_axis.n, nu_axis.n, [&](int im, int in) {
        Eigen::VectorXd slice =
            dequantize_slice(a, SymplecticFrame(mu_axis[im], nu_axis[in]), x_axis, sigma);
        for (int ix = 0; ix < x_axis.n; ix++) {
            out.value(im, in, ix) = slice(ix);
        }
    });
    return out;
}

Eigen::VectorXd dequantize_slice(const Observable &a, const SymplecticFrame &frame,
                                 const Axis &x_axis, double sigma) {
    FrameEigen sys = frame_eigensystem(frame.mu, frame.nu, a.dim());
    int dim = a.dim();
    Eigen::VectorXd weights(dim);
    for (int k = 0; k < dim; k++) {
        cdouble w = sys.eigenvectors.col(k).adjoint() * a.elements * sys.eigenvectors.col(k);
        if (std::abs(w.imag()) > 1e-10 * std::max(1.0, std::abs(w.real()))) {
            throw ContractError("dequantize: non-real diagonal expectation of Hermitian input");
        }
        weights(k) = w.real();
    }
    Eigen::VectorXd out(x_axis.n);
    for (int ix = 0; ix < x_axis.n; ix++) {
        double x = x_axis[ix];
        std::vector<double> terms(dim);
        for (int k = 0; k < dim; k++) {
            terms[k] = weights(k) * gauss_density(x - sys.eigenvalues(k), sigma);
        }
        out(ix) = pairwise_sum(terms);
    }
    return out;
}

Eigen::MatrixXcd quantizer(const PhasePoint &pt, int dim) {
    if (dim < 2) {
        throw InputError("quantizer: dim must be >= 2");
    }
    // (mu, nu) = (0, 0) is legal here: the exponential degenerates to I.
    Eigen::MatrixXcd u;
    if (pt.mu == 0.0 && pt.nu == 0.0) {
        u = Eigen::MatrixXcd::Identity(dim, dim);
    } else {
        u = exp_i_hermitian(quadrature_operator(SymplecticFrame(pt.mu, pt.nu), dim).elements,
                            -1.0);
    }
    return std::exp(cdouble(0.0, pt.x)) / kTwoPi * u;
}

Eigen::MatrixXcd reconstruct_operator(const SymbolGrid &f, int dim) {
    const Axis &xa = f.x_axis;
    Eigen::VectorXd wx = axis_trapezoid_weights(xa);
    Eigen::VectorXcd phase(xa.n);
    for (int ix = 0; ix < xa.n; ix++) {
        phase(ix) = std::exp(cdouble(0.0, xa[ix])) * wx(ix);
    }

    // X-edge decay of the raw symbol.
    double fmax = 0.0;
    for (const auto &v : f.values) {
        fmax = std::max(fmax, std::abs(v));
    }
    for (int im = 0; im < f.mu_axis.n; im++) {
        for (int in = 0; in < f.nu_axis.n; in++) {
            if (std::abs(f.value(im, in, 0)) > 1e-8 * fmax ||
                std::abs(f.value(im, in, xa.n - 1)) > 1e-8 * fmax) {
                throw InputError("reconstruct_operator: symbol not decayed at X edges");
            }
        }
    }

    // Inner X integral; the Gaussian delta regularization damps the e^{iX}
    // transform by exactly e^{-sigma^2/2}, undone here.
    double unbias = std::exp(0.5 * f.sigma * f.sigma);
    Eigen::MatrixXcd g(f.mu_axis.n, f.nu_axis.n);
    for (int im = 0; im < f.mu_axis.n; im++) {
        for (int in = 0; in < f.nu_axis.n; in++) {
            cdouble acc = 0.0;
            for (int ix = 0; ix < xa.n; ix++) {
                acc += phase(ix) * f.value(im, in, ix);
            }
            g(im, in) = acc * unbias;
        }
    }

    // The raw symbol of a state never decays in (mu, nu) (it rescales), but
    // its e^{iX} transform does; that is the decay the box truncation needs.
    double gmax = g.cwiseAbs().maxCoeff();
    double edge = 0.0;
    for (int im = 0; im < f.mu_axis.n; im++) {
        edge = std::max({edge, std::abs(g(im, 0)), std::abs(g(im, f.nu_axis.n - 1))});
    }
    for (int in = 0; in < f.nu_axis.n; in++) {
        edge = std::max({edge, std::abs(g(0, in)), std::abs(g(f.mu_axis.n - 1, in))});
    }
    if (edge > 1e-4 * gmax) {
        throw InputError("reconstruct_operator: transform not decayed at (mu, nu) edges");
    }

    return weighted_unitary_sum(g, f.mu_axis, f.nu_axis, dim);
}

QuantumMeasureCDF measure_from_operator(const Observable &a, const SymplecticFrame &frame,
                                        const Axis &x_axis, double sigma) {
    return signed_measure_of_observable(a, frame, x_axis, sigma);
}

Eigen::MatrixXcd reconstruct_from_measures(const CdfFamily &family, int dim) {
    const Axis &mu = family.mu_axis;
    const Axis &nu = family.nu_axis;
    Eigen::MatrixXcd g(mu.n, nu.n);
    for (int im = 0; im < mu.n; im++) {
        for (int in = 0; in < nu.n; in++) {
            const QuantumMeasureCDF &m = family.entry(im, in);
            double unbias = std::exp(0.5 * m.sigma * m.sigma);
            g(im, in) = stieltjes_expix(m) * unbias;
        }
    }
    double gmax = g.cwiseAbs().maxCoeff();
    double edge = 0.0;
    for (int im = 0; im < mu.n; im++) {
        edge = std::max({edge, std::abs(g(im, 0)), std::abs(g(im, nu.n - 1))});
    }
    for (int in = 0; in < nu.n; in++) {
        edge = std::max({edge, std::abs(g(0, in)), std::abs(g(mu.n - 1, in))});
    }
    if (edge > 1e-4 * gmax) {
        throw InputError("reconstruct_from_measures: transform not decayed at (mu, nu) edges");
    }

    return weighted_unitary_sum(g, mu, nu, dim);
}

KernelValues star_product_kernel(const PhasePoint &x1, const PhasePoint &x2,
                                 const PhasePoint &target, int dim, double sigma) {
    if (target.mu == 0.0 && target.nu == 0.0) {
        throw InputError("star_product_kernel: target frame must not be (0, 0)");
    }
    Eigen::MatrixXcd d12 = quantizer(x1, dim) * quantizer(x2, dim);
    FrameEigen sys = frame_eigensystem(target.mu, target.nu, dim);
    KernelValues out{0.0, 0.0};
    for (int k = 0; k < dim; k++) {
        cdouble w = sys.eigenvectors.col(k).adjoint() * d12 * sys.eigenvectors.col(k);
        double d = target.x - sys.eigenvalues(k);
        out.density += w * gauss_density(-d, sigma);
        if (sys.eigenvalues(k) <= target.x + 1e-9 * std::max(1.0, std::abs(target.x))) {
            out.distribution += w;
        }
    }
    return out;
}

QuantumMeasureCDF star_multiply_measures(const CdfFamily &ma, const CdfFamily &mb,
                                         const SymplecticFrame &target, const Axis &x_axis,
                                         int dim, const StarBudget &budget) {
    auto check_family = [&](const CdfFamily &fam, const char *name) {
        if (fam.mu_axis.n > budget.max_axis_points || fam.nu_axis.n > budget.max_axis_points) {
            throw InputError(std::string("star_multiply_measures: ") + name +
                             " frame grid exceeds the budget");
        }
        for (const auto &e : fam.entries) {
            if (e.x_axis.n > budget.max_axis_points) {
                throw InputError(std::string("star_multiply_measures: ") + name +
                                 " X grid exceeds the budget");
            }
        }
    };
    check_family(ma, "left");
    check_family(mb, "right");
    if (x_axis.n > budget.max_targets) {
        throw InputError("star_multiply_measures: target point count exceeds the budget");
    }

    Eigen::MatrixXcd a_hat = reconstruct_from_measures(ma, dim);
    Eigen::MatrixXcd b_hat = reconstruct_from_measures(mb, dim);
    Eigen::MatrixXcd ab = a_hat * b_hat;

    FrameEigen sys = frame_eigensystem(target.mu, target.nu, dim);
    Eigen::VectorXcd masses(dim);
    for (int k = 0; k < dim; k++) {
        masses(k) = sys.eigenvectors.col(k).adjoint() * ab * sys.eigenvectors.col(k);
    }

    QuantumMeasureCDF out;
    out.frame = target;
    out.x_axis = x_axis;
    out.F.resize(x_axis.n);
    double max_imag = 0.0;
    for (int i = 0; i < x_axis.n; i++) {
        cdouble acc = 0.0;
        for (int k = 0; k < dim; k++) {
            if (sys.eigenvalues(k) <= x_axis[i] + 1e-9 * std::max(1.0, std::abs(x_axis[i]))) {
                acc += masses(k);
            }
        }
        max_imag = std::max(max_imag, std::abs(acc.imag()));
        out.F(i) = acc.real();
    }
    if (max_imag > 1e-6) {
        throw ContractError(
            "star_multiply_measures: product measure has imaginary part above 1e-6 "
            "(operators do not commute enough for a real-valued result)");
    }
    return out;
}

}  // namespace tomo
