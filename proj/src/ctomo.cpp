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

#include "tomo/ctomo.hpp"

#include <algorithm>
#include <cmath>

namespace tomo {

namespace {

constexpr double kEdgeDecay = 1e-8;
constexpr double kMaxPhaseStep = kPi / 4.0;

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; k++) {
        f *= k;
    }
    return f;
}

// Trapezoid weight vector for a uniform axis.
Eigen::VectorXd trapezoid_weights(const Axis &axis) {
    Eigen::VectorXd w = Eigen::VectorXd::Constant(axis.n, axis.step());
    w(0) *= 0.5;
    w(axis.n - 1) *= 0.5;
    return w;
}

void check_phase_sampling(const PositionGrid &grid, const SymplecticFrame &frame,
                          const Axis &x_axis) {
    double ymax = std::max(std::abs(grid.lo), std::abs(grid.hi));
    double xmax = std::max(std::abs(x_axis.lo), std::abs(x_axis.hi));
    double max_rate = (std::abs(frame.mu) * ymax + xmax) / std::abs(frame.nu);
    if (max_rate * grid.step() >= kMaxPhaseStep) {
        throw InputError(
            "tomogram quadrature undersampled: kernel phase advances >= pi/4 per grid step; "
            "refine the position grid or reduce |mu|/|nu| or the X range");
    }
}

}  // namespace

double Tomogram::integral() const {
    return trapezoid(values, x_axis.step());
}

bool Tomogram::covers_support() const {
    if (values.size() == 0) {
        return false;
    }
    return std::abs(values(0)) <= kEdgeDecay && std::abs(values(values.size() - 1)) <= kEdgeDecay;
}

void Tomogram::validate() const {
    double mass = integral();
    if (std::abs(mass - 1.0) > 1e-6) {
        throw ContractError("tomogram normalization off by more than 1e-6");
    }
    if (values.minCoeff() < -1e-9) {
        throw ContractError("tomogram has values below -1e-9");
    }
}

double WignerGrid::normalization_defect() const {
    Eigen::VectorXd wq = trapezoid_weights(q_axis);
    Eigen::VectorXd wp = trapezoid_weights(p_axis);
    double total = wq.transpose() * values * wp;
    return total / kTwoPi - 1.0;
}

bool WignerGrid::covers_support() const {
    double peak = values.cwiseAbs().maxCoeff();
    double edge = 0.0;
    for (int i = 0; i < q_axis.n; i++) {
        edge = std::max(edge, std::abs(values(i, 0)));
        edge = std::max(edge, std::abs(values(i, p_axis.n - 1)));
    }
    for (int j = 0; j < p_axis.n; j++) {
        edge = std::max(edge, std::abs(values(0, j)));
        edge = std::max(edge, std::abs(values(q_axis.n - 1, j)));
    }
    return edge <= 1e-6 * peak;
}

SymplecticFrame frame_from_angles(double lambda, double phi) {
    return SymplecticFrame(std::exp(lambda) * std::cos(phi), std::exp(-lambda) * std::sin(phi));
}

double oracle_tomogram_fock(int n, double x, const SymplecticFrame &frame) {
    if (n < 0 || n > 30) {
        throw InputError("oracle_tomogram_fock: n must be in [0, 30]");
    }
    double s = frame.scale();
    double z = x / s;
    double h = hermite(n, z);
    return h * h * std::exp(-z * z) /
           (std::sqrt(kPi) * std::pow(2.0, n) * factorial(n) * s);
}

double oracle_tomogram_coherent(cdouble alpha, double x, const SymplecticFrame &frame) {
    double s2 = frame.mu * frame.mu + frame.nu * frame.nu;
    double mean = std::sqrt(2.0) * (alpha.real() * frame.mu + alpha.imag() * frame.nu);
    double d = x - mean;
    return std::exp(-d * d / s2) / std::sqrt(kPi * s2);
}

WignerGrid wigner_from_density(const Eigen::MatrixXcd &kernel, const PositionGrid &grid,
                               const Axis &q_axis, const Axis &p_axis) {
    if (kernel.rows() != grid.n || kernel.cols() != grid.n) {
        throw InputError("wigner_from_density: kernel shape does not match grid");
    }
    if (hermiticity_defect(kernel) > 1e-9) {
        throw InputError("wigner_from_density: kernel is not Hermitian");
    }
    double dy = grid.step();
    // Map q nodes onto kernel indices.
    std::vector<int> qidx(q_axis.n);
    for (int i = 0; i < q_axis.n; i++) {
        double s = (q_axis[i] - grid.lo) / dy;
        int k = static_cast<int>(std::llround(s));
        if (k < 0 || k >= grid.n || std::abs(s - k) > 1e-9) {
            throw InputError("wigner_from_density: q axis not aligned with kernel grid");
        }
        qidx[i] = k;
    }

    WignerGrid out{q_axis, p_axis, Eigen::MatrixXd::Zero(q_axis.n, p_axis.n)};
    double du = 2.0 * dy;
    // Hermitian kernel makes the u integrand conjugate-symmetric, so the
    // pairwise-folded sum below is exactly real (the checked residue is the
    // Hermiticity defect verified above).
    parallel_for(q_axis.n, [&](int i) {
        int gi = qidx[i];
        int kmax = std::min(gi, grid.n - 1 - gi);
        std::vector<double> terms(kmax + 1);
        for (int jp = 0; jp < p_axis.n; jp++) {
            double p = p_axis[jp];
            terms[0] = kernel(gi, gi).real();
            for (int k = 1; k <= kmax; k++) {
                cdouble phase = std::exp(cdouble(0.0, -p * du * k));
                double t = 2.0 * (kernel(gi + k, gi - k) * phase).real();
                terms[k] = (k == kmax) ? 0.5 * t : t;
            }
            out.values(i, jp) = pairwise_sum(terms) * du;
        }
    });
    return out;
}

Tomogram tomogram_from_density(const Eigen::MatrixXcd &kernel, const PositionGrid &grid,
                               const SymplecticFrame &frame, const Axis &x_axis) {
    if (kernel.rows() != grid.n || kernel.cols() != grid.n) {
        throw InputError("tomogram_from_density: kernel shape does not match grid");
    }
    if (hermiticity_defect(kernel) > 1e-9) {
        throw InputError("tomogram_from_density: kernel is not Hermitian");
    }
    Tomogram out{frame, x_axis, Eigen::VectorXd::Zero(x_axis.n)};

    if (frame.nu == 0.0) {
        // Position-density branch: w(X, mu, 0) = rho(X/mu, X/mu) / |mu|.
        Eigen::VectorXd diag = kernel.diagonal().real();
        for (int i = 0; i < x_axis.n; i++) {
            double y = x_axis[i] / frame.mu;
            out.values(i) = grid.contains(y) ? interp_cubic(grid, diag, y) / std::abs(frame.mu)
                                             : 0.0;
        }
        return out;
    }

    check_phase_sampling(grid, frame, x_axis);
    Eigen::VectorXd wy = trapezoid_weights(grid);
    Eigen::VectorXcd chirp(grid.n);
    for (int j = 0; j < grid.n; j++) {
        double y = grid[j];
        chirp(j) = std::exp(cdouble(0.0, frame.mu * y * y / (2.0 * frame.nu)));
    }
    double norm = 1.0 / (kTwoPi * std::abs(frame.nu));

    parallel_for(x_axis.n, [&](int i) {
        double x = x_axis[i];
        Eigen::VectorXcd u(grid.n);
        for (int j = 0; j < grid.n; j++) {
            u(j) = chirp(j) * std::exp(cdouble(0.0, -x * grid[j] / frame.nu)) * wy(j);
        }
        cdouble val = u.transpose() * (kernel * u.conjugate());
        if (std::abs(val.imag()) > 1e-8) {
            throw ContractError("tomogram_from_density: imaginary residue above 1e-8");
        }
        out.values(i) = val.real() * norm;
    });
    return out;
}

Tomogram tomogram_from_wavefunction(const Wavefunction &psi, const SymplecticFrame &frame,
                                    const Axis &x_axis) {
    Tomogram out{frame, x_axis, Eigen::VectorXd::Zero(x_axis.n)};
    const PositionGrid &grid = psi.grid;

    if (frame.nu == 0.0) {
        Eigen::VectorXd density = psi.values.cwiseAbs2();
        for (int i = 0; i < x_axis.n; i++) {
            double y = x_axis[i] / frame.mu;
            out.values(i) = grid.contains(y) ? interp_cubic(grid, density, y) / std::abs(frame.mu)
                                             : 0.0;
        }
        return out;
    }

    check_phase_sampling(grid, frame, x_axis);
    Eigen::VectorXd wy = trapezoid_weights(grid);
    Eigen::VectorXcd weighted(grid.n);
    for (int j = 0; j < grid.n; j++) {
        double y = grid[j];
        weighted(j) = psi.values(j) * std::exp(cdouble(0.0, frame.mu * y * y / (2.0 * frame.nu))) *
                      wy(j);
    }
    double norm = 1.0 / (kTwoPi * std::abs(frame.nu));

    parallel_for(x_axis.n, [&](int i) {
        double x = x_axis[i];
        std::vector<cdouble> terms(grid.n);
        for (int j = 0; j < grid.n; j++) {
            terms[j] = weighted(j) * std::exp(cdouble(0.0, -x * grid[j] / frame.nu));
        }
        out.values(i) = std::norm(pairwise_sum(terms)) * norm;
    });
    return out;
}

Tomogram tomogram_from_wigner(const WignerGrid &w, const SymplecticFrame &frame,
                              const Axis &x_axis) {
    double s = frame.scale();
    double e1q = frame.mu / s, e1p = frame.nu / s;
    double e2q = -frame.nu / s, e2p = frame.mu / s;
    double dtau = std::min(w.q_axis.step(), w.p_axis.step());
    double peak = w.values.cwiseAbs().maxCoeff();
    double decay_tol = std::max(1e-12, kEdgeDecay * peak);

    Tomogram out{frame, x_axis, Eigen::VectorXd::Zero(x_axis.n)};
    parallel_for(x_axis.n, [&](int i) {
        double d = x_axis[i] / s;
        double bq = d * e1q, bp = d * e1p;
        // Clip the line (bq, bp) + tau (e2q, e2p) against the grid rectangle.
        double tlo = -std::numeric_limits<double>::infinity();
        double thi = std::numeric_limits<double>::infinity();
        auto clip = [&](double b, double dir, double lo, double hi) {
            if (dir == 0.0) {
                if (b < lo || b > hi) {
                    tlo = 1.0;
                    thi = 0.0;
                }
                return;
            }
            double t0 = (lo - b) / dir, t1 = (hi - b) / dir;
            tlo = std::max(tlo, std::min(t0, t1));
            thi = std::min(thi, std::max(t0, t1));
        };
        clip(bq, e2q, w.q_axis.lo, w.q_axis.hi);
        clip(bp, e2p, w.p_axis.lo, w.p_axis.hi);
        double safety = 1e-9 * std::max({1.0, std::abs(tlo), std::abs(thi)});
        tlo += safety;
        thi -= safety;
        if (tlo >= thi) {
            out.values(i) = 0.0;  // line misses the sampled region entirely
            return;
        }
        int nt = std::max(2, static_cast<int>(std::ceil((thi - tlo) / dtau)) + 1);
        double step = (thi - tlo) / (nt - 1);
        std::vector<double> samples(nt);
        for (int k = 0; k < nt; k++) {
            double tau = tlo + k * step;
            samples[k] = interp_bicubic(w.q_axis, w.p_axis, w.values, bq + tau * e2q,
                                        bp + tau * e2p);
        }
        if (std::abs(samples.front()) > decay_tol || std::abs(samples.back()) > decay_tol) {
            throw InputError("tomogram_from_wigner: line exits grid before W has decayed");
        }
        out.values(i) = trapezoid(samples, step) / (kTwoPi * s);
    });
    return out;
}

WignerGrid wigner_from_tomogram(const TomogramFamily &family, const Axis &q_axis,
                                const Axis &p_axis) {
    const Axis &mu = family.mu_axis;
    const Axis &nu = family.nu_axis;
    const Axis &xa = family.x_axis;

    Eigen::VectorXd wx = trapezoid_weights(xa);
    Eigen::VectorXcd phase_x(xa.n);
    for (int i = 0; i < xa.n; i++) {
        phase_x(i) = std::exp(cdouble(0.0, xa[i])) * wx(i);
    }

    // Inner 1-D Fourier transform per frame, with the edge-decay contract.
    Eigen::MatrixXcd g(mu.n, nu.n);
    for (int im = 0; im < mu.n; im++) {
        for (int in = 0; in < nu.n; in++) {
            const Eigen::VectorXd &sl = family.slice(im, in);
            if (std::abs(sl(0)) > kEdgeDecay || std::abs(sl(xa.n - 1)) > kEdgeDecay) {
                throw InputError(
                    "wigner_from_tomogram: tomogram not decayed below 1e-8 at X edges");
            }
            g(im, in) = (phase_x.array() * sl.cast<cdouble>().array()).sum();
        }
    }

    Eigen::VectorXd wmu = trapezoid_weights(mu);
    Eigen::VectorXd wnu = trapezoid_weights(nu);

    WignerGrid out{q_axis, p_axis, Eigen::MatrixXd::Zero(q_axis.n, p_axis.n)};
    Eigen::VectorXd row_resid = Eigen::VectorXd::Zero(q_axis.n);
    parallel_for(q_axis.n, [&](int iq) {
        double q = q_axis[iq];
        Eigen::VectorXcd h = Eigen::VectorXcd::Zero(nu.n);
        for (int im = 0; im < mu.n; im++) {
            cdouble f = std::exp(cdouble(0.0, -mu[im] * q)) * wmu(im);
            for (int in = 0; in < nu.n; in++) {
                h(in) += f * g(im, in);
            }
        }
        double resid = 0.0;
        for (int ip = 0; ip < p_axis.n; ip++) {
            double p = p_axis[ip];
            cdouble acc = 0.0;
            for (int in = 0; in < nu.n; in++) {
                acc += h(in) * std::exp(cdouble(0.0, -nu[in] * p)) * wnu(in);
            }
            acc /= kTwoPi;
            resid = std::max(resid, std::abs(acc.imag()));
            out.values(iq, ip) = acc.real();
        }
        row_resid(iq) = resid;
    });
    if (row_resid.maxCoeff() > 1e-3) {
        throw ContractError("wigner_from_tomogram: imaginary residue above 1e-3");
    }
    return out;
}

Axis aligned_subaxis(const PositionGrid &grid, double lo, double hi, int stride) {
    if (stride < 1) {
        throw InputError("aligned_subaxis: stride must be positive");
    }
    double dy = grid.step();
    int i0 = static_cast<int>(std::llround((lo - grid.lo) / dy));
    i0 = std::max(0, std::min(grid.n - 1, i0));
    int count = 0;
    for (int i = i0; i < grid.n && grid[i] <= hi + 1e-12; i += stride) {
        count++;
    }
    if (count < 2) {
        throw InputError("aligned_subaxis: fewer than 2 nodes in range");
    }
    return Axis(grid[i0], grid[i0 + static_cast<long>(stride) * (count - 1)], count);
}

namespace {

// A frame with tiny |(mu, nu)| collapses the tomogram toward a delta in X
// that the shared X axis cannot resolve; require the node closest to the
// origin to stay a few X steps away.  Pick frame axes with an even point
// count so no node lands exactly on (0, 0).
void check_frame_grid(const Axis &mu_axis, const Axis &nu_axis, const Axis &x_axis) {
    double min_mu = std::numeric_limits<double>::infinity();
    double min_nu = min_mu;
    for (int i = 0; i < mu_axis.n; i++) {
        min_mu = std::min(min_mu, std::abs(mu_axis[i]));
    }
    for (int i = 0; i < nu_axis.n; i++) {
        min_nu = std::min(min_nu, std::abs(nu_axis[i]));
    }
    if (std::hypot(min_mu, min_nu) < 2.0 * x_axis.step()) {
        throw InputError(
            "frame grid has a node too close to (0, 0) for the X sampling; "
            "use an even point count or a finer X axis");
    }
}

}  // namespace

TomogramFamily family_from_wavefunction(const Wavefunction &psi, const Axis &mu_axis,
                                        const Axis &nu_axis, const Axis &x_axis) {
    check_frame_grid(mu_axis, nu_axis, x_axis);
    TomogramFamily fam{mu_axis, nu_axis, x_axis, {}};
    fam.slices.resize(static_cast<size_t>(mu_axis.n) * nu_axis.n);
    parallel_for_2d(mu_axis.n, nu_axis.n, [&](int im, int in) {
        SymplecticFrame f(mu_axis[im], nu_axis[in]);
        fam.slice(im, in) = tomogram_from_wavefunction(psi, f, x_axis).values;
    });
    return fam;
}

TomogramFamily family_from_wigner(const WignerGrid &w, const Axis &mu_axis, const Axis &nu_axis,
                                  const Axis &x_axis) {
    check_frame_grid(mu_axis, nu_axis, x_axis);
    TomogramFamily fam{mu_axis, nu_axis, x_axis, {}};
    fam.slices.resize(static_cast<size_t>(mu_axis.n) * nu_axis.n);
    parallel_for_2d(mu_axis.n, nu_axis.n, [&](int im, int in) {
        SymplecticFrame f(mu_axis[im], nu_axis[in]);
        fam.slice(im, in) = tomogram_from_wigner(w, f, x_axis).values;
    });
    return fam;
}

}  // namespace tomo
