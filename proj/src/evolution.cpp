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

#include "tomo/evolution.hpp"

#include <unsupported/Eigen/FFT>

#include <atomic>
#include <cmath>
#include <iostream>

namespace tomo {

namespace {

std::atomic<bool> g_edge_fallback_reported{false};

void report_edge_fallback_once() {
    if (!g_edge_fallback_reported.exchange(true)) {
        std::cerr << "characteristics_propagator: linear interpolation fallback used near "
                     "frame-grid edges\n";
    }
}

// Catmull-Rom weights on the 4-node stencil around fractional position t.
void cubic_weights(double t, double w[4]) {
    w[0] = 0.5 * (-t + 2.0 * t * t - t * t * t);
    w[1] = 0.5 * (2.0 - 5.0 * t * t + 3.0 * t * t * t);
    w[2] = 0.5 * (t + 4.0 * t * t - 3.0 * t * t * t);
    w[3] = 0.5 * (-t * t + t * t * t);
}

struct Stencil {
    int base[4];
    double w[4];
    int count;  // 4 cubic, 2 linear fallback
};

Stencil make_stencil(const Axis &axis, double x, bool *fallback) {
    if (!axis.contains(x)) {
        throw InputError("characteristic pulled back outside the sampled region");
    }
    double s = (x - axis.lo) / axis.step();
    int i = std::min(axis.n - 2, std::max(0, static_cast<int>(std::floor(s))));
    double t = s - i;
    Stencil st{};
    if (i == 0 || i == axis.n - 2) {
        st.count = 2;
        st.base[0] = i;
        st.base[1] = i + 1;
        st.w[0] = 1.0 - t;
        st.w[1] = t;
        if (fallback) {
            *fallback = true;
        }
        return st;
    }
    st.count = 4;
    for (int k = 0; k < 4; k++) {
        st.base[k] = i - 1 + k;
    }
    cubic_weights(t, st.w);
    return st;
}

}  // namespace

FlowPoint backward_characteristic(double x, double mu, double nu, const QuadraticPotential &v,
                                  double t) {
    // Backward map: integrate d/ds (X', mu', nu') = (a1 nu', -2 a2 nu', mu')
    // for time t starting from (x, mu, nu).
    FlowPoint p{x, mu, nu};
    if (v.a2 > 0.0) {
        double w = std::sqrt(2.0 * v.a2);
        double c = std::cos(w * t), s = std::sin(w * t);
        p.mu = mu * c - nu * w * s;
        p.nu = nu * c + mu * s / w;
        p.x = x + v.a1 * (nu * s / w + mu * (1.0 - c) / (w * w));
    } else if (v.a2 < 0.0) {
        double w = std::sqrt(-2.0 * v.a2);
        double c = std::cosh(w * t), s = std::sinh(w * t);
        p.mu = mu * c + nu * w * s;
        p.nu = nu * c + mu * s / w;
        p.x = x + v.a1 * (nu * s / w + mu * (c - 1.0) / (w * w));
    } else {
        p.mu = mu;
        p.nu = nu + mu * t;
        p.x = x + v.a1 * (nu * t + 0.5 * mu * t * t);
    }
    return p;
}

TomogramFamily characteristics_propagator(const TomogramFamily &w0, const QuadraticPotential &v,
                                          double t) {
    TomogramFamily out{w0.mu_axis, w0.nu_axis, w0.x_axis, {}};
    out.slices.resize(w0.slices.size());
    std::atomic<bool> fallback{false};

    parallel_for_2d(w0.mu_axis.n, w0.nu_axis.n, [&](int im, int in) {
        bool local_fallback = false;
        FlowPoint p0 = backward_characteristic(0.0, w0.mu_axis[im], w0.nu_axis[in], v, t);
        Stencil smu = make_stencil(w0.mu_axis, p0.mu, &local_fallback);
        Stencil snu = make_stencil(w0.nu_axis, p0.nu, &local_fallback);
        Eigen::VectorXd slice(w0.x_axis.n);
        for (int ix = 0; ix < w0.x_axis.n; ix++) {
            // X shift is frame-dependent but X-independent.
            double xs = w0.x_axis[ix] + p0.x;
            if (!w0.x_axis.contains(xs)) {
                throw InputError("characteristics_propagator: X characteristic leaves the grid");
            }
            double acc = 0.0;
            for (int a = 0; a < smu.count; a++) {
                for (int b = 0; b < snu.count; b++) {
                    const Eigen::VectorXd &src = w0.slice(smu.base[a], snu.base[b]);
                    acc += smu.w[a] * snu.w[b] * interp_cubic(w0.x_axis, src, xs);
                }
            }
            slice(ix) = acc;
        }
        out.slice(im, in) = std::move(slice);
        if (local_fallback) {
            fallback.store(true, std::memory_order_relaxed);
        }
    });
    if (fallback.load()) {
        report_edge_fallback_once();
    }
    return out;
}

Eigen::MatrixXcd von_neumann_oracle(const Eigen::MatrixXcd &rho0, const Observable &h, double t) {
    if (rho0.rows() != h.elements.rows()) {
        throw InputError("von_neumann_oracle: dimension mismatch");
    }
    Eigen::MatrixXcd u = exp_i_hermitian(h.elements, -t);
    Eigen::MatrixXcd rho_t = u * rho0 * u.adjoint();
    if (std::abs((rho_t.trace() - rho0.trace())) > 1e-10) {
        throw ContractError("von_neumann_oracle: trace not preserved to 1e-10");
    }
    return rho_t;
}

Observable quadratic_hamiltonian(const QuadraticPotential &v, int dim) {
    auto [x, p] = ladder_operators(dim);
    Eigen::MatrixXcd h = 0.5 * (p.elements * p.elements) + v.a2 * (x.elements * x.elements) +
                         v.a1 * x.elements;
    h.diagonal().array() += v.a0;
    return Observable(0.5 * (h + h.adjoint()));
}

double pde_residual(const TomogramTrajectory &traj, const QuadraticPotential &v) {
    int nt = static_cast<int>(traj.times.size());
    int nmu = traj.mu_axis.n, nnu = traj.nu_axis.n, nx = traj.x_axis.n;
    if (nt < 3 || nmu < 3 || nnu < 3) {
        throw InputError("pde_residual: need at least 3 samples along t, mu, nu");
    }
    double dt = traj.dt();
    double dmu = traj.mu_axis.step();
    double dnu = traj.nu_axis.step();
    double dx = traj.x_axis.step();

    // Spectral antiderivative along X with the zero-frequency component
    // zeroed, applied to (d/dmu)(d/dX w).
    Eigen::FFT<double> fft;
    std::vector<double> freqs(nx);
    for (int k = 0; k < nx; k++) {
        int kk = (k <= nx / 2) ? k : k - nx;
        freqs[k] = kTwoPi * kk / (nx * dx);
    }

    double worst = 0.0;
    std::vector<double> row(nx), dxw_m(nx), dxw_p(nx);
    std::vector<cdouble> spec(nx);

    for (int it = 1; it + 1 < nt; it++) {
        for (int im = 1; im + 1 < nmu; im++) {
            for (int in = 1; in + 1 < nnu; in++) {
                double mu = traj.mu_axis[im];
                double nu = traj.nu_axis[in];

                // d/dmu of dX w via neighbors in mu.
                auto fill_dxw = [&](int imu, std::vector<double> &dst) {
                    for (int ix = 0; ix < nx; ix++) {
                        row[ix] = traj.at(it, imu, in, ix);
                    }
                    Eigen::Map<Eigen::VectorXd> rowv(row.data(), nx);
                    Eigen::VectorXd d = central_difference(rowv, dx);
                    for (int ix = 0; ix < nx; ix++) {
                        dst[ix] = d(ix);
                    }
                };
                fill_dxw(im - 1, dxw_m);
                fill_dxw(im + 1, dxw_p);
                std::vector<double> dmu_dx(nx);
                for (int ix = 0; ix < nx; ix++) {
                    dmu_dx[ix] = (dxw_p[ix] - dxw_m[ix]) / (2.0 * dmu);
                }
                fft.fwd(spec, dmu_dx);
                spec[0] = 0.0;
                for (int k = 1; k < nx; k++) {
                    spec[k] = (freqs[k] == 0.0) ? cdouble(0.0)
                                                : spec[k] / cdouble(0.0, freqs[k]);
                }
                if (nx % 2 == 0) {
                    spec[nx / 2] = 0.0;  // keep the spectrum conjugate-symmetric
                }
                std::vector<double> anti(nx);
                fft.inv(anti, spec);

                for (int ix = 2; ix + 2 < nx; ix++) {
                    double dtw = (traj.at(it + 1, im, in, ix) - traj.at(it - 1, im, in, ix)) /
                                 (2.0 * dt);
                    double dnuw = (traj.at(it, im, in + 1, ix) - traj.at(it, im, in - 1, ix)) /
                                  (2.0 * dnu);
                    double dxw = (traj.at(it, im, in, ix + 1) - traj.at(it, im, in, ix - 1)) /
                                 (2.0 * dx);
                    double r = dtw - mu * dnuw + 2.0 * v.a2 * nu * anti[ix] - v.a1 * nu * dxw;
                    worst = std::max(worst, std::abs(r));
                }
            }
        }
    }
    return worst;
}

CdfFamily measure_evolution(const CdfFamily &m0, const QuadraticPotential &v, double t) {
    const Axis &mu_axis = m0.mu_axis;
    const Axis &nu_axis = m0.nu_axis;
    if (m0.entries.empty()) {
        throw InputError("measure_evolution: empty family");
    }
    const Axis x_axis = m0.entries.front().x_axis;
    for (const auto &e : m0.entries) {
        if (e.x_axis.n != x_axis.n || e.x_axis.lo != x_axis.lo || e.x_axis.hi != x_axis.hi) {
            throw InputError("measure_evolution: family entries must share one X axis");
        }
        if (e.is_discrete()) {
            throw InputError("measure_evolution: discrete (spin) families are not transported");
        }
    }

    CdfFamily out{mu_axis, nu_axis, {}};
    out.entries.resize(m0.entries.size());
    bool fallback = false;
    for (int im = 0; im < mu_axis.n; im++) {
        for (int in = 0; in < nu_axis.n; in++) {
            FlowPoint p0 = backward_characteristic(0.0, mu_axis[im], nu_axis[in], v, t);
            Stencil smu = make_stencil(mu_axis, p0.mu, &fallback);
            Stencil snu = make_stencil(nu_axis, p0.nu, &fallback);
            QuantumMeasureCDF evolved;
            evolved.frame = SymplecticFrame(mu_axis[im], nu_axis[in]);
            evolved.x_axis = x_axis;
            evolved.F.resize(x_axis.n);
            for (int ix = 0; ix < x_axis.n; ix++) {
                double xs = x_axis[ix] + p0.x;
                if (!x_axis.contains(xs)) {
                    throw InputError("measure_evolution: X characteristic leaves the grid");
                }
                double acc = 0.0;
                for (int a = 0; a < smu.count; a++) {
                    for (int b = 0; b < snu.count; b++) {
                        acc += smu.w[a] * snu.w[b] *
                               interp_cubic(x_axis, m0.entry(smu.base[a], snu.base[b]).F, xs);
                    }
                }
                evolved.F(ix) = acc;
            }
            out.entry(im, in) = std::move(evolved);
        }
    }
    if (fallback) {
        report_edge_fallback_once();
    }
    return out;
}

double measure_tomogram_consistency(const CdfFamily &cdfs, const TomogramFamily &tomos) {
    if (cdfs.mu_axis.n != tomos.mu_axis.n || cdfs.nu_axis.n != tomos.nu_axis.n) {
        throw InputError("measure_tomogram_consistency: frame grids differ");
    }
    double worst = 0.0;
    for (int im = 0; im < cdfs.mu_axis.n; im++) {
        for (int in = 0; in < cdfs.nu_axis.n; in++) {
            const QuantumMeasureCDF &m = cdfs.entry(im, in);
            Eigen::VectorXd density = central_difference(m.F, m.x_axis.step());
            worst = std::max(worst,
                             (density - tomos.slice(im, in)).cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

}  // namespace tomo
