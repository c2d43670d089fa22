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

#include "tomo/numerics.hpp"

#include <algorithm>

namespace tomo {

Eigen::VectorXd cumulative_trapezoid(const Eigen::VectorXd &values, double dx) {
    Eigen::VectorXd out(values.size());
    double acc = 0.0;
    out(0) = 0.0;
    for (Eigen::Index i = 1; i < values.size(); i++) {
        acc += 0.5 * dx * (values(i - 1) + values(i));
        out(i) = acc;
    }
    return out;
}

Eigen::VectorXd central_difference(const Eigen::VectorXd &values, double dx) {
    Eigen::Index n = values.size();
    if (n < 3) {
        throw InputError("central_difference needs at least 3 samples");
    }
    Eigen::VectorXd out(n);
    for (Eigen::Index i = 1; i + 1 < n; i++) {
        out(i) = (values(i + 1) - values(i - 1)) / (2.0 * dx);
    }
    out(0) = (-3.0 * values(0) + 4.0 * values(1) - values(2)) / (2.0 * dx);
    out(n - 1) = (3.0 * values(n - 1) - 4.0 * values(n - 2) + values(n - 3)) / (2.0 * dx);
    return out;
}

double hermite(int n, double x) {
    if (n < 0) {
        throw InputError("hermite: negative order");
    }
    double hm1 = 1.0;
    if (n == 0) {
        return hm1;
    }
    double h = 2.0 * x;
    for (int k = 1; k < n; k++) {
        double next = 2.0 * x * h - 2.0 * k * hm1;
        hm1 = h;
        h = next;
    }
    return h;
}

std::vector<double> oscillator_eigenfunctions(int n, double x) {
    std::vector<double> h(n + 1);
    const double pi_quarter = std::pow(kPi, -0.25);
    h[0] = pi_quarter * std::exp(-0.5 * x * x);
    if (n >= 1) {
        h[1] = std::sqrt(2.0) * x * h[0];
    }
    for (int k = 2; k <= n; k++) {
        h[k] = std::sqrt(2.0 / k) * x * h[k - 1] - std::sqrt((k - 1.0) / k) * h[k - 2];
    }
    return h;
}

namespace {

double catmull_rom(double f0, double f1, double f2, double f3, double t) {
    double a = -0.5 * f0 + 1.5 * f1 - 1.5 * f2 + 0.5 * f3;
    double b = f0 - 2.5 * f1 + 2.0 * f2 - 0.5 * f3;
    double c = 0.5 * (f2 - f0);
    return ((a * t + b) * t + c) * t + f1;
}

}  // namespace

double interp_cubic(const Axis &axis, const Eigen::VectorXd &values, double x,
                    bool *used_linear_fallback) {
    if (values.size() != axis.n) {
        throw InputError("interp_cubic: value count does not match axis");
    }
    if (!axis.contains(x)) {
        throw InputError("interp_cubic: point outside axis");
    }
    double dx = axis.step();
    double s = (x - axis.lo) / dx;
    int i = std::min<int>(axis.n - 2, std::max(0, static_cast<int>(std::floor(s))));
    double t = s - i;
    if (i == 0 || i == axis.n - 2) {
        if (used_linear_fallback) {
            *used_linear_fallback = true;
        }
        return values(i) * (1.0 - t) + values(i + 1) * t;
    }
    return catmull_rom(values(i - 1), values(i), values(i + 1), values(i + 2), t);
}

double interp_bicubic(const Axis &rows, const Axis &cols, const Eigen::MatrixXd &values,
                      double x, double y) {
    if (values.rows() != rows.n || values.cols() != cols.n) {
        throw InputError("interp_bicubic: shape mismatch");
    }
    if (!rows.contains(x) || !cols.contains(y)) {
        throw InputError("interp_bicubic: point outside grid");
    }
    double sx = (x - rows.lo) / rows.step();
    double sy = (y - cols.lo) / cols.step();
    int i = std::min<int>(rows.n - 2, std::max(0, static_cast<int>(std::floor(sx))));
    int j = std::min<int>(cols.n - 2, std::max(0, static_cast<int>(std::floor(sy))));
    double tx = sx - i;
    double ty = sy - j;

    auto row_interp = [&](int r) {
        if (j == 0 || j == cols.n - 2) {
            return values(r, j) * (1.0 - ty) + values(r, j + 1) * ty;
        }
        return catmull_rom(values(r, j - 1), values(r, j), values(r, j + 1), values(r, j + 2), ty);
    };

    if (i == 0 || i == rows.n - 2) {
        return row_interp(i) * (1.0 - tx) + row_interp(i + 1) * tx;
    }
    return catmull_rom(row_interp(i - 1), row_interp(i), row_interp(i + 1), row_interp(i + 2), tx);
}

Eigen::MatrixXcd exp_i_hermitian(const Eigen::MatrixXcd &h, double s) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success) {
        throw ContractError("exp_i_hermitian: eigendecomposition failed");
    }
    Eigen::VectorXcd phases(es.eigenvalues().size());
    for (Eigen::Index k = 0; k < phases.size(); k++) {
        phases(k) = std::exp(cdouble(0.0, s * es.eigenvalues()(k)));
    }
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double hermiticity_defect(const Eigen::MatrixXcd &a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace tomo
