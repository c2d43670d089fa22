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

#ifndef TOMOPROB_STARPROD_HPP
#define TOMOPROB_STARPROD_HPP

#include "tomo/measures.hpp"

namespace tomo {

/// Point in the dequantizer label space, x = (X, mu, nu).
struct PhasePoint {
    double x = 0.0;
    double mu = 1.0;
    double nu = 0.0;
};

/// Operator symbol f_a(X, mu, nu) on a rectangular grid.  Values are stored
/// as value(imu, inu, ix); `sigma` records the Gaussian width used in place
/// of the operator delta function (a truncated operator has a discrete
/// spectrum, so the raw delta is not a function).
struct SymbolGrid {
    Axis x_axis;
    Axis mu_axis;
    Axis nu_axis;
    std::vector<cdouble> values;
    double sigma = 0.05;

    cdouble &value(int imu, int inu, int ix) {
        return values[(static_cast<size_t>(imu) * nu_axis.n + inu) * x_axis.n + ix];
    }
    cdouble value(int imu, int inu, int ix) const {
        return values[(static_cast<size_t>(imu) * nu_axis.n + inu) * x_axis.n + ix];
    }
};

/// Default regularization width for a symbol sampled at X spacing dx.
inline double default_delta_width(double dx) {
    return std::max(2.0 * dx, 0.05);
}

/// Evaluation budget for the measure star product.  The kernel-route
/// six-fold quadrature is exposed for verification, not production, so the
/// grids and target count are capped.
struct StarBudget {
    int max_targets = 10;
    int max_axis_points = 21;
};

/// Symbol of `a`: per frame, f(X) = sum_k <v_k|a|v_k> delta_sigma(X - l_k)
/// over the eigensystem of mu*x + nu*p.  For a state this is its
/// (regularized) tomogram.
SymbolGrid dequantize(const Observable &a, const Axis &x_axis, const Axis &mu_axis,
                      const Axis &nu_axis, double sigma);

/// Single-frame slice of the symbol, on x_axis.
Eigen::VectorXd dequantize_slice(const Observable &a, const SymplecticFrame &frame,
                                 const Axis &x_axis, double sigma);

/// D(x) = (1/2pi) e^{iX} exp(-i (mu x + nu p)) in the truncated basis.
Eigen::MatrixXcd quantizer(const PhasePoint &pt, int dim);

/// Triple quadrature of f(x) D(x) over the grid.  The known Gaussian
/// regularization bias of the X integral (a factor e^{-sigma^2/2}) is
/// divided back out.  Requires the symbol to have decayed at the X edges
/// and the X-integrated symbol to have decayed at the (mu, nu) edges.
Eigen::MatrixXcd reconstruct_operator(const SymbolGrid &f, int dim);

/// Signed quadrature measure of an operator (delegates to
/// signed_measure_of_observable).
QuantumMeasureCDF measure_from_operator(const Observable &a, const SymplecticFrame &frame,
                                        const Axis &x_axis, double sigma = 0.0);

/// Operator from its measure family: per frame the Stieltjes integral
/// integral e^{iX} dM(X) (piecewise-linear rule on the sampled CDF,
/// regularization bias divided out), then the (mu, nu) quadrature.
Eigen::MatrixXcd reconstruct_from_measures(const CdfFamily &family, int dim);

/// Star-product kernel values at one point triple:
///   density      = Tr(D(x1) D(x2) delta_sigma(X - mu x - nu p))
///   distribution = Tr(D(x1) D(x2) theta(X - mu x - nu p))   (exact step)
struct KernelValues {
    cdouble density;
    cdouble distribution;
};
KernelValues star_product_kernel(const PhasePoint &x1, const PhasePoint &x2,
                                 const PhasePoint &target, int dim, double sigma);

/// Measure star product M_a * M_b evaluated at target points (X_i, frame).
/// This is the six-fold quadrature of the distribution kernel over both
/// families; the X1/X2 Stieltjes integrals and the trace are rearranged by
/// linearity into Tr(A B theta(X - H)) with A, B the per-family quadrature
/// sums, which evaluates the same nodes and weights at far lower cost.
QuantumMeasureCDF star_multiply_measures(const CdfFamily &ma, const CdfFamily &mb,
                                         const SymplecticFrame &target, const Axis &x_axis,
                                         int dim, const StarBudget &budget = {});

}  // namespace tomo

#endif
