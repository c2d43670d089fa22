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

#ifndef TOMOPROB_NUMERICS_HPP
#define TOMOPROB_NUMERICS_HPP

#include <Eigen/Dense>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <span>
#include <vector>

#include "tomo/common.hpp"

namespace tomo {

/// OpenMP-backed parallel loop that forwards the first exception thrown by
/// the body instead of letting it escape the parallel region.
template <typename Fn>
void parallel_for(int n, Fn &&fn) {
    std::atomic<bool> failed{false};
    std::exception_ptr eptr;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; i++) {
        if (failed.load(std::memory_order_relaxed)) {
            continue;
        }
        try {
            fn(i);
        } catch (...) {
#pragma omp critical
            {
                if (!eptr) {
                    eptr = std::current_exception();
                }
            }
            failed.store(true, std::memory_order_relaxed);
        }
    }
    if (eptr) {
        std::rethrow_exception(eptr);
    }
}

template <typename Fn>
void parallel_for_2d(int n0, int n1, Fn &&fn) {
    parallel_for(n0 * n1, [&](int k) { fn(k / n1, k % n1); });
}

/// Uniformly spaced closed interval [lo, hi] with n >= 2 samples.
/// All file formats and quadrature in the project run off this type, so the
/// sample placement (endpoints included) is part of the output contract.
struct Axis {
    double lo = 0.0;
    double hi = 1.0;
    int n = 2;

    Axis() = default;
    Axis(double lo_, double hi_, int n_) : lo(lo_), hi(hi_), n(n_) {
        if (n < 2 || !(hi > lo)) {
            throw InputError("Axis requires n >= 2 and hi > lo");
        }
    }

    double step() const {
        return (hi - lo) / (n - 1);
    }
    double operator[](int i) const {
        return lo + step() * i;
    }
    bool contains(double x) const {
        return x >= lo && x <= hi;
    }
    std::vector<double> points() const {
        std::vector<double> p(n);
        for (int i = 0; i < n; i++) {
            p[i] = (*this)[i];
        }
        return p;
    }
};

/// Deterministic pairwise summation.  Used everywhere a reduction feeds an
/// output file so reruns are byte-identical.
template <typename T>
T pairwise_sum(const T *data, size_t n) {
    if (n <= 16) {
        T acc{};
        for (size_t i = 0; i < n; i++) {
            acc += data[i];
        }
        return acc;
    }
    size_t half = n / 2;
    return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

template <typename T>
T pairwise_sum(const std::vector<T> &v) {
    return v.empty() ? T{} : pairwise_sum(v.data(), v.size());
}

template <typename Derived>
typename Derived::Scalar pairwise_sum(const Eigen::MatrixBase<Derived> &v) {
    std::vector<typename Derived::Scalar> tmp(v.size());
    for (Eigen::Index i = 0; i < v.size(); i++) {
        tmp[i] = v(i);
    }
    return pairwise_sum(tmp);
}

/// Trapezoid rule on uniformly spaced samples.
template <typename T>
T trapezoid(const std::vector<T> &values, double dx) {
    if (values.size() < 2) {
        return T{};
    }
    T total = pairwise_sum(values);
    total -= (values.front() + values.back()) * 0.5;
    return total * dx;
}

inline double trapezoid(const Eigen::VectorXd &values, double dx) {
    std::vector<double> tmp(values.data(), values.data() + values.size());
    return trapezoid(tmp, dx);
}

inline cdouble trapezoid(const Eigen::VectorXcd &values, double dx) {
    std::vector<cdouble> tmp(values.data(), values.data() + values.size());
    return trapezoid(tmp, dx);
}

/// Running trapezoid integral; result[0] = 0.
Eigen::VectorXd cumulative_trapezoid(const Eigen::VectorXd &values, double dx);

/// Second-order first derivative on a uniform grid (central inside,
/// one-sided at the ends).
Eigen::VectorXd central_difference(const Eigen::VectorXd &values, double dx);

/// Physicists' Hermite polynomial H_n(x) by the raw three-term recurrence.
/// Fine for the closed-form oracles (n small); overflows near n ~ 150.
double hermite(int n, double x);

/// Values of the orthonormal oscillator eigenfunctions h_0..h_n at x,
/// h_n(x) = pi^{-1/4} (2^n n!)^{-1/2} H_n(x) e^{-x^2/2}, via the normalized
/// recurrence (stable far beyond n = 200).
std::vector<double> oscillator_eigenfunctions(int n, double x);

/// Catmull-Rom cubic on a uniform axis; clamps to linear in the first and
/// last cell.  Returns the interpolated value; *used_linear_fallback (if
/// non-null) is set when the edge fallback was taken.
double interp_cubic(const Axis &axis, const Eigen::VectorXd &values, double x,
                    bool *used_linear_fallback = nullptr);

/// Separable bicubic on a uniform 2-D grid, values(i, j) sampled at
/// (rows[i], cols[j]).
double interp_bicubic(const Axis &rows, const Axis &cols, const Eigen::MatrixXd &values,
                      double x, double y);

/// exp(i s H) for Hermitian H, by eigendecomposition.
Eigen::MatrixXcd exp_i_hermitian(const Eigen::MatrixXcd &h, double s);

/// max_ij |a_ij - conj(a_ji)|.
double hermiticity_defect(const Eigen::MatrixXcd &a);

}  // namespace tomo

#endif
