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

#ifndef TOMOPROB_COMMON_HPP
#define TOMOPROB_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace tomo {

using cdouble = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Bad user-supplied data: malformed specs, out-of-range parameters,
/// grids that cannot support the requested computation.
struct InputError : std::runtime_error {
    explicit InputError(const std::string &msg) : std::runtime_error(msg) {}
};

/// A numerical contract was violated: a checked residue, normalization,
/// or positivity bound failed.  These are errors, never warnings.
struct ContractError : std::runtime_error {
    explicit ContractError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Filesystem failures while reading inputs or writing artifacts.
struct IoError : std::runtime_error {
    explicit IoError(const std::string &msg) : std::runtime_error(msg) {}
};

}  // namespace tomo

#endif
