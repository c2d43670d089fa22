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

#ifndef TOMOPROB_STATE_SPEC_HPP
#define TOMOPROB_STATE_SPEC_HPP

#include <iosfwd>
#include <string>

#include "tomo/spin.hpp"
#include "tomo/states.hpp"

namespace tomo {

// State specification document: "key = value" lines, '#' comments.
//
//   type = fock | coherent | superposition | mixed | spin
//   n = 2                      # fock
//   alpha_re = 1.0             # coherent
//   alpha_im = -0.5
//   coeffs = (re,im) (re,im) ...   # superposition, number-basis amplitudes
//   dim = 2                    # mixed: matrix size
//   rho = (re,im) ... row-major    # mixed / spin density matrix
//   j = 0.5                    # spin
//
// The CLI also accepts inline shorthands: "fock:N", "vacuum",
// "coherent:RE[,IM]", "up", "down".

enum class StateKind { Fock, Coherent, Superposition, Mixed, Spin };

struct StateSpec {
    StateKind kind = StateKind::Fock;
    int n = 0;
    cdouble alpha = 0.0;
    Eigen::VectorXcd coeffs;
    Eigen::MatrixXcd rho;
    int two_j = 1;

    bool is_spin() const {
        return kind == StateKind::Spin;
    }
};

StateSpec parse_state_spec(std::istream &is);
StateSpec parse_state_spec_file(const std::string &path);
StateSpec parse_state_shorthand(const std::string &text);

/// Dispatch: known shorthand first, then filesystem path.
StateSpec parse_state_argument(const std::string &arg);

/// Pure-state amplitude on a grid (fock, coherent, superposition only).
Wavefunction wavefunction_of(const StateSpec &spec, const PositionGrid &grid);

/// Number-basis density matrix truncated to `dim` (all non-spin kinds).
FockDensityMatrix density_of(const StateSpec &spec, int dim);

SpinState spin_state_of(const StateSpec &spec);

}  // namespace tomo

#endif
