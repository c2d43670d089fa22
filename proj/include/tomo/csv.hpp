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

#ifndef TOMOPROB_CSV_HPP
#define TOMOPROB_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "tomo/ctomo.hpp"
#include "tomo/evolution.hpp"
#include "tomo/measures.hpp"
#include "tomo/spin.hpp"
#include "tomo/starprod.hpp"

namespace tomo {

// All emitters print floats with 17 significant digits and fixed row order,
// so identical inputs give byte-identical files.

std::string format_float(double v);

void write_tomogram_csv(std::ostream &os, const Tomogram &t);
void write_family_csv(std::ostream &os, const TomogramFamily &fam);
void write_wigner_csv(std::ostream &os, const WignerGrid &w);
void write_cdf_csv(std::ostream &os, const QuantumMeasureCDF &m);
void write_atoms_csv(std::ostream &os, const QuantumMeasureCDF &m);
void write_spin_tomogram_csv(std::ostream &os, const SpinTomogram &t);
void write_symbol_csv(std::ostream &os, const SymbolGrid &f);
void write_trajectory_csv(std::ostream &os, const TomogramTrajectory &traj);

/// Parses a family back from its CSV form.  The rows must form a full
/// rectangular (mu, nu, X) product grid.
TomogramFamily read_family_csv(std::istream &is);

/// Angle-set input: one "phi,psi,theta" row per orientation (header
/// optional).
std::vector<EulerAngles> read_angles_csv(std::istream &is);

}  // namespace tomo

#endif
