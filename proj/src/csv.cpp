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

#include "tomo/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

namespace tomo {

std::string format_float(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_tomogram_csv(std::ostream &os, const Tomogram &t) {
    os << "X,mu,nu,w\n";
    std::string mu = format_float(t.frame.mu);
    std::string nu = format_float(t.frame.nu);
    for (int i = 0; i < t.x_axis.n; i++) {
        os << format_float(t.x_axis[i]) << ',' << mu << ',' << nu << ','
           << format_float(t.values(i)) << '\n';
    }
}

void write_family_csv(std::ostream &os, const TomogramFamily &fam) {
    os << "X,mu,nu,w\n";
    for (int im = 0; im < fam.mu_axis.n; im++) {
        std::string mu = format_float(fam.mu_axis[im]);
        for (int in = 0; in < fam.nu_axis.n; in++) {
            std::string nu = format_float(fam.nu_axis[in]);
            const Eigen::VectorXd &sl = fam.slice(im, in);
            for (int ix = 0; ix < fam.x_axis.n; ix++) {
                os << format_float(fam.x_axis[ix]) << ',' << mu << ',' << nu << ','
                   << format_float(sl(ix)) << '\n';
            }
        }
    }
}

void write_wigner_csv(std::ostream &os, const WignerGrid &w) {
    os << "q,p,W\n";
    for (int iq = 0; iq < w.q_axis.n; iq++) {
        std::string q = format_float(w.q_axis[iq]);
        for (int ip = 0; ip < w.p_axis.n; ip++) {
            os << q << ',' << format_float(w.p_axis[ip]) << ','
               << format_float(w.values(iq, ip)) << '\n';
        }
    }
}

void write_cdf_csv(std::ostream &os, const QuantumMeasureCDF &m) {
    os << "X,F\n";
    for (int i = 0; i < m.x_axis.n; i++) {
        os << format_float(m.x_axis[i]) << ',' << format_float(m.F(i)) << '\n';
    }
}

void write_atoms_csv(std::ostream &os, const QuantumMeasureCDF &m) {
    os << "x,prob\n";
    for (const auto &atom : m.atoms) {
        os << format_float(atom.x) << ',' << format_float(atom.weight) << '\n';
    }
}

void write_spin_tomogram_csv(std::ostream &os, const SpinTomogram &t) {
    os << "m,prob\n";
    for (int k = 0; k < t.probs.size(); k++) {
        os << format_float(t.outcome(k)) << ',' << format_float(t.probs(k)) << '\n';
    }
}

void write_symbol_csv(std::ostream &os, const SymbolGrid &f) {
    os << "X,mu,nu,re,im\n";
    for (int im = 0; im < f.mu_axis.n; im++) {
        std::string mu = format_float(f.mu_axis[im]);
        for (int in = 0; in < f.nu_axis.n; in++) {
            std::string nu = format_float(f.nu_axis[in]);
            for (int ix = 0; ix < f.x_axis.n; ix++) {
                cdouble v = f.value(im, in, ix);
                os << format_float(f.x_axis[ix]) << ',' << mu << ',' << nu << ','
                   << format_float(v.real()) << ',' << format_float(v.imag()) << '\n';
            }
        }
    }
}

void write_trajectory_csv(std::ostream &os, const TomogramTrajectory &traj) {
    os << "t,X,mu,nu,w\n";
    for (size_t it = 0; it < traj.times.size(); it++) {
        std::string ts = format_float(traj.times[it]);
        for (int im = 0; im < traj.mu_axis.n; im++) {
            std::string mu = format_float(traj.mu_axis[im]);
            for (int in = 0; in < traj.nu_axis.n; in++) {
                std::string nu = format_float(traj.nu_axis[in]);
                for (int ix = 0; ix < traj.x_axis.n; ix++) {
                    os << ts << ',' << format_float(traj.x_axis[ix]) << ',' << mu << ',' << nu
                       << ',' << format_float(traj.at(static_cast<int>(it), im, in, ix)) << '\n';
                }
            }
        }
    }
}

namespace {

std::vector<double> parse_row(const std::string &line, size_t expected) {
    std::vector<double> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        size_t pos = 0;
        double v = std::stod(cell, &pos);
        out.push_back(v);
    }
    if (expected != 0 && out.size() != expected) {
        throw InputError("csv: expected " + std::to_string(expected) + " columns");
    }
    return out;
}

Axis axis_from_sorted(const std::vector<double> &vals, const char *what) {
    if (vals.size() < 2) {
        throw InputError(std::string("csv family: need at least 2 distinct ") + what +
                         " values");
    }
    Axis axis(vals.front(), vals.back(), static_cast<int>(vals.size()));
    for (size_t i = 0; i < vals.size(); i++) {
        if (std::abs(vals[i] - axis[static_cast<int>(i)]) >
            1e-9 * std::max(1.0, std::abs(vals[i]))) {
            throw InputError(std::string("csv family: ") + what + " values not uniformly spaced");
        }
    }
    return axis;
}

}  // namespace

TomogramFamily read_family_csv(std::istream &is) {
    std::string line;
    if (!std::getline(is, line)) {
        throw InputError("csv family: empty input");
    }
    if (line.rfind("X,", 0) != 0) {
        throw InputError("csv family: expected header 'X,mu,nu,w'");
    }
    struct Row {
        double x, mu, nu, w;
    };
    std::vector<Row> rows;
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        auto cells = parse_row(line, 4);
        rows.push_back(Row{cells[0], cells[1], cells[2], cells[3]});
    }
    auto collect = [&](auto proj) {
        std::vector<double> vals;
        for (const auto &r : rows) {
            vals.push_back(proj(r));
        }
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        return vals;
    };
    std::vector<double> mus = collect([](const Row &r) { return r.mu; });
    std::vector<double> nus = collect([](const Row &r) { return r.nu; });
    std::vector<double> xs = collect([](const Row &r) { return r.x; });
    if (rows.size() != mus.size() * nus.size() * xs.size()) {
        throw InputError("csv family: rows do not form a rectangular (mu, nu, X) grid");
    }

    TomogramFamily fam{axis_from_sorted(mus, "mu"), axis_from_sorted(nus, "nu"),
                       axis_from_sorted(xs, "X"), {}};
    fam.slices.assign(static_cast<size_t>(fam.mu_axis.n) * fam.nu_axis.n,
                      Eigen::VectorXd::Zero(fam.x_axis.n));
    auto index_of = [](const std::vector<double> &vals, double v) {
        auto it = std::lower_bound(vals.begin(), vals.end(),
                                   v - 1e-9 * std::max(1.0, std::abs(v)));
        return static_cast<int>(it - vals.begin());
    };
    for (const auto &r : rows) {
        fam.slice(index_of(mus, r.mu), index_of(nus, r.nu))(index_of(xs, r.x)) = r.w;
    }
    return fam;
}

std::vector<EulerAngles> read_angles_csv(std::istream &is) {
    std::vector<EulerAngles> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (line.rfind("phi", 0) == 0) {
            continue;  // header
        }
        auto cells = parse_row(line, 3);
        out.push_back(EulerAngles{cells[0], cells[1], cells[2]});
    }
    if (out.empty()) {
        throw InputError("angles csv: no rows");
    }
    return out;
}

}  // namespace tomo
