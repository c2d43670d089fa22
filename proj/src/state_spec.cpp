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

#include "tomo/state_spec.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace tomo {

namespace {

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        return "";
    }
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<cdouble> parse_complex_list(const std::string &text) {
    std::vector<cdouble> out;
    std::istringstream ss(text);
    cdouble v;
    while (ss >> v) {
        out.push_back(v);
    }
    if (out.empty()) {
        throw InputError("state spec: empty complex list; write entries as (re,im)");
    }
    return out;
}

double parse_double(const std::string &text, const std::string &key) {
    try {
        size_t pos = 0;
        double v = std::stod(text, &pos);
        if (pos != text.size()) {
            throw InputError("state spec: trailing characters in value for " + key);
        }
        return v;
    } catch (const std::exception &) {
        throw InputError("state spec: cannot parse number for key '" + key + "'");
    }
}

Eigen::MatrixXcd matrix_from_list(const std::vector<cdouble> &entries, int d,
                                  const char *what) {
    if (entries.size() != static_cast<size_t>(d) * d) {
        throw InputError(std::string("state spec: ") + what + " needs " + std::to_string(d * d) +
                         " entries");
    }
    Eigen::MatrixXcd m(d, d);
    for (int r = 0; r < d; r++) {
        for (int c = 0; c < d; c++) {
            m(r, c) = entries[static_cast<size_t>(r) * d + c];
        }
    }
    return m;
}

}  // namespace

StateSpec parse_state_spec(std::istream &is) {
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InputError("state spec: expected 'key = value', got '" + line + "'");
        }
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    if (!kv.count("type")) {
        throw InputError("state spec: missing 'type'");
    }

    StateSpec spec;
    const std::string &type = kv["type"];
    if (type == "fock") {
        spec.kind = StateKind::Fock;
        if (!kv.count("n")) {
            throw InputError("state spec: fock needs 'n'");
        }
        spec.n = static_cast<int>(parse_double(kv["n"], "n"));
        if (spec.n < 0) {
            throw InputError("state spec: n must be nonnegative");
        }
    } else if (type == "coherent") {
        spec.kind = StateKind::Coherent;
        double re = kv.count("alpha_re") ? parse_double(kv["alpha_re"], "alpha_re") : 0.0;
        double im = kv.count("alpha_im") ? parse_double(kv["alpha_im"], "alpha_im") : 0.0;
        spec.alpha = cdouble(re, im);
    } else if (type == "superposition") {
        spec.kind = StateKind::Superposition;
        if (!kv.count("coeffs")) {
            throw InputError("state spec: superposition needs 'coeffs'");
        }
        auto list = parse_complex_list(kv["coeffs"]);
        spec.coeffs.resize(static_cast<Eigen::Index>(list.size()));
        for (size_t i = 0; i < list.size(); i++) {
            spec.coeffs(static_cast<Eigen::Index>(i)) = list[i];
        }
        double norm = spec.coeffs.norm();
        if (std::abs(norm - 1.0) > 1e-6) {
            spec.coeffs /= norm;
        }
    } else if (type == "mixed") {
        spec.kind = StateKind::Mixed;
        if (!kv.count("dim") || !kv.count("rho")) {
            throw InputError("state spec: mixed needs 'dim' and 'rho'");
        }
        int d = static_cast<int>(parse_double(kv["dim"], "dim"));
        spec.rho = matrix_from_list(parse_complex_list(kv["rho"]), d, "rho");
    } else if (type == "spin") {
        spec.kind = StateKind::Spin;
        if (!kv.count("j") || !kv.count("rho")) {
            throw InputError("state spec: spin needs 'j' and 'rho'");
        }
        double j = parse_double(kv["j"], "j");
        spec.two_j = static_cast<int>(std::lround(2.0 * j));
        if (spec.two_j < 0 || std::abs(2.0 * j - spec.two_j) > 1e-9) {
            throw InputError("state spec: j must be a nonnegative half-integer");
        }
        spec.rho = matrix_from_list(parse_complex_list(kv["rho"]), spec.two_j + 1, "rho");
    } else {
        throw InputError("state spec: unknown type '" + type + "'");
    }
    return spec;
}

StateSpec parse_state_spec_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw IoError("cannot open state spec file: " + path);
    }
    return parse_state_spec(f);
}

StateSpec parse_state_shorthand(const std::string &text) {
    StateSpec spec;
    if (text == "vacuum") {
        spec.kind = StateKind::Fock;
        spec.n = 0;
        return spec;
    }
    if (text == "up" || text == "down") {
        spec.kind = StateKind::Spin;
        spec.two_j = 1;
        spec.rho = Eigen::MatrixXcd::Zero(2, 2);
        spec.rho(text == "up" ? 0 : 1, text == "up" ? 0 : 1) = 1.0;
        return spec;
    }
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw InputError("unrecognized state shorthand: " + text);
    }
    std::string head = text.substr(0, colon);
    std::string tail = text.substr(colon + 1);
    if (head == "fock") {
        spec.kind = StateKind::Fock;
        spec.n = static_cast<int>(parse_double(tail, "n"));
        return spec;
    }
    if (head == "coherent") {
        spec.kind = StateKind::Coherent;
        auto comma = tail.find(',');
        if (comma == std::string::npos) {
            spec.alpha = parse_double(tail, "alpha");
        } else {
            spec.alpha = cdouble(parse_double(tail.substr(0, comma), "alpha_re"),
                                 parse_double(tail.substr(comma + 1), "alpha_im"));
        }
        return spec;
    }
    throw InputError("unrecognized state shorthand: " + text);
}

StateSpec parse_state_argument(const std::string &arg) {
    if (arg == "vacuum" || arg == "up" || arg == "down" || arg.find(':') != std::string::npos) {
        return parse_state_shorthand(arg);
    }
    return parse_state_spec_file(arg);
}

Wavefunction wavefunction_of(const StateSpec &spec, const PositionGrid &grid) {
    switch (spec.kind) {
        case StateKind::Fock:
            return fock_wavefunction(spec.n, grid);
        case StateKind::Coherent:
            return coherent_wavefunction(spec.alpha, grid);
        case StateKind::Superposition: {
            int dim = static_cast<int>(spec.coeffs.size());
            Eigen::MatrixXd basis = oscillator_basis_matrix(grid, dim);
            Wavefunction psi{grid, basis.cast<cdouble>() * spec.coeffs};
            psi.check_normalized();
            return psi;
        }
        default:
            throw InputError("this state kind has no wavefunction representation");
    }
}

FockDensityMatrix density_of(const StateSpec &spec, int dim) {
    switch (spec.kind) {
        case StateKind::Fock: {
            if (spec.n >= dim) {
                throw InputError("density_of: truncation dim too small for fock n");
            }
            Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
            c(spec.n) = 1.0;
            return density_from_coefficients(c);
        }
        case StateKind::Coherent: {
            Eigen::VectorXcd c(dim);
            // c_n = e^{-|a|^2/2} a^n / sqrt(n!)
            cdouble term = std::exp(-0.5 * std::norm(spec.alpha));
            for (int n = 0; n < dim; n++) {
                c(n) = term;
                term *= spec.alpha / std::sqrt(n + 1.0);
            }
            return FockDensityMatrix{c * c.adjoint()};
        }
        case StateKind::Superposition: {
            Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
            for (int n = 0; n < std::min<int>(dim, static_cast<int>(spec.coeffs.size())); n++) {
                c(n) = spec.coeffs(n);
            }
            return FockDensityMatrix{c * c.adjoint()};
        }
        case StateKind::Mixed: {
            if (spec.rho.rows() != dim) {
                Eigen::MatrixXcd padded = Eigen::MatrixXcd::Zero(dim, dim);
                int d = std::min<int>(dim, static_cast<int>(spec.rho.rows()));
                padded.topLeftCorner(d, d) = spec.rho.topLeftCorner(d, d);
                return FockDensityMatrix{padded};
            }
            return FockDensityMatrix{spec.rho};
        }
        default:
            throw InputError("spin states have no number-basis density matrix here");
    }
}

SpinState spin_state_of(const StateSpec &spec) {
    if (!spec.is_spin()) {
        throw InputError("not a spin state spec");
    }
    SpinState s{spec.two_j, spec.rho};
    s.validate();
    return s;
}

}  // namespace tomo
