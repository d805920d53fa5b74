// Copyright 2026 The qmean authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qmean/gate.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <unordered_set>

namespace qmean {

GateOp GateOp::h(std::size_t target, std::vector<Control> controls) {
    return {GateKind::H, target, 0.0, std::move(controls)};
}

GateOp GateOp::x(std::size_t target, std::vector<Control> controls) {
    return {GateKind::X, target, 0.0, std::move(controls)};
}

GateOp GateOp::ry(std::size_t target, double angle,
                  std::vector<Control> controls) {
    return {GateKind::RY, target, angle, std::move(controls)};
}

GateOp GateOp::xpow(std::size_t target, double exponent,
                    std::vector<Control> controls) {
    return {GateKind::XPow, target, exponent, std::move(controls)};
}

void GateOp::validate(std::size_t num_qubits) const {
    if (target >= num_qubits) {
        throw LayoutError("gate target " + std::to_string(target) +
                          " out of range for " + std::to_string(num_qubits) +
                          " qubits");
    }
    if (!std::isfinite(param)) {
        throw LayoutError("gate parameter must be finite");
    }
    std::unordered_set<std::size_t> seen;
    for (const auto& c : controls) {
        if (c.qubit >= num_qubits) {
            throw LayoutError("control qubit " + std::to_string(c.qubit) +
                              " out of range for " +
                              std::to_string(num_qubits) + " qubits");
        }
        if (c.qubit == target) {
            throw LayoutError("control qubit coincides with the target");
        }
        if (!seen.insert(c.qubit).second) {
            throw LayoutError("duplicate control qubit " +
                              std::to_string(c.qubit));
        }
    }
}

GateMatrix gate_matrix(const GateOp& op) {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    switch (op.kind) {
    case GateKind::H:
        return {{inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2}, true};
    case GateKind::X:
        return {{0.0, 1.0, 1.0, 0.0}, true};
    case GateKind::RY: {
        const double c = std::cos(op.param / 2.0);
        const double s = std::sin(op.param / 2.0);
        return {{c, -s, s, c}, true};
    }
    case GateKind::XPow: {
        // X^a = [[1+e, 1-e], [1-e, 1+e]] / 2 with e = exp(i*pi*a)
        const std::complex<double> e =
            std::exp(std::complex<double>(0.0, std::numbers::pi * op.param));
        const std::complex<double> p = (1.0 + e) / 2.0;
        const std::complex<double> q = (1.0 - e) / 2.0;
        return {{p, q, q, p}, false};
    }
    }
    throw LayoutError("unknown gate kind");
}

const char* gate_kind_name(GateKind kind) {
    switch (kind) {
    case GateKind::H:
        return "H";
    case GateKind::X:
        return "X";
    case GateKind::RY:
        return "RY";
    case GateKind::XPow:
        return "XPow";
    }
    return "?";
}

} // namespace qmean
