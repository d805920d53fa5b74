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
#include "qmean/statevector.hpp"

#include <cmath>
#include <string>
#include <unordered_set>

#include "qmean/errors.hpp"
#include "qmean/kernels.hpp"

namespace qmean {

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw SizeError("qubit count " + std::to_string(num_qubits) +
                        " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
    amps_.assign(std::uint64_t{1} << num_qubits, {0.0, 0.0});
    amps_[0] = {1.0, 0.0};
}

StateVector StateVector::from_amplitudes(std::size_t num_qubits,
                                         std::vector<std::complex<double>> amps) {
    StateVector state(num_qubits);
    if (amps.size() != state.dim()) {
        throw SizeError("amplitude array length does not match 2^q");
    }
    state.amps_ = std::move(amps);
    if (std::abs(state.norm_sq() - 1.0) > 1e-9) {
        throw NormalizationError("amplitude array is not normalized");
    }
    return state;
}

void StateVector::apply(const GateOp& op) {
    op.validate(num_qubits_);
    std::uint64_t ctrl_mask = 0;
    std::uint64_t ctrl_value = 0;
    for (const auto& c : op.controls) {
        const std::uint64_t bit = std::uint64_t{1} << c.qubit;
        ctrl_mask |= bit;
        if (c.polarity == Polarity::Closed) {
            ctrl_value |= bit;
        }
    }
    const GateMatrix mat = gate_matrix(op);
    if (mat.real) {
        const double m[4] = {mat.m[0].real(), mat.m[1].real(),
                             mat.m[2].real(), mat.m[3].real()};
        kernels::apply_2x2_real(m, amps_.data(), unsigned(num_qubits_),
                                unsigned(op.target), ctrl_mask, ctrl_value);
    } else {
        kernels::apply_2x2_complex(mat.m.data(), amps_.data(),
                                   unsigned(num_qubits_), unsigned(op.target),
                                   ctrl_mask, ctrl_value);
    }
}

double StateVector::norm_sq() const {
    double total = 0.0;
    for (const auto& a : amps_) {
        total += a.real() * a.real() + a.imag() * a.imag();
    }
    return total;
}

std::vector<double>
StateVector::register_probabilities(std::span<const std::size_t> qubits) const {
    if (qubits.empty() || qubits.size() > num_qubits_) {
        throw LayoutError("register subset size out of range");
    }
    std::unordered_set<std::size_t> seen;
    for (std::size_t q : qubits) {
        if (q >= num_qubits_) {
            throw LayoutError("register qubit " + std::to_string(q) +
                              " out of range");
        }
        if (!seen.insert(q).second) {
            throw LayoutError("register subset has duplicate qubit " +
                              std::to_string(q));
        }
    }
    std::vector<double> probs(std::uint64_t{1} << qubits.size(), 0.0);
    for (std::uint64_t b = 0; b < amps_.size(); ++b) {
        std::uint64_t r = 0;
        for (std::size_t k = 0; k < qubits.size(); ++k) {
            r |= ((b >> qubits[k]) & 1u) << k;
        }
        const auto& a = amps_[b];
        probs[r] += a.real() * a.real() + a.imag() * a.imag();
    }
    return probs;
}

StateVector run(const Circuit& circuit) {
    StateVector state(circuit.num_qubits());
    for (const auto& op : circuit.ops()) {
        state.apply(op);
    }
    return state;
}

} // namespace qmean
