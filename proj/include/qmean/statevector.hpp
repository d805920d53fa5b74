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
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qmean/gate.hpp"

namespace qmean {

/// Dense complex state vector over `num_qubits` qubits.
///
/// Basis convention: qubit position p contributes bit 2^p to the basis
/// index. A StateVector is confined to one thread of control at a time but
/// may be moved between threads.
class StateVector {
  public:
    /// Desk-scale cap on the simulation size.
    static constexpr std::size_t kMaxQubits = 24;

    /// Constructs the ground state |0...0> on q qubits. Throws SizeError
    /// unless 1 <= q <= kMaxQubits.
    explicit StateVector(std::size_t num_qubits);

    /// Wraps an explicit amplitude array (must have length 2^q and unit norm
    /// within 1e-9). Used by reference-state constructions and tests.
    static StateVector from_amplitudes(std::size_t num_qubits,
                                       std::vector<std::complex<double>> amps);

    std::size_t num_qubits() const { return num_qubits_; }
    std::uint64_t dim() const { return amps_.size(); }

    std::span<const std::complex<double>> amplitudes() const { return amps_; }
    std::complex<double> amplitude(std::uint64_t basis) const {
        return amps_[basis];
    }

    /// Applies one gate in place. Amplitude pairs differing only in the
    /// target bit are mixed by the 2x2 gate matrix, but only where every
    /// control bit matches its polarity; all other amplitudes are untouched.
    void apply(const GateOp& op);

    double norm_sq() const;

    /// Marginal distribution of an ordered qubit subset: qubits[k]
    /// contributes bit 2^k of the outcome index.
    std::vector<double>
    register_probabilities(std::span<const std::size_t> qubits) const;

  private:
    StateVector() = default;

    std::size_t num_qubits_ = 0;
    std::vector<std::complex<double>> amps_;
};

/// Folds apply() over the circuit's ops starting from the ground state.
StateVector run(const Circuit& circuit);

} // namespace qmean
