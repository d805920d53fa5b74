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
#include "qmean/reference.hpp"

#include <bit>
#include <cmath>

namespace qmean::reference {

std::vector<double> classical_mean(const VectorSet& set) {
    const std::size_t d = set.dimension();
    std::vector<double> mean(d, 0.0);
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto row = set.row(i);
        for (std::size_t k = 0; k < d; ++k) {
            mean[k] += row[k];
        }
    }
    for (double& m : mean) {
        m /= double(set.size());
    }
    return mean;
}

std::vector<double> expected_distribution(const VectorSet& set) {
    return classical_summary(set).expected_distribution;
}

ClassicalSummary classical_summary(const VectorSet& set) {
    ClassicalSummary summary;
    summary.mean = classical_mean(set);
    const std::size_t d = set.dimension();
    summary.expected_distribution.assign(2 * d, 0.0);
    for (std::size_t k = 0; k < d; ++k) {
        const double sq = summary.mean[k] * summary.mean[k];
        summary.mean_norm_sq += sq;
        summary.expected_distribution[d + k] = sq;
    }
    summary.expected_distribution[0] = 1.0 - summary.mean_norm_sq;
    return summary;
}

StateVector construct_state_after_load(const VectorSet& set,
                                       const RegisterLayout& layout) {
    const std::size_t d = set.dimension();
    const double scale = 1.0 / std::sqrt(double(set.size()));
    std::vector<std::complex<double>> amps(
        std::uint64_t{1} << layout.num_qubits(), {0.0, 0.0});
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto row = set.row(i);
        for (std::size_t k = 0; k < d; ++k) {
            amps[layout.basis_index(i, d + k, 0)] = row[k] * scale;
        }
    }
    return StateVector::from_amplitudes(layout.num_qubits(), std::move(amps));
}

StateVector construct_state_after_copy(const VectorSet& set,
                                       const RegisterLayout& layout) {
    const std::size_t count = set.size();
    const std::size_t d = set.dimension();
    const double scale = 1.0 / double(count);
    std::vector<std::complex<double>> amps(
        std::uint64_t{1} << layout.num_qubits(), {0.0, 0.0});
    for (std::size_t k = 0; k < d; ++k) {
        double sum = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            sum += set.row(i)[k];
        }
        amps[layout.basis_index(0, d + k, d + k)] = sum * scale;
    }
    for (std::size_t l = 1; l < count; ++l) {
        for (std::size_t k = 0; k < d; ++k) {
            double sum = 0.0;
            for (std::size_t i = 0; i < count; ++i) {
                const bool odd = (std::popcount(i & l) & 1u) != 0;
                sum += odd ? -set.row(i)[k] : set.row(i)[k];
            }
            amps[layout.basis_index(l, d + k, 0)] = sum * scale;
        }
    }
    return StateVector::from_amplitudes(layout.num_qubits(), std::move(amps));
}

} // namespace qmean::reference
