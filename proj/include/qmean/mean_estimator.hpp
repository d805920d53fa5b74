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

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qmean/encoder.hpp"
#include "qmean/gate.hpp"

namespace qmean {

inline constexpr std::uint64_t kDefaultShots = 8192;
inline constexpr double kDefaultProbeScale = 0.02;

struct EstimateMode {
    bool sampled = false;
    std::uint64_t shots = kDefaultShots;
    std::uint64_t seed = 0;

    static EstimateMode exact() { return {}; }
    static EstimateMode with_sampling(std::uint64_t shots, std::uint64_t seed) {
        return {true, shots, seed};
    }

    bool operator==(const EstimateMode&) const = default;
};

/// Mean recovered from the mean-register distribution. magnitudes[k] is
/// sqrt(P(d + k)); signs (when requested) are +1/-1/0 per component;
/// estimated_mean[k] = sign_k * magnitudes[k] with sign +1 when signs were
/// not requested.
struct MeanEstimate {
    std::vector<double> magnitudes;
    std::optional<std::vector<int>> signs;
    std::vector<double> estimated_mean;
    double zero_outcome_probability = 0.0;
    EstimateMode mode;
};

/// Assembles the full estimation circuit: Hadamards on the index register,
/// the data-loading block, Hadamards again, then for every data qubit
/// (d_m included) an X onto the mirrored mean qubit controlled on all index
/// qubits open and that data qubit closed, and a final round of index
/// Hadamards. Measurement is probability extraction, not a gate.
std::pair<Circuit, RegisterLayout> build_circuit(const VectorSet& set);

/// Exact mean-register distribution over values [0, 2d - 1]. Entry d + k
/// equals ((1/N) sum_i v_ik)^2; entries 1..d-1 carry no mass.
std::vector<double> exact_distribution(const VectorSet& set);

/// Turns a mean-register distribution (exact probabilities or sampled
/// frequencies, length 2d) into an estimate without signs.
MeanEstimate mean_from_distribution(std::span<const double> probabilities,
                                    EstimateMode mode);

MeanEstimate estimate_mean(const VectorSet& set, EstimateMode mode,
                           bool with_signs = false);

/// Recovers the sign of each mean component by rerunning the exact
/// distribution with row 0 nudged along e_k: replacing row 0 by
/// normalize(row0 + eps*e_k) shifts the mean by a known vector delta, and
/// P'(d+k) - P(d+k) - delta_k^2 = 2*alpha_k*delta_k exactly. Components
/// whose recovered |alpha_k| falls below eps/4 (or whose probe is absorbed
/// by normalization, i.e. row 0 = +-e_k) report 0. Requires
/// 0 < probe_scale <= 0.25.
std::vector<int> recover_signs(const VectorSet& set,
                               double probe_scale = kDefaultProbeScale);

} // namespace qmean
