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
#include "qmean/mean_estimator.hpp"

#include <cmath>

#include "qmean/errors.hpp"
#include "qmean/sampling.hpp"
#include "qmean/statevector.hpp"

namespace qmean {

std::pair<Circuit, RegisterLayout> build_circuit(const VectorSet& set) {
    const RegisterLayout layout = RegisterLayout::for_set(set);
    Circuit circuit(layout.num_qubits());

    const auto index_hadamards = [&] {
        for (std::size_t j = 0; j < layout.n; ++j) {
            circuit.append(GateOp::h(layout.index_position(j)));
        }
    };

    index_hadamards();
    circuit.append_all(qram_ops(set, layout));
    index_hadamards();
    // copy stage: fans the data value out onto the mean register on the
    // index = 0 branch, one X per data qubit (d_m included)
    for (std::size_t b = 0; b < layout.m; ++b) {
        std::vector<Control> controls;
        controls.reserve(layout.n + 1);
        for (std::size_t j = 0; j < layout.n; ++j) {
            controls.push_back({layout.index_position(j), Polarity::Open});
        }
        controls.push_back({layout.data_position(b), Polarity::Closed});
        circuit.append(GateOp::x(layout.mean_position(b), std::move(controls)));
    }
    index_hadamards();
    return {std::move(circuit), layout};
}

std::vector<double> exact_distribution(const VectorSet& set) {
    auto [circuit, layout] = build_circuit(set);
    const StateVector state = run(circuit);
    return state.register_probabilities(layout.mean_positions());
}

MeanEstimate mean_from_distribution(std::span<const double> probabilities,
                                    EstimateMode mode) {
    if (probabilities.size() < 4 || probabilities.size() % 2 != 0) {
        throw DistributionError("mean-register distribution must have 2d >= 4 entries");
    }
    const std::size_t d = probabilities.size() / 2;
    MeanEstimate estimate;
    estimate.mode = mode;
    estimate.zero_outcome_probability = probabilities[0];
    estimate.magnitudes.resize(d);
    for (std::size_t k = 0; k < d; ++k) {
        estimate.magnitudes[k] = std::sqrt(std::max(probabilities[d + k], 0.0));
    }
    estimate.estimated_mean = estimate.magnitudes;
    return estimate;
}

MeanEstimate estimate_mean(const VectorSet& set, EstimateMode mode,
                           bool with_signs) {
    auto [circuit, layout] = build_circuit(set);
    const StateVector state = run(circuit);
    std::vector<double> probs =
        state.register_probabilities(layout.mean_positions());

    if (mode.sampled) {
        if (mode.shots == 0) {
            throw SizeError("sampled estimation needs at least one shot");
        }
        const Histogram counts = sample(probs, mode.shots, mode.seed);
        for (std::size_t i = 0; i < probs.size(); ++i) {
            probs[i] = double(counts[i]) / double(mode.shots);
        }
    }

    MeanEstimate estimate = mean_from_distribution(probs, mode);
    if (with_signs) {
        estimate.signs = recover_signs(set);
        for (std::size_t k = 0; k < estimate.magnitudes.size(); ++k) {
            estimate.estimated_mean[k] =
                double((*estimate.signs)[k]) * estimate.magnitudes[k];
        }
    }
    return estimate;
}

std::vector<int> recover_signs(const VectorSet& set, double probe_scale) {
    if (!(probe_scale > 0.0) || probe_scale > 0.25) {
        throw SizeError("probe scale must lie in (0, 0.25]");
    }
    const std::size_t d = set.dimension();
    const double n = double(set.size());
    const std::vector<double> base = exact_distribution(set);
    const std::span<const double> row0 = set.row(0);

    std::vector<int> signs(d, 0);
    for (std::size_t k = 0; k < d; ++k) {
        std::vector<double> probe(row0.begin(), row0.end());
        probe[k] += probe_scale;
        double norm = 0.0;
        for (double x : probe) {
            norm += x * x;
        }
        norm = std::sqrt(norm);
        for (double& x : probe) {
            x /= norm;
        }
        // the mean shifts by exactly (probe - row0)/N, so the probed
        // probability satisfies P' - P - delta_k^2 = 2*alpha_k*delta_k
        const double delta_k = (probe[k] - row0[k]) / n;
        if (std::abs(delta_k) < 1e-12) {
            continue; // row 0 is +-e_k; the probe is absorbed by normalization
        }
        const std::vector<double> probed =
            exact_distribution(set.with_row(0, probe));
        const double discriminant =
            probed[d + k] - base[d + k] - delta_k * delta_k;
        const double alpha_hat = discriminant / (2.0 * delta_k);
        if (std::abs(alpha_hat) >= probe_scale / 4.0) {
            signs[k] = alpha_hat > 0.0 ? 1 : -1;
        }
    }
    return signs;
}

} // namespace qmean
