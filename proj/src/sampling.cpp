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
#include "qmean/sampling.hpp"

#include <cmath>
#include <string>

#include "qmean/errors.hpp"

namespace qmean {

Histogram sample(std::span<const double> probabilities, std::uint64_t shots,
                 std::uint64_t seed) {
    if (probabilities.empty()) {
        throw DistributionError("empty probability array");
    }
    if (shots == 0) {
        throw SizeError("shot count must be positive");
    }

    std::vector<double> cdf(probabilities.size());
    double total = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        double p = probabilities[i];
        if (p < 0.0) {
            if (p < -1e-12) {
                throw DistributionError("probability " + std::to_string(i) +
                                        " is negative");
            }
            p = 0.0; // rounding noise
        }
        total += p;
        cdf[i] = total;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw DistributionError("probabilities sum to " +
                                std::to_string(total) + ", not 1");
    }

    // last outcome with nonzero probability, for draws past cdf.back()
    std::size_t last = 0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        if (probabilities[i] > 0.0) {
            last = i;
        }
    }

    Histogram counts(probabilities.size(), 0);
    SplitMix64 rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.next_double();
        std::size_t outcome = last;
        for (std::size_t i = 0; i < cdf.size(); ++i) {
            if (u < cdf[i]) {
                outcome = i;
                break;
            }
        }
        ++counts[outcome];
    }
    return counts;
}

} // namespace qmean
