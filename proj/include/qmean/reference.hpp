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

#include <vector>

#include "qmean/encoder.hpp"
#include "qmean/statevector.hpp"

// Independent classical reference path: closed-form results and directly
// constructed intermediate states, never touching the gate simulator. The
// simulator is validated against these.
namespace qmean::reference {

struct ClassicalSummary {
    std::vector<double> mean;                  // alpha
    double mean_norm_sq = 0.0;                 // sum alpha_k^2
    std::vector<double> expected_distribution; // 2d entries
};

/// alpha_k = (1/N) sum_i v_ik.
std::vector<double> classical_mean(const VectorSet& set);

/// Closed-form mean-register distribution: entry d+k is alpha_k^2, entry 0
/// is 1 - sum alpha_k^2, entries 1..d-1 are zero.
std::vector<double> expected_distribution(const VectorSet& set);

ClassicalSummary classical_summary(const VectorSet& set);

/// State after loading: amplitude v_ik / sqrt(N) at basis
/// (index=i, data=d+k, mean=0).
StateVector construct_state_after_load(const VectorSet& set,
                                       const RegisterLayout& layout);

/// State after the interference and copy stages. The index-0 branch carries
/// (1/N) sum_i v_ik at (0, d+k, d+k); the index-l branch (l != 0) carries
/// (1/N) sum_i (-1)^(i.l) v_ik at (l, d+k, 0), with i.l the bitwise inner
/// product mod 2.
StateVector construct_state_after_copy(const VectorSet& set,
                                       const RegisterLayout& layout);

} // namespace qmean::reference
