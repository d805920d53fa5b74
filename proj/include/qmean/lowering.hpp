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

#include <cstddef>
#include <map>

#include "qmean/gate.hpp"

namespace qmean {

/// Rewrites every gate with two or more controls into 0- and 1-control
/// gates by the recursive square-root construction: C^c(U) becomes
/// controlled V / V-dagger (V^2 = U) plus two (c-1)-controlled X pieces and
/// one (c-1)-controlled V, recursing until arity <= 1. RY halves its angle;
/// X roots through the XPow family. Open controls are realized by
/// sandwiching the control qubit with X. Gates already at arity <= 1 pass
/// through unchanged. The lowered circuit reproduces the original output
/// state exactly (no global-phase allowance needed).
Circuit lower_multicontrolled(const Circuit& circuit);

/// Gate tally by kind and by control arity.
struct GateCountReport {
    std::map<GateKind, std::size_t> by_kind;
    std::map<std::size_t, std::size_t> by_control_arity;
    std::size_t total = 0;
    std::size_t max_control_arity = 0;
};

GateCountReport gate_counts(const Circuit& circuit);

} // namespace qmean
