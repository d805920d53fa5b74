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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qmean/encoder.hpp"
#include "qmean/lowering.hpp"
#include "qmean/mean_estimator.hpp"
#include "qmean/sampling.hpp"

namespace qmean {

/// One experiment document. Exactly one of `vectors` (N rows of d reals,
/// normalized on load) or `angles` (per-vector rotation-tree angles, d-1
/// values in root-first level order) is present. Desk-scale caps:
/// N <= 64, d <= 16, both powers of two.
struct ExperimentSpec {
    static constexpr std::size_t kMaxVectors = 64;
    static constexpr std::size_t kMaxDimension = 16;

    std::string name;
    std::optional<std::vector<std::vector<double>>> vectors;
    std::optional<std::vector<std::vector<double>>> angles;
    std::uint64_t shots = kDefaultShots;
    std::uint64_t seed = 0;

    bool exact = true;
    bool sampled = false;
    bool signs = false;
    bool lowered = false;

    std::size_t vector_count() const;
    std::size_t dimension() const;

    /// Materializes the input rows; normalization notices (one per row whose
    /// norm deviated from 1 beyond 1e-9) are appended when requested.
    VectorSet to_vector_set(std::vector<std::string>* notices = nullptr) const;

    bool operator==(const ExperimentSpec&) const = default;
};

/// Parses a JSON experiment document. Accepts either the spec object itself
/// or a full report (the spec is then read from its "experiment" key), so
/// emitted JSON reports can be re-run. Throws ParseError with line/field
/// context.
ExperimentSpec parse_experiment(const std::string& text);
ExperimentSpec parse_experiment_file(const std::filesystem::path& path);

struct RunReport {
    ExperimentSpec spec;
    RegisterLayout layout;
    std::vector<std::string> notices;

    std::optional<std::vector<double>> exact_distribution;
    std::optional<Histogram> histogram;
    std::optional<std::vector<double>> sampled_frequencies;

    MeanEstimate estimate;
    std::vector<double> classical_mean;
    /// error[k] = |estimated_mean[k]| - |classical_mean[k]|
    std::vector<double> magnitude_error;

    GateCountReport gates;
    std::optional<GateCountReport> lowered_gates;

    double duration_seconds = 0.0;
};

/// Builds the circuit (lowered when requested), extracts the requested
/// distributions, estimates the mean and compares it against the classical
/// reference. Deterministic given (spec, seed).
RunReport run_experiment(const ExperimentSpec& spec);

enum class OutputFormat { Table, Csv, Json, PlotData };

/// Renders a report. csv rows are `outcome,label,exact_p,sampled_p,count`;
/// plotdata is two-column `label probability`; json is the full report and
/// parses back into an equal spec. Floating-point text in csv/json/plotdata
/// uses 17 significant digits; identical (spec, seed) give byte-identical
/// csv/json (the wall-clock duration appears only in the table format).
std::string emit(const RunReport& report, OutputFormat format);

/// Mean-register bitstring label, most significant qubit first.
std::string outcome_label(std::uint64_t value, std::size_t bits);

OutputFormat parse_output_format(const std::string& name);

} // namespace qmean
