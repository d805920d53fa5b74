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
#include "qmean/experiment.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qmean/errors.hpp"
#include "qmean/reference.hpp"
#include "qmean/statevector.hpp"

namespace qmean {

using json = nlohmann::ordered_json;

namespace {

bool is_pow2(std::size_t v) { return v >= 1 && std::has_single_bit(v); }

[[noreturn]] void fail(const std::string& context, const std::string& message) {
    throw ParseError(context.empty() ? message : context + ": " + message);
}

std::vector<std::vector<double>> parse_matrix(const json& j,
                                              const std::string& field) {
    if (!j.is_array() || j.empty()) {
        fail(field, "expected a non-empty array of rows");
    }
    std::vector<std::vector<double>> rows;
    rows.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& row = j[i];
        const std::string context = field + "[" + std::to_string(i) + "]";
        if (!row.is_array() || row.empty()) {
            fail(context, "expected a non-empty array of numbers");
        }
        std::vector<double> values;
        values.reserve(row.size());
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (!row[k].is_number()) {
                fail(context + "[" + std::to_string(k) + "]",
                     "expected a number");
            }
            const double v = row[k].get<double>();
            if (!std::isfinite(v)) {
                fail(context + "[" + std::to_string(k) + "]",
                     "value must be finite");
            }
            values.push_back(v);
        }
        rows.push_back(std::move(values));
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) {
            fail(field + "[" + std::to_string(i) + "]",
                 "rows must all have the same length");
        }
    }
    return rows;
}

void validate_spec(const ExperimentSpec& spec) {
    if (spec.vectors.has_value() == spec.angles.has_value()) {
        fail("", "exactly one of 'vectors' or 'angles' must be present");
    }
    const std::size_t count = spec.vector_count();
    if (!is_pow2(count) || count < 2) {
        fail(spec.vectors ? "vectors" : "angles",
             "N must be a power of two, at least 2");
    }
    if (count > ExperimentSpec::kMaxVectors) {
        fail(spec.vectors ? "vectors" : "angles",
             "N exceeds the cap of " +
                 std::to_string(ExperimentSpec::kMaxVectors));
    }
    const std::size_t dim = spec.dimension();
    if (!is_pow2(dim) || dim < 2) {
        fail(spec.vectors ? "vectors" : "angles",
             spec.vectors ? "d must be a power of two, at least 2"
                          : "each row needs d - 1 angles for a power-of-two d");
    }
    if (dim > ExperimentSpec::kMaxDimension) {
        fail(spec.vectors ? "vectors" : "angles",
             "d exceeds the cap of " +
                 std::to_string(ExperimentSpec::kMaxDimension));
    }
    if (spec.vectors) {
        for (std::size_t i = 0; i < spec.vectors->size(); ++i) {
            double norm_sq = 0.0;
            for (double v : (*spec.vectors)[i]) {
                norm_sq += v * v;
            }
            if (norm_sq == 0.0) {
                fail("vectors[" + std::to_string(i) + "]",
                     "row has zero norm");
            }
        }
    }
    if (spec.shots == 0) {
        fail("shots", "must be positive");
    }
}

ExperimentSpec spec_from_json(const json& doc) {
    if (!doc.is_object()) {
        fail("", "experiment document must be a JSON object");
    }
    const json& j = doc.contains("experiment") ? doc.at("experiment") : doc;
    if (!j.is_object()) {
        fail("experiment", "must be a JSON object");
    }

    ExperimentSpec spec;
    for (const auto& [key, value] : j.items()) {
        if (key == "name") {
            if (!value.is_string()) {
                fail("name", "expected a string");
            }
            spec.name = value.get<std::string>();
        } else if (key == "vectors") {
            spec.vectors = parse_matrix(value, "vectors");
        } else if (key == "angles") {
            spec.angles = parse_matrix(value, "angles");
        } else if (key == "shots") {
            if (!value.is_number_unsigned()) {
                fail("shots", "expected a positive integer");
            }
            spec.shots = value.get<std::uint64_t>();
        } else if (key == "seed") {
            if (!value.is_number_unsigned()) {
                fail("seed", "expected an unsigned integer");
            }
            spec.seed = value.get<std::uint64_t>();
        } else if (key == "modes") {
            if (!value.is_array()) {
                fail("modes", "expected an array of flag names");
            }
            spec.exact = false;
            for (const auto& mode : value) {
                if (!mode.is_string()) {
                    fail("modes", "expected strings");
                }
                const std::string name = mode.get<std::string>();
                if (name == "exact") {
                    spec.exact = true;
                } else if (name == "sampled") {
                    spec.sampled = true;
                } else if (name == "signs") {
                    spec.signs = true;
                } else if (name == "lowered") {
                    spec.lowered = true;
                } else {
                    fail("modes", "unknown flag '" + name + "'");
                }
            }
            if (!spec.exact && !spec.sampled) {
                spec.exact = true; // signs/lowered still need a base run
            }
        } else {
            fail(key, "unknown key");
        }
    }
    validate_spec(spec);
    return spec;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text,
                                                std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

// ---------------------------------------------------------------------------
// emission

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_json_value(std::string& out, const json& j, int depth) {
    const std::string pad(std::size_t(depth) * 2, ' ');
    const std::string inner_pad(std::size_t(depth + 1) * 2, ' ');
    switch (j.type()) {
    case json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        std::size_t i = 0;
        for (const auto& [key, value] : j.items()) {
            out += inner_pad;
            out += json(key).dump();
            out += ": ";
            write_json_value(out, value, depth + 1);
            if (++i < j.size()) {
                out += ',';
            }
            out += '\n';
        }
        out += pad + "}";
        return;
    }
    case json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        const bool flat = std::all_of(j.begin(), j.end(), [](const json& v) {
            return v.is_primitive();
        });
        if (flat) {
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i > 0) {
                    out += ", ";
                }
                write_json_value(out, j[i], depth);
            }
            out += ']';
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += inner_pad;
            write_json_value(out, j[i], depth + 1);
            if (i + 1 < j.size()) {
                out += ',';
            }
            out += '\n';
        }
        out += pad + "]";
        return;
    }
    case json::value_t::number_float:
        out += format_double(j.get<double>());
        return;
    default:
        out += j.dump(); // integers, strings, booleans, null
        return;
    }
}

// Serializes with a fixed layout and 17-significant-digit floats so equal
// reports produce byte-identical text.
std::string dump_json(const json& j) {
    std::string out;
    write_json_value(out, j, 0);
    out += '\n';
    return out;
}

json spec_to_json(const ExperimentSpec& spec) {
    json j;
    j["name"] = spec.name;
    if (spec.vectors) {
        j["vectors"] = *spec.vectors;
    }
    if (spec.angles) {
        j["angles"] = *spec.angles;
    }
    j["shots"] = spec.shots;
    j["seed"] = spec.seed;
    json modes = json::array();
    if (spec.exact) {
        modes.push_back("exact");
    }
    if (spec.sampled) {
        modes.push_back("sampled");
    }
    if (spec.signs) {
        modes.push_back("signs");
    }
    if (spec.lowered) {
        modes.push_back("lowered");
    }
    j["modes"] = std::move(modes);
    return j;
}

json counts_to_json(const GateCountReport& report) {
    json j;
    j["total"] = report.total;
    j["max_control_arity"] = report.max_control_arity;
    json by_kind;
    for (const auto& [kind, count] : report.by_kind) {
        by_kind[gate_kind_name(kind)] = count;
    }
    j["by_kind"] = std::move(by_kind);
    json by_arity;
    for (const auto& [arity, count] : report.by_control_arity) {
        by_arity[std::to_string(arity)] = count;
    }
    j["by_control_arity"] = std::move(by_arity);
    return j;
}

std::string emit_json(const RunReport& report) {
    json j;
    j["experiment"] = spec_to_json(report.spec);

    json results;
    results["num_qubits"] = report.layout.num_qubits();
    results["index_qubits"] = report.layout.n;
    results["register_qubits"] = report.layout.m;

    const std::size_t outcomes = std::size_t{2} * report.layout.data_dim();
    json labels = json::array();
    for (std::size_t r = 0; r < outcomes; ++r) {
        labels.push_back(outcome_label(r, report.layout.m));
    }
    results["labels"] = std::move(labels);
    results["classical_mean"] = report.classical_mean;
    if (report.exact_distribution) {
        results["exact_distribution"] = *report.exact_distribution;
    }
    if (report.histogram) {
        json sampled;
        sampled["shots"] = report.spec.shots;
        sampled["seed"] = report.spec.seed;
        sampled["counts"] = *report.histogram;
        sampled["frequencies"] = *report.sampled_frequencies;
        results["sampled"] = std::move(sampled);
    }
    json estimate;
    estimate["mode"] = report.estimate.mode.sampled ? "sampled" : "exact";
    estimate["magnitudes"] = report.estimate.magnitudes;
    if (report.estimate.signs) {
        estimate["signs"] = *report.estimate.signs;
    }
    estimate["estimated_mean"] = report.estimate.estimated_mean;
    estimate["zero_outcome_probability"] =
        report.estimate.zero_outcome_probability;
    results["estimate"] = std::move(estimate);
    results["magnitude_error"] = report.magnitude_error;
    results["gate_counts"] = counts_to_json(report.gates);
    if (report.lowered_gates) {
        results["lowered_gate_counts"] = counts_to_json(*report.lowered_gates);
    }
    results["notices"] = report.notices;
    j["results"] = std::move(results);
    return dump_json(j);
}

std::string emit_csv(const RunReport& report) {
    std::string out = "outcome,label,exact_p,sampled_p,count\n";
    const std::size_t outcomes = std::size_t{2} * report.layout.data_dim();
    for (std::size_t r = 0; r < outcomes; ++r) {
        out += std::to_string(r);
        out += ',';
        out += outcome_label(r, report.layout.m);
        out += ',';
        if (report.exact_distribution) {
            out += format_double((*report.exact_distribution)[r]);
        }
        out += ',';
        if (report.sampled_frequencies) {
            out += format_double((*report.sampled_frequencies)[r]);
        }
        out += ',';
        if (report.histogram) {
            out += std::to_string((*report.histogram)[r]);
        }
        out += '\n';
    }
    return out;
}

std::string emit_plotdata(const RunReport& report) {
    const std::vector<double>* probs = nullptr;
    if (report.exact_distribution) {
        probs = &*report.exact_distribution;
    } else if (report.sampled_frequencies) {
        probs = &*report.sampled_frequencies;
    }
    std::string out;
    if (probs == nullptr) {
        return out;
    }
    for (std::size_t r = 0; r < probs->size(); ++r) {
        out += outcome_label(r, report.layout.m);
        out += ' ';
        out += format_double((*probs)[r]);
        out += '\n';
    }
    return out;
}

std::string emit_table(const RunReport& report) {
    std::ostringstream out;
    char line[160];

    out << "experiment: " << report.spec.name << "  (N=" << report.spec.vector_count()
        << ", d=" << report.spec.dimension() << ", qubits=" << report.layout.num_qubits()
        << ": index=" << report.layout.n << " data=" << report.layout.m
        << " mean=" << report.layout.m << ")\n";
    for (const auto& notice : report.notices) {
        out << "notice: " << notice << "\n";
    }
    out << "\n";

    std::snprintf(line, sizeof(line), "%-8s %-8s %-14s %-14s %-8s\n", "outcome",
                  "label", "exact_p", "sampled_p", "count");
    out << line;
    const std::size_t outcomes = std::size_t{2} * report.layout.data_dim();
    for (std::size_t r = 0; r < outcomes; ++r) {
        std::string exact = "-", freq = "-", count = "-";
        if (report.exact_distribution) {
            std::snprintf(line, sizeof(line), "%.8f",
                          (*report.exact_distribution)[r]);
            exact = line;
        }
        if (report.sampled_frequencies) {
            std::snprintf(line, sizeof(line), "%.8f",
                          (*report.sampled_frequencies)[r]);
            freq = line;
        }
        if (report.histogram) {
            count = std::to_string((*report.histogram)[r]);
        }
        std::snprintf(line, sizeof(line), "%-8zu %-8s %-14s %-14s %-8s\n", r,
                      outcome_label(r, report.layout.m).c_str(), exact.c_str(),
                      freq.c_str(), count.c_str());
        out << line;
    }

    const auto print_row = [&](const char* title, const std::vector<double>& v) {
        out << "\n" << title << ":";
        for (double x : v) {
            std::snprintf(line, sizeof(line), " %+.8f", x);
            out << line;
        }
    };
    print_row("classical mean ", report.classical_mean);
    print_row("estimated mean ", report.estimate.estimated_mean);
    print_row("|est| - |mean| ", report.magnitude_error);
    if (report.estimate.signs) {
        out << "\nrecovered signs:";
        for (int s : *report.estimate.signs) {
            out << ' ' << (s > 0 ? "+1" : (s < 0 ? "-1" : "0"));
        }
    }
    out << "\nestimate mode  : "
        << (report.estimate.mode.sampled ? "sampled" : "exact") << "\n";

    out << "gates          : " << report.gates.total
        << " (max controls " << report.gates.max_control_arity << ")";
    if (report.lowered_gates) {
        out << "; lowered: " << report.lowered_gates->total
            << " (max controls " << report.lowered_gates->max_control_arity
            << ")";
    }
    out << "\n";
    std::snprintf(line, sizeof(line), "duration       : %.6f s\n",
                  report.duration_seconds);
    out << line;
    return out.str();
}

} // namespace

std::size_t ExperimentSpec::vector_count() const {
    if (vectors) {
        return vectors->size();
    }
    return angles ? angles->size() : 0;
}

std::size_t ExperimentSpec::dimension() const {
    if (vectors) {
        return vectors->empty() ? 0 : vectors->front().size();
    }
    if (angles && !angles->empty()) {
        return angles->front().size() + 1;
    }
    return 0;
}

VectorSet ExperimentSpec::to_vector_set(std::vector<std::string>* notices) const {
    if (vectors) {
        if (notices != nullptr) {
            for (std::size_t i = 0; i < vectors->size(); ++i) {
                double norm_sq = 0.0;
                for (double v : (*vectors)[i]) {
                    norm_sq += v * v;
                }
                if (std::abs(std::sqrt(norm_sq) - 1.0) > 1e-9) {
                    notices->push_back("row " + std::to_string(i) +
                                       " normalized (|v| = " +
                                       format_double(std::sqrt(norm_sq)) + ")");
                }
            }
        }
        return VectorSet::from_rows(*vectors);
    }
    if (!angles) {
        throw ParseError("experiment has neither vectors nor angles");
    }
    std::vector<std::vector<double>> rows;
    rows.reserve(angles->size());
    for (const auto& row : *angles) {
        rows.push_back(vector_from_angles(AngleTree::from_level_order(row)));
    }
    return VectorSet::from_rows(rows);
}

ExperimentSpec parse_experiment(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte);
        throw ParseError("invalid JSON at line " + std::to_string(line) +
                         ", column " + std::to_string(column));
    }
    return spec_from_json(doc);
}

ExperimentSpec parse_experiment_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open experiment file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        ExperimentSpec spec = parse_experiment(buffer.str());
        if (spec.name.empty()) {
            spec.name = path.stem().string();
        }
        return spec;
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

RunReport run_experiment(const ExperimentSpec& spec) {
    const auto start = std::chrono::steady_clock::now();

    RunReport report;
    report.spec = spec;
    if (!report.spec.exact && !report.spec.sampled) {
        report.spec.exact = true;
    }
    validate_spec(report.spec);

    const VectorSet set = report.spec.to_vector_set(&report.notices);
    auto [circuit, layout] = build_circuit(set);
    report.layout = layout;
    report.gates = gate_counts(circuit);

    const Circuit* runner = &circuit;
    std::optional<Circuit> lowered;
    if (report.spec.lowered) {
        lowered = lower_multicontrolled(circuit);
        report.lowered_gates = gate_counts(*lowered);
        runner = &*lowered;
    }

    const StateVector state = run(*runner);
    const std::vector<double> probs =
        state.register_probabilities(layout.mean_positions());

    if (report.spec.exact) {
        report.exact_distribution = probs;
    }
    if (report.spec.sampled) {
        const Histogram counts = sample(probs, report.spec.shots, report.spec.seed);
        std::vector<double> freqs(counts.size());
        for (std::size_t i = 0; i < counts.size(); ++i) {
            freqs[i] = double(counts[i]) / double(report.spec.shots);
        }
        report.histogram = counts;
        report.sampled_frequencies = std::move(freqs);
    }

    // the estimate follows the exact path when available, sampling otherwise
    const EstimateMode mode =
        report.spec.exact
            ? EstimateMode::exact()
            : EstimateMode::with_sampling(report.spec.shots, report.spec.seed);
    report.estimate = mean_from_distribution(
        report.spec.exact ? *report.exact_distribution
                          : *report.sampled_frequencies,
        mode);
    if (report.spec.signs) {
        report.estimate.signs = recover_signs(set);
        for (std::size_t k = 0; k < report.estimate.magnitudes.size(); ++k) {
            report.estimate.estimated_mean[k] =
                double((*report.estimate.signs)[k]) *
                report.estimate.magnitudes[k];
        }
    }

    report.classical_mean = reference::classical_mean(set);
    report.magnitude_error.resize(report.classical_mean.size());
    for (std::size_t k = 0; k < report.classical_mean.size(); ++k) {
        report.magnitude_error[k] = std::abs(report.estimate.estimated_mean[k]) -
                                    std::abs(report.classical_mean[k]);
    }

    report.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

std::string emit(const RunReport& report, OutputFormat format) {
    switch (format) {
    case OutputFormat::Table:
        return emit_table(report);
    case OutputFormat::Csv:
        return emit_csv(report);
    case OutputFormat::Json:
        return emit_json(report);
    case OutputFormat::PlotData:
        return emit_plotdata(report);
    }
    throw Error("unknown output format");
}

std::string outcome_label(std::uint64_t value, std::size_t bits) {
    std::string label(bits, '0');
    for (std::size_t k = 0; k < bits; ++k) {
        if ((value >> (bits - 1 - k)) & 1u) {
            label[k] = '1';
        }
    }
    return label;
}

OutputFormat parse_output_format(const std::string& name) {
    if (name == "table") {
        return OutputFormat::Table;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    if (name == "plotdata") {
        return OutputFormat::PlotData;
    }
    throw ParseError("unknown output format '" + name + "'");
}

} // namespace qmean
