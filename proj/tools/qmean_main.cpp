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

// qmean command line: run one experiment file, batch a directory, or print
// version information. Exit codes: 0 success, 2 parse/validation error,
// 3 internal numerical failure.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmean/experiment.hpp"
#include "qmean/kernels.hpp"

namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitParse = 2;
constexpr int kExitInternal = 3;

struct RunOptions {
    std::string file;
    std::string format = "table";
    std::string out_path;
    bool has_shots = false;
    std::uint64_t shots = 0;
    bool has_seed = false;
    std::uint64_t seed = 0;
    bool exact = false;
    bool sampled = false;
    bool signs = false;
    bool lowered = false;
};

void write_atomic(const fs::path& path, const std::string& text) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw qmean::Error("cannot write " + tmp.string());
        }
        out << text;
    }
    fs::rename(tmp, path);
}

qmean::ExperimentSpec load_spec(const RunOptions& opt) {
    qmean::ExperimentSpec spec = qmean::parse_experiment_file(opt.file);
    if (opt.has_shots) {
        if (opt.shots == 0) {
            throw qmean::ParseError("--shots must be positive");
        }
        spec.shots = opt.shots;
    }
    if (opt.has_seed) {
        spec.seed = opt.seed;
    }
    spec.exact = spec.exact || opt.exact;
    spec.sampled = spec.sampled || opt.sampled;
    spec.signs = spec.signs || opt.signs;
    spec.lowered = spec.lowered || opt.lowered;
    return spec;
}

int run_one(const RunOptions& opt) {
    const qmean::OutputFormat format = qmean::parse_output_format(opt.format);
    const qmean::ExperimentSpec spec = load_spec(opt);
    const qmean::RunReport report = qmean::run_experiment(spec);
    for (const auto& notice : report.notices) {
        std::cerr << "notice: " << notice << "\n";
    }
    const std::string text = qmean::emit(report, format);
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        write_atomic(opt.out_path, text);
    }
    return 0;
}

int run_batch(const std::string& dir) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".experiment") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::cerr << "no .experiment files in " << dir << "\n";
        return kExitParse;
    }

    struct Outcome {
        int code = 0;
        std::string message;
    };
    std::vector<std::future<Outcome>> futures;
    futures.reserve(files.size());
    for (const auto& file : files) {
        futures.push_back(std::async(std::launch::async, [file]() -> Outcome {
            try {
                const auto spec = qmean::parse_experiment_file(file);
                const auto report = qmean::run_experiment(spec);
                fs::path out = file;
                out.replace_extension(".report.json");
                write_atomic(out, qmean::emit(report, qmean::OutputFormat::Json));
                return {0, out.string()};
            } catch (const qmean::ParseError& e) {
                return {kExitParse, e.what()};
            } catch (const std::exception& e) {
                return {kExitInternal, e.what()};
            }
        }));
    }

    int exit_code = 0;
    for (std::size_t i = 0; i < files.size(); ++i) {
        const Outcome outcome = futures[i].get();
        if (outcome.code == 0) {
            std::cout << files[i].filename().string() << " -> " << outcome.message
                      << "\n";
        } else {
            std::cerr << files[i].filename().string() << " failed: "
                      << outcome.message << "\n";
            exit_code = std::max(exit_code, outcome.code);
        }
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"interference-based mean estimation on a seeded state-vector simulator"};
    app.require_subcommand(1);

    RunOptions opt;
    CLI::App* cmd_run = app.add_subcommand("run", "run one experiment file");
    cmd_run->add_option("file", opt.file, "experiment file (JSON)")->required();
    auto* shots_opt =
        cmd_run->add_option("--shots", opt.shots, "override the shot count");
    auto* seed_opt =
        cmd_run->add_option("--seed", opt.seed, "override the sampling seed");
    cmd_run->add_flag("--exact", opt.exact, "compute the exact distribution");
    cmd_run->add_flag("--sampled", opt.sampled, "sample shots from the distribution");
    cmd_run->add_flag("--signs", opt.signs, "recover mean-component signs");
    cmd_run->add_flag("--lowered", opt.lowered,
                      "run the circuit lowered to 0/1-control gates");
    cmd_run->add_option("--format", opt.format, "table|csv|json|plotdata")
        ->check(CLI::IsMember({"table", "csv", "json", "plotdata"}));
    cmd_run->add_option("--out", opt.out_path, "write output to a file (atomic)");

    std::string batch_dir;
    CLI::App* cmd_batch =
        app.add_subcommand("batch", "run every .experiment file in a directory");
    cmd_batch->add_option("dir", batch_dir, "directory to scan")->required();

    CLI::App* cmd_version = app.add_subcommand("version", "print version information");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (cmd_run->parsed()) {
            opt.has_shots = shots_opt->count() > 0;
            opt.has_seed = seed_opt->count() > 0;
            return run_one(opt);
        }
        if (cmd_batch->parsed()) {
            return run_batch(batch_dir);
        }
        if (cmd_version->parsed()) {
            std::cout << "qmean " << kVersion << " (kernel backend: "
                      << qmean::kernels::backend_name(
                             qmean::kernels::active_backend())
                      << ")\n";
            return 0;
        }
    } catch (const qmean::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
