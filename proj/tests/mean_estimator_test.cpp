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
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "qmean/errors.hpp"
#include "qmean/mean_estimator.hpp"
#include "qmean/reference.hpp"
#include "qmean/statevector.hpp"

#include "published_sets.hpp"

using namespace qmean;

namespace {

VectorSet random_set(std::size_t count, std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> dist;
    std::vector<std::vector<double>> rows(count, std::vector<double>(dim));
    for (auto& row : rows) {
        double norm_sq = 0.0;
        do {
            norm_sq = 0.0;
            for (auto& x : row) {
                x = dist(rng);
                norm_sq += x * x;
            }
        } while (norm_sq < 1e-6);
    }
    return VectorSet::from_rows(rows);
}

VectorSet random_set_with_clear_signs(std::size_t count, std::size_t dim,
                                      std::mt19937_64& rng) {
    while (true) {
        const VectorSet set = random_set(count, dim, rng);
        const auto mean = reference::classical_mean(set);
        const bool ok = std::all_of(mean.begin(), mean.end(), [](double a) {
            return std::abs(a) >= 0.05;
        });
        if (ok) {
            return set;
        }
    }
}

} // namespace

TEST_CASE("circuit geometry follows the register layout") {
    const auto [c1, l1] = build_circuit(published::set1());
    CHECK(c1.num_qubits() == 7);
    CHECK(l1.n == 3);

    const auto [c2, l2] = build_circuit(published::set2());
    CHECK(c2.num_qubits() == 10);
    CHECK(l2.n == 4);
    CHECK(l2.m == 3);

    const auto [c3, l3] =
        build_circuit(VectorSet::from_rows({{1, 0}, {1, 0}}));
    CHECK(c3.num_qubits() == 5);

    // copy stage: for the 8x2 set, each copy X carries 3 open index controls
    // plus one closed data control
    std::size_t copy_gates = 0;
    for (const auto& op : c1.ops()) {
        if (op.kind != GateKind::X || op.control_arity() != 4) {
            continue;
        }
        ++copy_gates;
        std::size_t open_controls = 0;
        for (const auto& ctrl : op.controls) {
            open_controls += ctrl.polarity == Polarity::Open ? 1 : 0;
        }
        CHECK(open_controls == 3);
    }
    CHECK(copy_gates == 2);
}

TEST_CASE("exact distribution reproduces the published experiments") {
    const auto d1 = exact_distribution(published::set1());
    CHECK(std::abs(d1[0] - 0.36636) < 1e-4);
    CHECK(d1[1] < 1e-12);
    CHECK(std::abs(d1[2] - 0.33869) < 1e-4);
    CHECK(std::abs(d1[3] - 0.29495) < 1e-4);

    const auto d2 = exact_distribution(published::set2());
    CHECK(std::abs(d2[0] - 0.41700) < 5e-4);
    const double upper[] = {0.28350, 0.15312, 0.08472, 0.06166};
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(d2[4 + k] - upper[k]) < 5e-4);
    }
    for (std::size_t r = 1; r < 4; ++r) {
        CHECK(d2[r] < 1e-12);
    }

    // antisymmetric pair: the mean vanishes and all mass returns to zero
    const auto dz = exact_distribution(VectorSet::from_rows({{1, 0}, {-1, 0}}));
    CHECK(dz[0] == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t r = 1; r < dz.size(); ++r) {
        CHECK(dz[r] < 1e-12);
    }
}

TEST_CASE("closed-form property over random sets") {
    std::mt19937_64 rng(271828);
    const std::size_t counts[] = {2, 4, 8, 16};
    const std::size_t dims[] = {2, 4};
    for (int trial = 0; trial < 200; ++trial) {
        const VectorSet set =
            random_set(counts[trial % 4], dims[(trial / 4) % 2], rng);
        const auto dist = exact_distribution(set);
        const auto mean = reference::classical_mean(set);
        const std::size_t d = set.dimension();

        double total = 0.0;
        for (double p : dist) {
            total += p;
        }
        CHECK(std::abs(total - 1.0) < 1e-9);
        for (std::size_t k = 0; k < d; ++k) {
            CHECK(std::abs(dist[d + k] - mean[k] * mean[k]) < 1e-9);
        }
        for (std::size_t r = 1; r < d; ++r) {
            CHECK(dist[r] < 1e-12);
        }
    }
}

TEST_CASE("permuting components permutes the upper block") {
    std::mt19937_64 rng(55);
    const VectorSet set = random_set(4, 4, rng);
    const std::size_t perm[] = {2, 0, 3, 1};
    std::vector<std::vector<double>> permuted_rows;
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto row = set.row(i);
        std::vector<double> out(row.size());
        for (std::size_t k = 0; k < row.size(); ++k) {
            out[k] = row[perm[k]];
        }
        permuted_rows.push_back(std::move(out));
    }
    const auto base = exact_distribution(set);
    const auto permuted =
        exact_distribution(VectorSet::from_rows(permuted_rows));
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(permuted[4 + k] == doctest::Approx(base[4 + perm[k]]).epsilon(1e-12));
    }
    CHECK(permuted[0] == doctest::Approx(base[0]).epsilon(1e-12));
}

TEST_CASE("exact estimate matches the published mean") {
    const MeanEstimate est =
        estimate_mean(published::set1(), EstimateMode::exact());
    CHECK(std::abs(est.magnitudes[0] - published::kSet1Mean[0]) < 1e-4);
    CHECK(std::abs(est.magnitudes[1] - published::kSet1Mean[1]) < 1e-4);
    CHECK(est.estimated_mean == est.magnitudes);
    CHECK(!est.signs.has_value());
    CHECK(est.zero_outcome_probability ==
          doctest::Approx(0.36636).epsilon(1e-3));
}

TEST_CASE("exact estimates account for the full probability mass") {
    std::mt19937_64 rng(90210);
    for (int trial = 0; trial < 20; ++trial) {
        const VectorSet set = random_set(4, 4, rng);
        const MeanEstimate est = estimate_mean(set, EstimateMode::exact());
        double mass = est.zero_outcome_probability;
        for (double m : est.magnitudes) {
            mass += m * m;
        }
        // residual on outcomes 1..d-1 is below 1e-12, so the magnitudes and
        // the zero outcome carry everything
        CHECK(std::abs(mass - 1.0) < 1e-9);
    }
}

TEST_CASE("feeding published frequencies reproduces the quoted roots") {
    const std::vector<double> freqs(published::kSet1SampledFrequencies.begin(),
                                    published::kSet1SampledFrequencies.end());
    const MeanEstimate est =
        mean_from_distribution(freqs, EstimateMode::exact());
    CHECK(std::abs(est.magnitudes[0] - 0.5803) < 5e-5);
    CHECK(std::abs(est.magnitudes[1] - 0.5401) < 5e-5);
}

TEST_CASE("basis rows average to the uniform magnitudes") {
    const MeanEstimate est = estimate_mean(
        VectorSet::from_rows({{1, 0}, {0, 1}}), EstimateMode::exact());
    CHECK(est.magnitudes[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(est.magnitudes[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("sampled estimates converge on the exact ones") {
    const auto exact = exact_distribution(published::set1());
    const std::uint64_t shots = 8192;
    int seeds_in_band = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const MeanEstimate est = estimate_mean(
            published::set1(), EstimateMode::with_sampling(shots, seed));
        bool in_band = true;
        for (std::size_t k = 0; k < 2; ++k) {
            const double p = exact[2 + k];
            const double sigma = std::sqrt(p * (1.0 - p) / double(shots));
            const double freq = est.magnitudes[k] * est.magnitudes[k];
            in_band = in_band && std::abs(freq - p) <= 4.0 * sigma;
        }
        seeds_in_band += in_band ? 1 : 0;
    }
    CHECK(seeds_in_band >= 99);
}

TEST_CASE("sign recovery resolves the published sets") {
    CHECK(recover_signs(published::set1()) == std::vector<int>{1, 1});

    auto negated_rows = published::set1_rows();
    for (auto& row : negated_rows) {
        row[1] = -row[1];
    }
    CHECK(recover_signs(VectorSet::from_rows(negated_rows)) ==
          std::vector<int>{1, -1});

    CHECK(recover_signs(VectorSet::from_rows({{1, 0}, {-1, 0}})) ==
          std::vector<int>{0, 0});
}

TEST_CASE("sign recovery agrees with the classical signs on clear sets") {
    std::mt19937_64 rng(424242);
    const std::size_t counts[] = {2, 4, 8};
    const std::size_t dims[] = {2, 4};
    for (int trial = 0; trial < 100; ++trial) {
        const VectorSet set = random_set_with_clear_signs(
            counts[trial % 3], dims[(trial / 3) % 2], rng);
        const auto mean = reference::classical_mean(set);
        const auto signs = recover_signs(set, 0.02);
        for (std::size_t k = 0; k < mean.size(); ++k) {
            CHECK(signs[k] == (mean[k] > 0 ? 1 : -1));
        }
    }
}

TEST_CASE("estimate_mean attaches signs on request") {
    auto negated_rows = published::set1_rows();
    for (auto& row : negated_rows) {
        row[1] = -row[1];
    }
    const MeanEstimate est = estimate_mean(VectorSet::from_rows(negated_rows),
                                           EstimateMode::exact(), true);
    REQUIRE(est.signs.has_value());
    CHECK(*est.signs == std::vector<int>{1, -1});
    CHECK(est.estimated_mean[0] == doctest::Approx(est.magnitudes[0]));
    CHECK(est.estimated_mean[1] == doctest::Approx(-est.magnitudes[1]));
}

TEST_CASE("probe scale bounds are enforced") {
    CHECK_THROWS_AS(recover_signs(published::set1(), 0.0), SizeError);
    CHECK_THROWS_AS(recover_signs(published::set1(), 0.3), SizeError);
}
