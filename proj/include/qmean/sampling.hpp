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
#include <span>
#include <vector>

namespace qmean {

/// SplitMix64: the fixed, platform-independent generator behind all
/// measurement sampling. State advances by the 64-bit golden-ratio constant;
/// each output is a finalizer of the state (Steele, Lea & Flood's
/// "Fast splittable pseudorandom number generators" mix). Identical seeds
/// produce identical streams on every platform.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double next_double() { return double(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

/// Counts per outcome; counts.size() == probabilities.size().
using Histogram = std::vector<std::uint64_t>;

/// Draws `shots` outcomes by per-shot inverse CDF over the cumulative
/// distribution in outcome order, one SplitMix64 double per shot.
/// Deterministic: equal (probabilities, shots, seed) gives byte-identical
/// histograms on every platform.
///
/// Probabilities must sum to 1 within 1e-9; entries below -1e-12 are a
/// DistributionError, tiny negative rounding noise is clamped to zero.
Histogram sample(std::span<const double> probabilities, std::uint64_t shots,
                 std::uint64_t seed);

} // namespace qmean
