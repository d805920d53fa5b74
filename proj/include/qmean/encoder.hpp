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
#include <span>
#include <vector>

#include "qmean/gate.hpp"

namespace qmean {

/// N real d-dimensional unit vectors. N and d must be powers of two
/// (N >= 2, d >= 2); rows are normalized on ingestion and zero rows are
/// rejected. Complex inputs are out of scope: the RY-only encoding spans
/// real vectors.
class VectorSet {
  public:
    static VectorSet from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const { return count_; }      // N
    std::size_t dimension() const { return dim_; }   // d
    std::span<const double> row(std::size_t i) const& {
        return {data_.data() + i * dim_, dim_};
    }
    std::span<const double> row(std::size_t i) const&& = delete;

    /// Copy with row i replaced (the replacement is normalized too).
    VectorSet with_row(std::size_t i, std::span<const double> row) const;

  private:
    VectorSet(std::size_t count, std::size_t dim, std::vector<double> data)
        : count_(count), dim_(dim), data_(std::move(data)) {}

    std::size_t count_;
    std::size_t dim_;
    std::vector<double> data_;
};

/// Rotation angles of the binary state-preparation tree for one vector:
/// level l holds 2^l angles, one per node, d - 1 angles in total.
/// Internal-node angles lie in [0, pi] (they split nonnegative subtree
/// norms); leaf angles are 2*atan2(b, a) over the signed amplitude pair and
/// live in (-2*pi, 2*pi]. Leaf angles are deliberately not reduced mod 2*pi:
/// RY is 4*pi-periodic, and a 2*pi shift flips the sign of the prepared
/// branch relative to the rest of the superposition.
struct AngleTree {
    std::vector<std::vector<double>> levels;

    std::size_t depth() const { return levels.size(); }       // log2(d)
    std::size_t dimension() const { return std::size_t{1} << depth(); }

    /// Builds a tree from d-1 angles in root-first level order.
    static AngleTree from_level_order(std::span<const double> angles);

    void validate() const;
};

/// Decomposes a unit vector (|v| = 1 within 1e-9) into its rotation tree.
/// Zero-norm pairs and subtrees get angle 0.
AngleTree angles_from_vector(std::span<const double> v);

/// Classical evaluation of the tree: the unit vector the rotation sequence
/// prepares. Inverse of angles_from_vector.
std::vector<double> vector_from_angles(const AngleTree& tree);

/// Qubit split for the estimation circuit: n = log2 N index qubits,
/// m = log2 d + 1 data qubits whose top qubit (d_m) shifts encoded values
/// into the basis window [d, 2d-1], and m mirrored mean qubits.
///
/// Positions: mean register at [0, m), data register at [m, 2m) with d_m at
/// 2m - 1, index register at [2m, 2m + n). Register value bit j sits at
/// position (register base + j).
struct RegisterLayout {
    std::size_t n = 0;
    std::size_t m = 0;

    static RegisterLayout for_dims(std::size_t count, std::size_t dim);
    static RegisterLayout for_set(const VectorSet& set) {
        return for_dims(set.size(), set.dimension());
    }

    std::size_t num_qubits() const { return n + 2 * m; }
    std::size_t data_dim() const { return std::size_t{1} << (m - 1); } // d

    std::size_t mean_position(std::size_t bit) const { return bit; }
    std::size_t data_position(std::size_t bit) const { return m + bit; }
    std::size_t index_position(std::size_t bit) const { return 2 * m + bit; }
    std::size_t dm_position() const { return 2 * m - 1; }

    std::vector<std::size_t> mean_positions() const;
    std::vector<std::size_t> index_positions() const;

    /// Data-value qubits (everything below d_m), most significant first:
    /// the order the state-preparation tree rotates them in.
    std::vector<std::size_t> data_value_positions_msb_first() const;

    std::uint64_t basis_index(std::uint64_t index_value,
                              std::uint64_t data_value,
                              std::uint64_t mean_value) const {
        return (index_value << (2 * m)) | (data_value << m) | mean_value;
    }

    bool operator==(const RegisterLayout&) const = default;
};

/// Gate sequence preparing the tree's vector on `qubits` (most significant
/// first). The level-0 angle becomes an RY on qubits[0]; the node t at level
/// l becomes an RY on qubits[l] controlled by the l previously rotated
/// qubits with polarities spelling t. Every op additionally carries
/// `extra_controls`.
std::vector<GateOp> stateprep_ops(const AngleTree& tree,
                                  std::span<const std::size_t> qubits,
                                  std::span<const Control> extra_controls);

/// The data-loading block: one unconditional X on d_m, then per index value
/// i the stateprep of row i controlled on the index register spelling i.
/// After Hadamards on the index register this yields
/// (1/sqrt(N)) sum_i |i>|d + v_i>|0>.
std::vector<GateOp> qram_ops(const VectorSet& set, const RegisterLayout& layout);

} // namespace qmean
