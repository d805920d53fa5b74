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
#include "qmean/encoder.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qmean/errors.hpp"

namespace qmean {

namespace {

bool is_pow2(std::size_t v) { return v >= 1 && std::has_single_bit(v); }

std::size_t log2_exact(std::size_t v) {
    return std::size_t(std::countr_zero(v));
}

double segment_norm(const double* data, std::size_t len) {
    double sq = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        sq += data[i] * data[i];
    }
    return std::sqrt(sq);
}

} // namespace

VectorSet VectorSet::from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t count = rows.size();
    if (!is_pow2(count) || count < 2) {
        throw LayoutError("vector count must be a power of two, at least 2");
    }
    const std::size_t dim = rows.front().size();
    if (!is_pow2(dim) || dim < 2) {
        throw LayoutError("vector dimension must be a power of two, at least 2");
    }
    std::vector<double> data(count * dim);
    for (std::size_t i = 0; i < count; ++i) {
        if (rows[i].size() != dim) {
            throw LayoutError("row " + std::to_string(i) +
                              " has inconsistent dimension");
        }
        const double norm = segment_norm(rows[i].data(), dim);
        if (norm == 0.0 || !std::isfinite(norm)) {
            throw NormalizationError("row " + std::to_string(i) +
                                     " cannot be normalized");
        }
        for (std::size_t k = 0; k < dim; ++k) {
            data[i * dim + k] = rows[i][k] / norm;
        }
    }
    return VectorSet(count, dim, std::move(data));
}

VectorSet VectorSet::with_row(std::size_t i, std::span<const double> row) const {
    if (i >= count_ || row.size() != dim_) {
        throw LayoutError("row replacement out of range");
    }
    const double norm = segment_norm(row.data(), dim_);
    if (norm == 0.0 || !std::isfinite(norm)) {
        throw NormalizationError("replacement row cannot be normalized");
    }
    VectorSet copy = *this;
    for (std::size_t k = 0; k < dim_; ++k) {
        copy.data_[i * dim_ + k] = row[k] / norm;
    }
    return copy;
}

AngleTree AngleTree::from_level_order(std::span<const double> angles) {
    const std::size_t dim = angles.size() + 1;
    if (!is_pow2(dim) || dim < 2) {
        throw LayoutError("angle list length must be d - 1 for a power-of-two d");
    }
    AngleTree tree;
    std::size_t offset = 0;
    for (std::size_t width = 1; width < dim; width *= 2) {
        tree.levels.emplace_back(angles.begin() + offset,
                                 angles.begin() + offset + width);
        offset += width;
    }
    return tree;
}

void AngleTree::validate() const {
    for (std::size_t l = 0; l < levels.size(); ++l) {
        if (levels[l].size() != (std::size_t{1} << l)) {
            throw LayoutError("angle tree level " + std::to_string(l) +
                              " has wrong width");
        }
        for (double a : levels[l]) {
            if (!std::isfinite(a)) {
                throw LayoutError("angle tree contains a non-finite angle");
            }
        }
    }
    if (levels.empty()) {
        throw LayoutError("angle tree is empty");
    }
}

AngleTree angles_from_vector(std::span<const double> v) {
    const std::size_t dim = v.size();
    if (!is_pow2(dim) || dim < 2) {
        throw LayoutError("vector length must be a power of two, at least 2");
    }
    const double norm = segment_norm(v.data(), dim);
    if (std::abs(norm - 1.0) > 1e-9) {
        throw NormalizationError("input vector is not unit norm");
    }

    const std::size_t depth = log2_exact(dim);
    AngleTree tree;
    tree.levels.resize(depth);
    for (std::size_t l = 0; l < depth; ++l) {
        const std::size_t nodes = std::size_t{1} << l;
        const std::size_t seg = dim >> l;
        tree.levels[l].resize(nodes);
        for (std::size_t t = 0; t < nodes; ++t) {
            const double* sub = v.data() + t * seg;
            double angle = 0.0;
            if (l + 1 == depth) {
                const double a = sub[0], b = sub[1];
                if (a != 0.0 || b != 0.0) {
                    angle = 2.0 * std::atan2(b, a);
                }
            } else {
                const double left = segment_norm(sub, seg / 2);
                const double right = segment_norm(sub + seg / 2, seg / 2);
                if (left != 0.0 || right != 0.0) {
                    angle = 2.0 * std::atan2(right, left);
                }
            }
            tree.levels[l][t] = angle;
        }
    }
    return tree;
}

std::vector<double> vector_from_angles(const AngleTree& tree) {
    tree.validate();
    std::vector<double> amps{1.0};
    for (const auto& level : tree.levels) {
        std::vector<double> next(amps.size() * 2);
        for (std::size_t t = 0; t < amps.size(); ++t) {
            next[2 * t] = amps[t] * std::cos(level[t] / 2.0);
            next[2 * t + 1] = amps[t] * std::sin(level[t] / 2.0);
        }
        amps = std::move(next);
    }
    return amps;
}

RegisterLayout RegisterLayout::for_dims(std::size_t count, std::size_t dim) {
    if (!is_pow2(count) || count < 2 || !is_pow2(dim) || dim < 2) {
        throw LayoutError("layout requires power-of-two N >= 2 and d >= 2");
    }
    return {log2_exact(count), log2_exact(dim) + 1};
}

std::vector<std::size_t> RegisterLayout::mean_positions() const {
    std::vector<std::size_t> positions(m);
    for (std::size_t j = 0; j < m; ++j) {
        positions[j] = mean_position(j);
    }
    return positions;
}

std::vector<std::size_t> RegisterLayout::index_positions() const {
    std::vector<std::size_t> positions(n);
    for (std::size_t j = 0; j < n; ++j) {
        positions[j] = index_position(j);
    }
    return positions;
}

std::vector<std::size_t> RegisterLayout::data_value_positions_msb_first() const {
    std::vector<std::size_t> positions(m - 1);
    for (std::size_t j = 0; j < m - 1; ++j) {
        positions[j] = data_position(m - 2 - j);
    }
    return positions;
}

std::vector<GateOp> stateprep_ops(const AngleTree& tree,
                                  std::span<const std::size_t> qubits,
                                  std::span<const Control> extra_controls) {
    tree.validate();
    if (tree.depth() != qubits.size()) {
        throw LayoutError("angle tree depth does not match qubit count");
    }
    std::vector<GateOp> ops;
    ops.reserve(tree.dimension() - 1);
    for (std::size_t l = 0; l < tree.depth(); ++l) {
        for (std::size_t t = 0; t < tree.levels[l].size(); ++t) {
            std::vector<Control> controls(extra_controls.begin(),
                                          extra_controls.end());
            for (std::size_t j = 0; j < l; ++j) {
                const bool bit = ((t >> (l - 1 - j)) & 1u) != 0;
                controls.push_back(
                    {qubits[j], bit ? Polarity::Closed : Polarity::Open});
            }
            ops.push_back(
                GateOp::ry(qubits[l], tree.levels[l][t], std::move(controls)));
        }
    }
    return ops;
}

std::vector<GateOp> qram_ops(const VectorSet& set, const RegisterLayout& layout) {
    if (layout != RegisterLayout::for_set(set)) {
        throw LayoutError("register layout does not match the vector set");
    }
    std::vector<GateOp> ops;
    ops.push_back(GateOp::x(layout.dm_position()));
    const auto data_qubits = layout.data_value_positions_msb_first();
    for (std::size_t i = 0; i < set.size(); ++i) {
        std::vector<Control> address(layout.n);
        for (std::size_t j = 0; j < layout.n; ++j) {
            const bool bit = ((i >> j) & 1u) != 0;
            address[j] = {layout.index_position(j),
                          bit ? Polarity::Closed : Polarity::Open};
        }
        auto prep = stateprep_ops(angles_from_vector(set.row(i)), data_qubits,
                                  address);
        ops.insert(ops.end(), std::make_move_iterator(prep.begin()),
                   std::make_move_iterator(prep.end()));
    }
    return ops;
}

} // namespace qmean
