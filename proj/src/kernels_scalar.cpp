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

// Portable reference kernels. The SIMD variants must stay bit-identical to
// these loops: per amplitude component the operation is exactly
// m0*x + m1*y as two multiplies and one add.

#include "qmean/kernels.hpp"

#include <array>
#include <bit>

namespace qmean::kernels::detail {

namespace {

// Positions of set bits in `fixed`, ascending.
inline unsigned collect_fixed(std::uint64_t fixed,
                              std::array<unsigned, 64>& pos) {
    unsigned n = 0;
    while (fixed != 0) {
        pos[n++] = unsigned(std::countr_zero(fixed));
        fixed &= fixed - 1;
    }
    return n;
}

// Spreads the compact pair index over the free bit positions: inserts a
// zero bit at each fixed position, ascending.
inline std::uint64_t expand(std::uint64_t j, const std::array<unsigned, 64>& pos,
                            unsigned nfixed) {
    std::uint64_t b = j;
    for (unsigned k = 0; k < nfixed; ++k) {
        const std::uint64_t low = b & ((std::uint64_t{1} << pos[k]) - 1);
        b = ((b >> pos[k]) << (pos[k] + 1)) | low;
    }
    return b;
}

} // namespace

void apply_2x2_real_scalar(const double mat[4], std::complex<double>* amps,
                           unsigned num_qubits, unsigned target,
                           std::uint64_t ctrl_mask, std::uint64_t ctrl_value) {
    const std::uint64_t tbit = std::uint64_t{1} << target;
    std::array<unsigned, 64> pos;
    const unsigned nfixed = collect_fixed(ctrl_mask | tbit, pos);
    const std::uint64_t npairs = (std::uint64_t{1} << num_qubits) >> nfixed;
    const double m00 = mat[0], m01 = mat[1], m10 = mat[2], m11 = mat[3];

    for (std::uint64_t j = 0; j < npairs; ++j) {
        const std::uint64_t b0 = expand(j, pos, nfixed) | ctrl_value;
        const std::uint64_t b1 = b0 | tbit;
        const double re0 = amps[b0].real(), im0 = amps[b0].imag();
        const double re1 = amps[b1].real(), im1 = amps[b1].imag();
        amps[b0] = {m00 * re0 + m01 * re1, m00 * im0 + m01 * im1};
        amps[b1] = {m10 * re0 + m11 * re1, m10 * im0 + m11 * im1};
    }
}

void apply_2x2_complex_scalar(const std::complex<double> mat[4],
                              std::complex<double>* amps, unsigned num_qubits,
                              unsigned target, std::uint64_t ctrl_mask,
                              std::uint64_t ctrl_value) {
    const std::uint64_t tbit = std::uint64_t{1} << target;
    std::array<unsigned, 64> pos;
    const unsigned nfixed = collect_fixed(ctrl_mask | tbit, pos);
    const std::uint64_t npairs = (std::uint64_t{1} << num_qubits) >> nfixed;

    for (std::uint64_t j = 0; j < npairs; ++j) {
        const std::uint64_t b0 = expand(j, pos, nfixed) | ctrl_value;
        const std::uint64_t b1 = b0 | tbit;
        const std::complex<double> a0 = amps[b0];
        const std::complex<double> a1 = amps[b1];
        amps[b0] = mat[0] * a0 + mat[1] * a1;
        amps[b1] = mat[2] * a0 + mat[3] * a1;
    }
}

} // namespace qmean::kernels::detail
