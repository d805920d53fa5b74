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

// AVX2 variant of the real 2x2 kernel. This translation unit is compiled
// with -mavx2 and nothing else; mul/add intrinsics are used instead of FMA
// so every lane performs the same IEEE operations as the scalar reference
// and results stay bit-identical across backends.

#if defined(__x86_64__) || defined(_M_X64)

#include "qmean/kernels.hpp"

#include <array>
#include <bit>
#include <immintrin.h>

namespace qmean::kernels::detail {

namespace {

inline unsigned collect_fixed(std::uint64_t fixed,
                              std::array<unsigned, 64>& pos) {
    unsigned n = 0;
    while (fixed != 0) {
        pos[n++] = unsigned(std::countr_zero(fixed));
        fixed &= fixed - 1;
    }
    return n;
}

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

void apply_2x2_real_avx2(const double mat[4], std::complex<double>* amps,
                         unsigned num_qubits, unsigned target,
                         std::uint64_t ctrl_mask, std::uint64_t ctrl_value) {
    const std::uint64_t tbit = std::uint64_t{1} << target;
    const std::uint64_t fixed = ctrl_mask | tbit;

    // Consecutive pair indices map to consecutive basis indices as long as
    // the low `run_bits` positions are free; below one pair per run the
    // scalar path is the whole story.
    const unsigned run_bits = unsigned(std::countr_zero(fixed));
    if (run_bits == 0) {
        apply_2x2_real_scalar(mat, amps, num_qubits, target, ctrl_mask,
                              ctrl_value);
        return;
    }

    std::array<unsigned, 64> pos;
    const unsigned nfixed = collect_fixed(fixed, pos);
    const std::uint64_t npairs = (std::uint64_t{1} << num_qubits) >> nfixed;
    const std::uint64_t run = std::uint64_t{1} << run_bits;

    const __m256d m00 = _mm256_set1_pd(mat[0]);
    const __m256d m01 = _mm256_set1_pd(mat[1]);
    const __m256d m10 = _mm256_set1_pd(mat[2]);
    const __m256d m11 = _mm256_set1_pd(mat[3]);

    for (std::uint64_t j = 0; j < npairs; j += run) {
        const std::uint64_t base = expand(j, pos, nfixed) | ctrl_value;
        double* p0 = reinterpret_cast<double*>(amps + base);
        double* p1 = reinterpret_cast<double*>(amps + (base | tbit));
        // run >= 2 pairs, i.e. multiples of 4 doubles
        for (std::uint64_t r = 0; r < 2 * run; r += 4) {
            const __m256d v0 = _mm256_loadu_pd(p0 + r);
            const __m256d v1 = _mm256_loadu_pd(p1 + r);
            const __m256d r0 =
                _mm256_add_pd(_mm256_mul_pd(m00, v0), _mm256_mul_pd(m01, v1));
            const __m256d r1 =
                _mm256_add_pd(_mm256_mul_pd(m10, v0), _mm256_mul_pd(m11, v1));
            _mm256_storeu_pd(p0 + r, r0);
            _mm256_storeu_pd(p1 + r, r1);
        }
    }
}

} // namespace qmean::kernels::detail

#endif // x86-64
