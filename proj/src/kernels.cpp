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

// Runtime backend selection. The best available backend is picked once at
// startup; set_backend() exists for tests and diagnostics.
// TODO: NEON variant for aarch64 builds.

#include "qmean/kernels.hpp"

#include <atomic>

#include "qmean/errors.hpp"

namespace qmean::kernels {

namespace {

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(_M_X64)) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Backend detect_backend() {
    return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend> g_backend{detect_backend()};

} // namespace

bool backend_available(Backend backend) {
    switch (backend) {
    case Backend::Scalar:
        return true;
    case Backend::Avx2:
        return cpu_has_avx2();
    }
    return false;
}

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
    if (!backend_available(backend)) {
        throw Error(std::string("kernel backend not available: ") +
                    backend_name(backend));
    }
    g_backend.store(backend, std::memory_order_relaxed);
}

const char* backend_name(Backend backend) {
    switch (backend) {
    case Backend::Scalar:
        return "scalar";
    case Backend::Avx2:
        return "avx2";
    }
    return "?";
}

void apply_2x2_real(const double mat[4], std::complex<double>* amps,
                    unsigned num_qubits, unsigned target,
                    std::uint64_t ctrl_mask, std::uint64_t ctrl_value) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active_backend() == Backend::Avx2) {
        detail::apply_2x2_real_avx2(mat, amps, num_qubits, target, ctrl_mask,
                                    ctrl_value);
        return;
    }
#endif
    detail::apply_2x2_real_scalar(mat, amps, num_qubits, target, ctrl_mask,
                                  ctrl_value);
}

void apply_2x2_complex(const std::complex<double> mat[4],
                       std::complex<double>* amps, unsigned num_qubits,
                       unsigned target, std::uint64_t ctrl_mask,
                       std::uint64_t ctrl_value) {
    detail::apply_2x2_complex_scalar(mat, amps, num_qubits, target, ctrl_mask,
                                     ctrl_value);
}

} // namespace qmean::kernels
