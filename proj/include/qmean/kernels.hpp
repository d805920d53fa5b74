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

#include <complex>
#include <cstdint>

namespace qmean::kernels {

/// Amplitude-update backends. Scalar is the portable reference; Avx2 is
/// selected at runtime on x86-64 CPUs that support it. Both backends perform
/// the same IEEE multiply/add sequence per amplitude (the AVX2 kernels use
/// separate mul/add, never FMA), so results are bit-identical and every
/// downstream probability, estimate and histogram is backend-independent.
enum class Backend { Scalar, Avx2 };

bool backend_available(Backend backend);
Backend active_backend();

/// Forces a backend; throws qmean::Error if it is not available on this CPU.
void set_backend(Backend backend);

const char* backend_name(Backend backend);

/// Applies a real 2x2 matrix (row-major [m00 m01 m10 m11]) to every
/// amplitude pair (b, b | 1<<target) whose bits satisfy
/// (b & ctrl_mask) == ctrl_value. Real and imaginary parts transform
/// identically. Dispatches to the active backend.
void apply_2x2_real(const double mat[4], std::complex<double>* amps,
                    unsigned num_qubits, unsigned target,
                    std::uint64_t ctrl_mask, std::uint64_t ctrl_value);

/// Complex 2x2 variant for XPow gates. These only occur in lowered circuits,
/// which are equivalence checks rather than hot paths, so there is a scalar
/// implementation only.
void apply_2x2_complex(const std::complex<double> mat[4],
                       std::complex<double>* amps, unsigned num_qubits,
                       unsigned target, std::uint64_t ctrl_mask,
                       std::uint64_t ctrl_value);

namespace detail {

void apply_2x2_real_scalar(const double mat[4], std::complex<double>* amps,
                           unsigned num_qubits, unsigned target,
                           std::uint64_t ctrl_mask, std::uint64_t ctrl_value);

void apply_2x2_complex_scalar(const std::complex<double> mat[4],
                              std::complex<double>* amps, unsigned num_qubits,
                              unsigned target, std::uint64_t ctrl_mask,
                              std::uint64_t ctrl_value);

#if defined(__x86_64__) || defined(_M_X64)
void apply_2x2_real_avx2(const double mat[4], std::complex<double>* amps,
                         unsigned num_qubits, unsigned target,
                         std::uint64_t ctrl_mask, std::uint64_t ctrl_value);
#endif

} // namespace detail

} // namespace qmean::kernels
