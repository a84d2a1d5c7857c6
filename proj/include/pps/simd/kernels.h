// Copyright 2026 The pps-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PPS_SIMD_KERNELS_H
#define PPS_SIMD_KERNELS_H

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace pps::simd {

using cplx = std::complex<double>;

/// Instruction-set flavour a kernel table was compiled for.
enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend backend);

/// Function table for the dense complex inner loops.
///
/// Every backend computes the same quantities; only the summation order and
/// the use of fused multiply-add differ, so results agree to a few ulps of the
/// accumulated magnitude.
struct KernelTable {
    Backend backend;

    /// sum_k a[k] * conj(b[k]).
    cplx (*dot_conj)(const cplx *a, const cplx *b, size_t len);

    /// c = a * adjoint(b) for row-major dim x dim matrices. c must not alias.
    void (*matmul_adjoint)(const cplx *a, const cplx *b, cplx *c, size_t dim);

    /// y[k] += alpha * x[k].
    void (*axpy)(cplx alpha, const cplx *x, cplx *y, size_t len);
};

const KernelTable &scalar_kernels();

/// AVX2+FMA table, or nullptr when it was not compiled in or the CPU lacks it.
const KernelTable *avx2_kernels();

/// Table chosen at first use: the widest backend the running CPU supports.
const KernelTable &active_kernels();

/// Overrides the active backend. Returns false (and leaves the selection
/// alone) when the requested backend is unavailable.
bool force_backend(Backend backend);

/// Restores automatic selection.
void reset_backend();

// Span conveniences routed through the active table.
cplx dot_conj(std::span<const cplx> a, std::span<const cplx> b);
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);

}  // namespace pps::simd

#endif
