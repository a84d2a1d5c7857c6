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

// Built with -mavx2 -mfma. Nothing in here may run before dispatch has
// confirmed CPU support.

#include <immintrin.h>

#include "pps/simd/kernels.h"

namespace pps::simd {
namespace detail {
const KernelTable &avx2_kernel_table();
}

namespace {

// Two interleaved complex doubles per 256-bit register: [r0 i0 r1 i1].
//   prod   accumulates (ar*br, ai*bi)  -> sum of all lanes is Re(a conj b)
//   cross  accumulates (ar*bi, ai*br)  -> odd lanes minus even lanes is Im(a conj b)
inline cplx reduce(__m256d prod, __m256d cross) {
    alignas(32) double p[4];
    alignas(32) double x[4];
    _mm256_store_pd(p, prod);
    _mm256_store_pd(x, cross);
    return {(p[0] + p[2]) + (p[1] + p[3]), (x[1] + x[3]) - (x[0] + x[2])};
}

cplx dot_conj_avx2(const cplx *a, const cplx *b, size_t len) {
    const double *pa = reinterpret_cast<const double *>(a);
    const double *pb = reinterpret_cast<const double *>(b);
    __m256d prod0 = _mm256_setzero_pd();
    __m256d prod1 = _mm256_setzero_pd();
    __m256d cross0 = _mm256_setzero_pd();
    __m256d cross1 = _mm256_setzero_pd();
    size_t k = 0;
    for (; k + 4 <= len; k += 4) {
        __m256d va0 = _mm256_loadu_pd(pa + 2 * k);
        __m256d vb0 = _mm256_loadu_pd(pb + 2 * k);
        __m256d va1 = _mm256_loadu_pd(pa + 2 * k + 4);
        __m256d vb1 = _mm256_loadu_pd(pb + 2 * k + 4);
        prod0 = _mm256_fmadd_pd(va0, vb0, prod0);
        prod1 = _mm256_fmadd_pd(va1, vb1, prod1);
        cross0 = _mm256_fmadd_pd(va0, _mm256_permute_pd(vb0, 0b0101), cross0);
        cross1 = _mm256_fmadd_pd(va1, _mm256_permute_pd(vb1, 0b0101), cross1);
    }
    for (; k + 2 <= len; k += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * k);
        __m256d vb = _mm256_loadu_pd(pb + 2 * k);
        prod0 = _mm256_fmadd_pd(va, vb, prod0);
        cross0 = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), cross0);
    }
    cplx total = reduce(_mm256_add_pd(prod0, prod1), _mm256_add_pd(cross0, cross1));
    if (k < len) {
        double ar = a[k].real(), ai = a[k].imag();
        double br = b[k].real(), bi = b[k].imag();
        total += cplx(ar * br + ai * bi, ai * br - ar * bi);
    }
    return total;
}

void matmul_adjoint_avx2(const cplx *a, const cplx *b, cplx *c, size_t dim) {
    for (size_t i = 0; i < dim; i++) {
        const cplx *row_a = a + i * dim;
        for (size_t j = 0; j < dim; j++) {
            c[i * dim + j] = dot_conj_avx2(row_a, b + j * dim, dim);
        }
    }
}

void axpy_avx2(cplx alpha, const cplx *x, cplx *y, size_t len) {
    const double *px = reinterpret_cast<const double *>(x);
    double *py = reinterpret_cast<double *>(y);
    // alpha * x = (ar*xr - ai*xi, ar*xi + ai*xr)
    const __m256d re = _mm256_set1_pd(alpha.real());
    const __m256d im = _mm256_set1_pd(alpha.imag());
    size_t k = 0;
    for (; k + 2 <= len; k += 2) {
        __m256d vx = _mm256_loadu_pd(px + 2 * k);
        __m256d vy = _mm256_loadu_pd(py + 2 * k);
        __m256d swapped = _mm256_permute_pd(vx, 0b0101);
        vy = _mm256_fmadd_pd(re, vx, vy);
        vy = _mm256_addsub_pd(vy, _mm256_mul_pd(im, swapped));
        _mm256_storeu_pd(py + 2 * k, vy);
    }
    for (; k < len; k++) {
        y[k] += alpha * x[k];
    }
}

}  // namespace

namespace detail {
const KernelTable &avx2_kernel_table() {
    static const KernelTable table{Backend::Avx2, &dot_conj_avx2, &matmul_adjoint_avx2, &axpy_avx2};
    return table;
}
}  // namespace detail

}  // namespace pps::simd
