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

#include "pps/simd/kernels.h"

namespace pps::simd {
namespace {

cplx dot_conj_scalar(const cplx *a, const cplx *b, size_t len) {
    double re = 0;
    double im = 0;
    for (size_t k = 0; k < len; k++) {
        double ar = a[k].real(), ai = a[k].imag();
        double br = b[k].real(), bi = b[k].imag();
        re += ar * br + ai * bi;
        im += ai * br - ar * bi;
    }
    return {re, im};
}

void matmul_adjoint_scalar(const cplx *a, const cplx *b, cplx *c, size_t dim) {
    for (size_t i = 0; i < dim; i++) {
        const cplx *row_a = a + i * dim;
        for (size_t j = 0; j < dim; j++) {
            c[i * dim + j] = dot_conj_scalar(row_a, b + j * dim, dim);
        }
    }
}

void axpy_scalar(cplx alpha, const cplx *x, cplx *y, size_t len) {
    for (size_t k = 0; k < len; k++) {
        y[k] += alpha * x[k];
    }
}

}  // namespace

const KernelTable &scalar_kernels() {
    static const KernelTable table{Backend::Scalar, &dot_conj_scalar, &matmul_adjoint_scalar, &axpy_scalar};
    return table;
}

}  // namespace pps::simd
