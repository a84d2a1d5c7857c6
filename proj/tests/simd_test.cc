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

#include <gtest/gtest.h>

#include <vector>

#include "pps/qmath.h"
#include "pps/rng.h"
#include "pps/simd/kernels.h"
#include "test_support.h"

namespace pps {
namespace {

using simd::cplx;

std::vector<cplx> random_vector(size_t len, Rng &rng) {
    std::vector<cplx> v(len);
    for (auto &x : v) {
        x = {rng.normal(), rng.normal()};
    }
    return v;
}

// Every available backend, scalar first.
std::vector<const simd::KernelTable *> backends() {
    std::vector<const simd::KernelTable *> out{&simd::scalar_kernels()};
    if (const auto *avx = simd::avx2_kernels()) {
        out.push_back(avx);
    }
    return out;
}

TEST(Simd, ActiveBackendIsKnown) {
    auto name = simd::backend_name(simd::active_kernels().backend);
    EXPECT_TRUE(name == "scalar" || name == "avx2") << name;
}

TEST(Simd, DotConjAgreesAcrossBackendsForOddLengths) {
    Rng rng(101);
    for (size_t len : {0, 1, 2, 3, 5, 8, 17, 64, 255}) {
        auto a = random_vector(len, rng);
        auto b = random_vector(len, rng);
        cplx expected = 0;
        for (size_t i = 0; i < len; i++) {
            expected += a[i] * std::conj(b[i]);
        }
        for (const auto *k : backends()) {
            cplx got = k->dot_conj(a.data(), b.data(), len);
            EXPECT_NEAR(std::abs(got - expected), 0.0, 1e-12 * (1 + len)) << simd::backend_name(k->backend) << " " << len;
        }
    }
}

TEST(Simd, AxpyAgreesAcrossBackends) {
    Rng rng(202);
    for (size_t len : {1, 3, 4, 7, 33}) {
        auto x = random_vector(len, rng);
        auto y0 = random_vector(len, rng);
        cplx alpha{0.3, -1.7};
        for (const auto *k : backends()) {
            auto y = y0;
            k->axpy(alpha, x.data(), y.data(), len);
            for (size_t i = 0; i < len; i++) {
                EXPECT_NEAR(std::abs(y[i] - (y0[i] + alpha * x[i])), 0.0, 1e-14);
            }
        }
    }
}

TEST(Simd, MatmulAdjointMatchesNaiveProduct) {
    Rng rng(303);
    for (size_t dim : {1, 2, 3, 8, 16}) {
        ComplexMatrix a(dim), b(dim);
        for (size_t i = 0; i < dim * dim; i++) {
            a.entries()[i] = {rng.normal(), rng.normal()};
            b.entries()[i] = {rng.normal(), rng.normal()};
        }
        ComplexMatrix expected = testing::naive_matmul(a, b.adjoint());
        for (const auto *k : backends()) {
            ComplexMatrix c(dim);
            k->matmul_adjoint(a.entries().data(), b.entries().data(), c.entries().data(), dim);
            EXPECT_LT(c.max_abs_diff(expected), 1e-12) << simd::backend_name(k->backend) << " dim " << dim;
        }
    }
}

TEST(Simd, ForcedBackendsGiveSameHighLevelResults) {
    Rng rng(404);
    Unitary u = random_unitary(16, rng);
    PureState psi = random_pure_state(4, rng);
    ComplexMatrix rho = psi.density_matrix();

    ASSERT_TRUE(simd::force_backend(simd::Backend::Scalar));
    ComplexMatrix scalar_result = apply_unitary(rho, u);
    bool have_avx = simd::force_backend(simd::Backend::Avx2);
    ComplexMatrix avx_result = apply_unitary(rho, u);
    simd::reset_backend();
    if (!have_avx) {
        GTEST_SKIP() << "avx2 kernels unavailable";
    }
    EXPECT_LT(avx_result.max_abs_diff(scalar_result), 1e-13);
}

}  // namespace
}  // namespace pps
