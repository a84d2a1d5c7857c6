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

#include <atomic>
#include <cassert>

#include "pps/simd/kernels.h"

namespace pps::simd {

#if defined(PPS_HAVE_AVX2_KERNELS)
namespace detail {
const KernelTable &avx2_kernel_table();
}
#endif

namespace {

const KernelTable *detect() {
    if (const KernelTable *avx2 = avx2_kernels()) {
        return avx2;
    }
    return &scalar_kernels();
}

std::atomic<const KernelTable *> &selected() {
    static std::atomic<const KernelTable *> table{detect()};
    return table;
}

}  // namespace

std::string_view backend_name(Backend backend) {
    switch (backend) {
        case Backend::Scalar:
            return "scalar";
        case Backend::Avx2:
            return "avx2";
    }
    return "unknown";
}

const KernelTable *avx2_kernels() {
#if defined(PPS_HAVE_AVX2_KERNELS)
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    if (supported) {
        return &detail::avx2_kernel_table();
    }
#endif
    return nullptr;
}

const KernelTable &active_kernels() {
    return *selected().load(std::memory_order_acquire);
}

bool force_backend(Backend backend) {
    const KernelTable *table = nullptr;
    switch (backend) {
        case Backend::Scalar:
            table = &scalar_kernels();
            break;
        case Backend::Avx2:
            table = avx2_kernels();
            break;
    }
    if (table == nullptr) {
        return false;
    }
    selected().store(table, std::memory_order_release);
    return true;
}

void reset_backend() {
    selected().store(detect(), std::memory_order_release);
}

cplx dot_conj(std::span<const cplx> a, std::span<const cplx> b) {
    assert(a.size() == b.size());
    return active_kernels().dot_conj(a.data(), b.data(), a.size());
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    assert(x.size() == y.size());
    active_kernels().axpy(alpha, x.data(), y.data(), x.size());
}

}  // namespace pps::simd
