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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pps/qmath.h"
#include "pps/rng.h"
#include "test_support.h"

namespace pps {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

PureState psi_minus_state() {
    return PureState({0, kInvSqrt2, -kInvSqrt2, 0});
}

TEST(Tensor, BasisStatesConcatenateLabels) {
    PureState s = tensor(PureState::basis(1, 0), PureState::basis(1, 1));
    ASSERT_EQ(s.dim(), 4u);
    for (size_t i = 0; i < 4; i++) {
        EXPECT_EQ(s[i], Complex(i == 1 ? 1.0 : 0.0));
    }
}

TEST(Tensor, ProductAmplitudesFollowBilinearRule) {
    Complex alpha{0.6, 0}, beta{0, 0.8}, gamma{kInvSqrt2, 0}, delta{-0.5, 0.5};
    PureState s = tensor(PureState({alpha, beta}), PureState({gamma, delta}));
    EXPECT_LT(std::abs(s[0] - alpha * gamma), 1e-15);
    EXPECT_LT(std::abs(s[1] - alpha * delta), 1e-15);
    EXPECT_LT(std::abs(s[2] - beta * gamma), 1e-15);
    EXPECT_LT(std::abs(s[3] - beta * delta), 1e-15);
}

TEST(Tensor, HadamardPairSpreadsZeroZeroUniformly) {
    ComplexMatrix hh = tensor(gates::hadamard(), gates::hadamard());
    ComplexMatrix rho = apply_unitary(PureState::basis(2, 0).density_matrix(), hh);
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            EXPECT_NEAR(rho(i, j).real(), 0.25, 1e-15);
            EXPECT_NEAR(rho(i, j).imag(), 0.0, 1e-15);
        }
    }
    // Amplitudes are the first column of H⊗H.
    for (size_t i = 0; i < 4; i++) {
        EXPECT_NEAR(hh(i, 0).real(), 0.5, 1e-15);
    }
}

TEST(Tensor, IsAssociativeUpToRounding) {
    Rng rng(1);
    ComplexMatrix a = random_unitary(2, rng).matrix();
    ComplexMatrix b = random_unitary(4, rng).matrix();
    ComplexMatrix c = random_unitary(2, rng).matrix();
    EXPECT_LT(tensor(tensor(a, b), c).max_abs_diff(tensor(a, tensor(b, c))), 1e-15);
}

TEST(Tensor, RejectsNonPowerOfTwoDims) {
    EXPECT_THROW(tensor(ComplexMatrix(3), ComplexMatrix(2)), std::invalid_argument);
}

TEST(ApplyUnitary, IdentityLeavesStateAlone) {
    Rng rng(2);
    ComplexMatrix rho = random_pure_state(3, rng).density_matrix();
    EXPECT_LT(apply_unitary(rho, ComplexMatrix::identity(8)).max_abs_diff(rho), 1e-15);
}

TEST(ApplyUnitary, HadamardOnZeroGivesPlus) {
    ComplexMatrix rho = apply_unitary(PureState::basis(1, 0).density_matrix(), gates::hadamard());
    for (Complex v : rho.entries()) {
        EXPECT_NEAR(v.real(), 0.5, 1e-15);
        EXPECT_NEAR(v.imag(), 0.0, 1e-15);
    }
}

TEST(ApplyUnitary, MaximallyMixedIsInvariant) {
    Rng rng(3);
    ComplexMatrix mixed = ComplexMatrix::identity(8);
    mixed *= 1.0 / 8;
    for (int k = 0; k < 10; k++) {
        EXPECT_LT(apply_unitary(mixed, random_unitary(8, rng)).max_abs_diff(mixed), 1e-14);
    }
}

TEST(ApplyUnitary, RejectsNonUnitaryAndMismatchedDims) {
    ComplexMatrix rho = ComplexMatrix::identity(2);
    ComplexMatrix not_unitary{{1, 1}, {0, 1}};
    EXPECT_THROW(apply_unitary(rho, not_unitary), std::invalid_argument);
    EXPECT_THROW(apply_unitary(rho, ComplexMatrix::identity(4)), std::invalid_argument);
}

TEST(ApplyUnitary, PreservesTraceAndSpectrum) {
    Rng rng(4);
    for (int trial = 0; trial < 10; trial++) {
        ComplexMatrix rho = random_pure_state(3, rng).density_matrix();
        ComplexMatrix mixed = ComplexMatrix::identity(8);
        mixed *= 0.6 / 8;
        rho *= 0.4;
        rho += mixed;
        ComplexMatrix out = apply_unitary(rho, random_unitary(8, rng));
        EXPECT_NEAR(out.trace().real(), 1.0, 1e-12);
        EXPECT_TRUE(out.is_hermitian(1e-12));
        auto before = hermitian_eigenvalues(rho);
        auto after = hermitian_eigenvalues(out);
        for (size_t i = 0; i < before.size(); i++) {
            EXPECT_NEAR(before[i], after[i], 1e-9);
        }
    }
}

TEST(PartialTrace, ProductStateKeepsFactor) {
    ComplexMatrix zero = PureState::basis(1, 0).density_matrix();
    ComplexMatrix plus = apply_unitary(zero, gates::hadamard());
    EXPECT_LT(partial_trace(tensor(zero, plus), {0}, 2).max_abs_diff(zero), 1e-15);
    EXPECT_LT(partial_trace(tensor(zero, plus), {1}, 2).max_abs_diff(plus), 1e-15);
}

TEST(PartialTrace, SingletMarginalsAreMaximallyMixed) {
    ComplexMatrix rho = psi_minus_state().density_matrix();
    ComplexMatrix half = ComplexMatrix::identity(2);
    half *= 0.5;
    EXPECT_LT(partial_trace(rho, {0}, 2).max_abs_diff(half), 1e-15);
    EXPECT_LT(partial_trace(rho, {1}, 2).max_abs_diff(half), 1e-15);
}

TEST(PartialTrace, KeepingEverythingIsIdentity) {
    Rng rng(5);
    ComplexMatrix rho = random_pure_state(3, rng).density_matrix();
    EXPECT_EQ(partial_trace(rho, {0, 1, 2}, 3).max_abs_diff(rho), 0.0);
}

TEST(PartialTrace, RandomProductsReturnKeptFactor) {
    Rng rng(6);
    for (int trial = 0; trial < 5; trial++) {
        ComplexMatrix a = random_pure_state(2, rng).density_matrix();
        ComplexMatrix b = random_pure_state(1, rng).density_matrix();
        ComplexMatrix ab = tensor(a, b);
        ComplexMatrix reduced = partial_trace(ab, {0, 1}, 3);
        EXPECT_LT(reduced.max_abs_diff(a), 1e-12);
        EXPECT_NEAR(reduced.trace().real(), 1.0, 1e-12);
        EXPECT_TRUE(reduced.is_hermitian(1e-12));
        EXPECT_LT(partial_trace(ab, {2}, 3).max_abs_diff(b), 1e-12);
    }
}

TEST(PartialTrace, RejectsOutOfRangeQubit) {
    ComplexMatrix rho = ComplexMatrix::identity(4);
    EXPECT_THROW(partial_trace(rho, {2}, 2), std::out_of_range);
}

TEST(Eigenvalues, DiagonalIsSorted) {
    std::vector<double> d{3, 1, 2, 0};
    auto ev = hermitian_eigenvalues(ComplexMatrix::diagonal(std::span<const double>(d)));
    ASSERT_EQ(ev.size(), 4u);
    for (size_t i = 0; i < 4; i++) {
        EXPECT_NEAR(ev[i], static_cast<double>(i), 1e-15);
    }
}

TEST(Eigenvalues, RankOneProjector) {
    auto ev = hermitian_eigenvalues(psi_minus_state().density_matrix());
    std::vector<double> expected{0, 0, 0, 1};
    for (size_t i = 0; i < 4; i++) {
        EXPECT_NEAR(ev[i], expected[i], 1e-12);
    }
}

TEST(Eigenvalues, PartialTransposeOfSinglet) {
    ComplexMatrix pt = partial_transpose(psi_minus_state().density_matrix(), std::vector<unsigned>{1}, 2);
    auto ev = hermitian_eigenvalues(pt);
    std::vector<double> expected{-0.5, 0.5, 0.5, 0.5};
    for (size_t i = 0; i < 4; i++) {
        EXPECT_NEAR(ev[i], expected[i], 1e-12);
    }
}

TEST(Eigenvalues, RecoversConjugatedDiagonal) {
    Rng rng(7);
    for (size_t dim : {2, 8, 16, 32}) {
        std::vector<double> d(dim);
        for (auto &x : d) {
            x = rng.normal();
        }
        Unitary u = random_unitary(dim, rng);
        ComplexMatrix m = apply_unitary(ComplexMatrix::diagonal(std::span<const double>(d)), u);
        auto ev = hermitian_eigenvalues(m);
        std::sort(d.begin(), d.end());
        double sum = 0;
        for (size_t i = 0; i < dim; i++) {
            EXPECT_NEAR(ev[i], d[i], 1e-9) << "dim " << dim;
            sum += ev[i];
        }
        EXPECT_NEAR(sum, m.trace().real(), 1e-9);
    }
}

TEST(Eigenvalues, RejectsNonHermitian) {
    ComplexMatrix m{{1, 2}, {0, 1}};
    EXPECT_THROW(hermitian_eigenvalues(m), std::invalid_argument);
}

TEST(PureState, ValidatesNormAndDimension) {
    EXPECT_THROW(PureState({1, 1}), std::invalid_argument);
    EXPECT_THROW(PureState({1, 0, 0}), std::invalid_argument);
    EXPECT_NO_THROW(PureState::normalized({1, 1}));
}

TEST(RandomUnitary, IsUnitary) {
    Rng rng(8);
    for (size_t dim : {2, 4, 8, 64}) {
        EXPECT_TRUE(random_unitary(dim, rng).matrix().is_unitary(1e-12));
    }
}

}  // namespace
}  // namespace pps
