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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pps/experiments.h"
#include "pps/infotheory.h"
#include "pps/rational.h"
#include "test_support.h"

namespace pps {
namespace {

using testing::reference_mi;

// Joint over (constant, balanced) x (z = 0, z != 0), written straight from the
// outcome probabilities in long double.
std::vector<std::vector<long double>> dj_reference_joint(unsigned n, long double eps, long double p) {
    long double N = std::ldexp(1.0L, static_cast<int>(n));
    long double zc = eps + (1 - eps) / N;
    long double zb = (1 - eps) / N;
    return {{p * zc, p * (1 - zc)}, {(1 - p) * zb, (1 - p) * (1 - zb)}};
}

// Joint over s in [1, 2^n) and j in [0, 2^n) with a uniform prior on s.
std::vector<std::vector<long double>> simon_reference_joint(unsigned n, long double eps) {
    size_t N = size_t{1} << n;
    std::vector<std::vector<long double>> joint(N - 1, std::vector<long double>(N));
    for (size_t s = 1; s < N; s++) {
        for (size_t j = 0; j < N; j++) {
            long double cond = (dot_mod2(j, s) == 0 ? 1 + eps : 1 - eps) / N;
            joint[s - 1][j] = cond / (N - 1);
        }
    }
    return joint;
}

TEST(Entropy, KnownPoints) {
    EXPECT_DOUBLE_EQ(entropy_h(0.5), 1.0);
    EXPECT_EQ(entropy_h(0.0), 0.0);
    EXPECT_EQ(entropy_h(1.0), 0.0);
    EXPECT_NEAR(entropy_h(0.51), 1 - 2 * 0.01 * 0.01 / std::numbers::ln2, 1e-6);
    EXPECT_THROW(entropy_h(1.2), std::invalid_argument);
}

TEST(DjJoint, Limits) {
    auto pure = dj_joint_table(3, 1.0, 0.5);
    EXPECT_DOUBLE_EQ(pure.const_zero, 0.5);
    EXPECT_DOUBLE_EQ(pure.const_nonzero, 0.0);
    EXPECT_DOUBLE_EQ(pure.bal_zero, 0.0);
    EXPECT_DOUBLE_EQ(pure.bal_nonzero, 0.5);

    auto mixed = dj_joint_table(3, 0.0, 0.3);
    double pz = mixed.p_zero();
    EXPECT_NEAR(mixed.const_zero, 0.3 * pz, 1e-16);
    EXPECT_NEAR(mixed.bal_nonzero, 0.7 * (1 - pz), 1e-16);
}

TEST(DjJoint, MarginalAtThresholdIsExact) {
    Rational eps(1, 129);
    Rational p0 = Rational(1, 2) * eps + (Rational(1) - eps) / Rational(8);
    EXPECT_EQ(p0, Rational(33, 258));
    EXPECT_NEAR(dj_joint_table(3, eps.to_double(), 0.5).p_zero(), p0.to_double(), 1e-16);
}

TEST(DjJoint, RowsSumToPrior) {
    auto t = dj_joint_table(5, 0.2, 0.35);
    EXPECT_NEAR(t.const_zero + t.const_nonzero, 0.35, 1e-15);
    EXPECT_NEAR(t.bal_zero + t.bal_nonzero, 0.65, 1e-15);
}

TEST(DjMutualInformation, HeadlineValue) {
    EXPECT_NEAR(dj_mutual_information(3, 1.0 / 129, 0.5), 0.0000972, 1e-7);
}

TEST(DjMutualInformation, Limits) {
    EXPECT_NEAR(dj_mutual_information(3, 1.0, 0.5), 1.0, 1e-12);
    for (double p : {0.1, 0.5, 0.8}) {
        EXPECT_NEAR(dj_mutual_information(4, 1.0, p), entropy_h(p), 1e-12);
        EXPECT_EQ(dj_mutual_information(4, 0.0, p), 0.0);
    }
}

TEST(DjMutualInformation, AgreesWithIndependentJointSum) {
    for (unsigned n : {1u, 2u, 3u, 6u, 10u}) {
        for (double eps : {1e-3, 0.01, 1.0 / 129, 0.2, 0.5, 0.9, 1.0}) {
            for (double p : {0.05, 0.3, 0.5, 0.77}) {
                double ref = reference_mi(dj_reference_joint(n, eps, p));
                EXPECT_NEAR(dj_mutual_information(n, eps, p), ref, 1e-12) << n << " " << eps << " " << p;
                EXPECT_NEAR(dj_mutual_information_direct(n, eps, p), ref, 1e-12);
                auto t = dj_joint_table(n, eps, p);
                ProbabilityTable joint(2, 2, {t.const_zero, t.const_nonzero, t.bal_zero, t.bal_nonzero});
                EXPECT_NEAR(empirical_mutual_information(joint), ref, 1e-12);
            }
        }
    }
}

TEST(DjMutualInformation, NotSymmetricInPrior) {
    EXPECT_GT(std::abs(dj_mutual_information(3, 0.3, 0.2) - dj_mutual_information(3, 0.3, 0.8)), 1e-4);
}

TEST(DjMutualInformation, StrictlyIncreasingInEpsilon) {
    double prev = 0;
    for (int k = 1; k <= 1000; k++) {
        double mi = dj_mutual_information(3, k / 1000.0, 0.5);
        EXPECT_GT(mi, prev) << k;
        prev = mi;
    }
}

TEST(DjMutualInformation, PositiveAtTinyEpsilon) {
    for (double eps : {1e-4, 1e-6, 1e-8}) {
        for (double p : {0.01, 0.5, 0.99}) {
            double mi = dj_mutual_information(3, eps, p);
            EXPECT_GT(mi, 0.0) << eps << " " << p;
        }
        // Leading-order agreement even where the literal formula cancels.
        EXPECT_NEAR(dj_mutual_information(3, eps, 0.5) / dj_mi_asymptotic(3, eps), 1.0, 1e-3);
    }
}

TEST(DjAsymptotic, FormulaAndRatio) {
    double eps = 1.0 / 129;
    EXPECT_NEAR(dj_mi_asymptotic(3, eps), 64 * eps * eps / (56 * std::numbers::ln2), 1e-18);
    EXPECT_NEAR(dj_mi_asymptotic(3, eps), 9.91e-5, 1e-7);
    double ratio = dj_mutual_information(3, eps, 0.5) / dj_mi_asymptotic(3, eps);
    EXPECT_GE(ratio, 0.95);
    EXPECT_LE(ratio, 1.05);
}

TEST(DjAsymptotic, HalvingEpsilonQuarters) {
    for (double eps : {1e-4, 5e-5, 1e-5}) {
        double ratio = dj_mutual_information(3, eps, 0.5) / dj_mutual_information(3, eps / 2, 0.5);
        EXPECT_NEAR(ratio, 4.0, 0.04);
    }
}

TEST(DjImproved, HeadlineAndLimits) {
    EXPECT_NEAR(dj_mutual_information_improved(3, 1.0 / 129, 0.5), 0.000189, 1e-6);
    EXPECT_EQ(dj_mutual_information_improved(3, 0.0, 0.5), 0.0);
    EXPECT_NEAR(dj_mutual_information_improved(3, 1.0, 0.5), 1.0, 1e-12);
}

// Reference: ancilla and z together carry the information, so sum the 2x4 joint.
TEST(DjImproved, AgreesWithAncillaResolvedJoint) {
    for (double eps : {0.01, 0.2, 0.7}) {
        for (double p : {0.2, 0.5}) {
            auto imp = dj_improved_closed_form(3, eps);
            std::vector<std::vector<long double>> joint{
                {p * imp.constant_ancilla_one.p_zero, p * imp.constant_ancilla_one.p_nonzero,
                 p * imp.constant_ancilla_zero.p_zero, p * imp.constant_ancilla_zero.p_nonzero},
                {(1 - p) * imp.balanced_ancilla_one.p_zero, (1 - p) * imp.balanced_ancilla_one.p_nonzero,
                 (1 - p) * imp.balanced_ancilla_zero.p_zero, (1 - p) * imp.balanced_ancilla_zero.p_nonzero}};
            EXPECT_NEAR(dj_mutual_information_improved(3, eps, p), reference_mi(joint), 1e-12);
        }
    }
}

TEST(DjImproved, RoughlyDoubleForSmallEpsilon) {
    for (double eps : {1e-4, 1e-5, 1e-6}) {
        double ratio = dj_mutual_information_improved(3, eps, 0.5) / dj_mutual_information(3, eps, 0.5);
        EXPECT_NEAR(ratio, 2.0, 0.04);
        EXPECT_NEAR(dj_mi_improved_asymptotic(3, eps), 2 * dj_mi_asymptotic(3, eps), 1e-20);
    }
}

TEST(SimonMutualInformation, HeadlineValue) {
    EXPECT_NEAR(simon_mutual_information(3, 1.0 / 2049), 1.47e-7, 2e-9);
}

TEST(SimonMutualInformation, PureCaseClosedForm) {
    for (unsigned n = 2; n <= 10; n++) {
        double N = std::ldexp(1.0, static_cast<int>(n));
                double expected = 1 - (2 - (N - 2) * std::log2((N - 1) / (N - 2))) / N;
        EXPECT_NEAR(expected, reference_mi(simon_reference_joint(n, 1.0)), 1e-12);
        EXPECT_NEAR(simon_mutual_information(n, 1.0), expected, 1e-12) << n;
        EXPECT_NEAR(simon_pure_mutual_information(n), expected, 1e-12) << n;
        EXPECT_NEAR(simon_entropies(n, 1.0).h_j_given_s, n - 1.0, 1e-12);
    }
}

TEST(SimonMutualInformation, AgreesWithIndependentJointSum) {
    for (unsigned n = 2; n <= 5; n++) {
        for (double eps : {0.0, 1e-3, 0.1, 0.5, 0.9, 1.0}) {
            double ref = reference_mi(simon_reference_joint(n, eps));
            EXPECT_NEAR(simon_mutual_information(n, eps), ref, 1e-12) << n << " " << eps;
            EXPECT_NEAR(simon_mutual_information_direct(n, eps), ref, 1e-12);
        }
    }
}

TEST(SimonMutualInformation, JointFromClosedFormDistribution) {
    const unsigned n = 3;
    std::vector<double> values;
    for (uint64_t s = 1; s < 8; s++) {
        for (double v : simon_closed_form(n, 0.5, s).probabilities) {
            values.push_back(v / 7);
        }
    }
    EXPECT_NEAR(empirical_mutual_information(ProbabilityTable(7, 8, values)), simon_mutual_information(n, 0.5), 1e-12);
}

TEST(SimonEntropies, KnownValues) {
    auto pure = simon_entropies(3, 1.0);
    EXPECT_NEAR(pure.h_j_given_s, 2.0, 1e-12);
    EXPECT_NEAR(pure.h_j, (1 - 2.0 / 8) * (3 + std::log2(7.0 / 6)) + 2.0 / 4, 1e-12);
    auto mixed = simon_entropies(4, 0.0);
    EXPECT_NEAR(mixed.h_j, 4.0, 1e-12);
    EXPECT_NEAR(mixed.h_j_given_s, 4.0, 1e-12);
    for (double eps : {0.1, 0.6}) {
        auto e = simon_entropies(4, eps);
        EXPECT_NEAR(e.h_j - e.h_j_given_s, simon_mutual_information(4, eps), 1e-12);
    }
    EXPECT_THROW(simon_entropies(1, 0.5), std::invalid_argument);
}

TEST(SimonMutualInformation, MonotoneAndPositive) {
    double prev = 0;
    for (int k = 1; k <= 1000; k++) {
        double mi = simon_mutual_information(10, k / 1000.0);
        EXPECT_GT(mi, prev);
        prev = mi;
    }
    for (double eps : {1e-6, 1e-8}) {
        EXPECT_GT(simon_mutual_information(10, eps), 0.0);
        EXPECT_GT(simon_mutual_information(3, eps), 0.0);
    }
    EXPECT_EQ(simon_mutual_information(3, 0.0), 0.0);
}

TEST(SimonAsymptotic, FormulaAndRatio) {
    double eps = 1.0 / 2049;
    EXPECT_NEAR(simon_mi_asymptotic(3, eps), 6 * eps * eps / (14 * std::numbers::ln2), 1e-22);
    EXPECT_NEAR(simon_mi_asymptotic(3, eps), 1.473e-7, 1e-10);
    EXPECT_EQ(simon_mi_asymptotic(3, 0.0), 0.0);
    for (double e : {1e-3, 1e-4, 1e-5, 1e-6}) {
        double ratio = simon_mutual_information(3, e) / simon_mi_asymptotic(3, e);
        EXPECT_GE(ratio, 0.99);
        EXPECT_LE(ratio, 1.01);
    }
}

TEST(EmpiricalMutualInformation, SimpleTables) {
    EXPECT_NEAR(empirical_mutual_information(ProbabilityTable(2, 2, {0.06, 0.14, 0.24, 0.56})), 0.0, 1e-15);
    EXPECT_NEAR(empirical_mutual_information(ProbabilityTable(2, 2, {0.5, 0, 0, 0.5})), 1.0, 1e-15);
    EXPECT_THROW(ProbabilityTable(2, 2, {0.5, 0.5, 0.5, 0.5}), std::invalid_argument);
    EXPECT_THROW(ProbabilityTable(1, 2, {1.5, -0.5}), std::invalid_argument);
}

TEST(InfoReport, ConsistentDecomposition) {
    for (bool improved : {false, true}) {
        auto r = dj_info_report(3, 0.05, 0.4, improved);
        EXPECT_NEAR(r.prior_entropy - r.conditional_entropy, r.mutual_information, 1e-12);
        EXPECT_GE(r.mutual_information, 0.0);
        EXPECT_LE(r.mutual_information, r.prior_entropy);
    }
    auto s = simon_info_report(4, 0.3);
    EXPECT_NEAR(s.prior_entropy, std::log2(15.0), 1e-12);
    EXPECT_NEAR(s.prior_entropy - s.conditional_entropy, s.mutual_information, 1e-12);
}

TEST(FaultInjection, FlipsEntropySign) {
    fault_injection::set_flip_entropy_sign(true);
    double flipped = entropy_h(0.3);
    fault_injection::set_flip_entropy_sign(false);
    EXPECT_DOUBLE_EQ(flipped, -entropy_h(0.3));
}

}  // namespace
}  // namespace pps
