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

#include "pps/verify.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "pps/classical.h"
#include "pps/experiments.h"
#include "pps/infotheory.h"
#include "pps/qmath.h"
#include "pps/qstate.h"
#include "pps/rng.h"
#include "pps/simd/kernels.h"

namespace pps {
namespace {

std::vector<double> epsilon_grid() {
    std::vector<double> g;
    for (int k = 0; k <= 10; k++) {
        g.push_back(k / 10.0);
    }
    return g;
}

CheckResult max_gap_check(std::string name, double tolerance, const std::function<double()> &worst_gap) {
    double gap = worst_gap();
    return {std::move(name), std::isfinite(gap) && gap <= tolerance, gap, tolerance, ""};
}

double dj_simulation_gap(uint64_t seed) {
    double worst = 0;
    for (unsigned n = 1; n <= 4; n++) {
        std::vector<DjFunction> fs{make_constant_dj_function(n, 0), make_constant_dj_function(n, 1)};
        for (uint64_t k = 0; k < 5; k++) {
            fs.push_back(make_dj_function(n, DjKind::Balanced, seed + k));
        }
        for (double eps : epsilon_grid()) {
            auto closed = dj_closed_form(n, eps);
            auto improved = dj_improved_closed_form(n, eps);
            for (const auto &f : fs) {
                auto sim = dj_simulate(f, eps);
                worst = std::max(worst, std::abs(sim.p_zero() - closed.p_zero(f.kind())));
                const auto &one = f.kind() == DjKind::Constant ? improved.constant_ancilla_one
                                                                : improved.balanced_ancilla_one;
                const auto &zero = f.kind() == DjKind::Constant ? improved.constant_ancilla_zero
                                                                 : improved.balanced_ancilla_zero;
                worst = std::max(worst, std::abs(sim.p_zero_and_ancilla(1) - one.p_zero));
                worst = std::max(worst, std::abs(sim.p_zero_and_ancilla(0) - zero.p_zero));
                worst = std::max(worst, std::abs(sim.p_ancilla(1) - improved.p_ancilla_one));
            }
        }
    }
    return worst;
}

double simon_simulation_gap(uint64_t seed) {
    double worst = 0;
    for (unsigned n = 2; n <= 3; n++) {
        for (uint64_t s = 1; s < (uint64_t{1} << n); s++) {
            std::vector<SimonFunction> fs{make_simon_function(n, s, SimonLabeling::Canonical)};
            for (uint64_t k = 0; k < 2; k++) {
                fs.push_back(make_simon_function(n, s, SimonLabeling::Permuted, seed + k));
            }
            for (double eps : {0.0, 0.3, 0.7, 1.0}) {
                auto closed = simon_closed_form(n, eps, s);
                for (const auto &f : fs) {
                    auto sim = simon_simulate(f, eps);
                    for (size_t j = 0; j < closed.probabilities.size(); j++) {
                        worst = std::max(worst, std::abs(sim.probabilities[j] - closed.probabilities[j]));
                    }
                }
            }
        }
    }
    return worst;
}

ProbabilityTable dj_table_as_joint(const DjJointTable &t) {
    return ProbabilityTable(2, 2, {t.const_zero, t.const_nonzero, t.bal_zero, t.bal_nonzero});
}

ProbabilityTable simon_joint(unsigned n, double eps) {
    uint64_t size = uint64_t{1} << n;
    std::vector<double> values;
    double ps = 1.0 / static_cast<double>(size - 1);
    for (uint64_t s = 1; s < size; s++) {
        for (double pj : simon_closed_form(n, eps, s).probabilities) {
            values.push_back(ps * pj);
        }
    }
    return ProbabilityTable(size - 1, size, std::move(values));
}

}  // namespace

std::vector<CheckResult> run_cross_checks(const VerifyOptions &options) {
    struct FaultGuard {
        explicit FaultGuard(bool on) { fault_injection::set_flip_entropy_sign(on); }
        ~FaultGuard() { fault_injection::set_flip_entropy_sign(false); }
    } guard(options.inject_entropy_fault);

    std::vector<CheckResult> results;

    results.push_back(max_gap_check("dj_simulation_vs_closed_form", 1e-12,
                                    [&] { return dj_simulation_gap(options.seed); }));
    results.push_back(max_gap_check("simon_simulation_vs_closed_form", 1e-12,
                                    [&] { return simon_simulation_gap(options.seed); }));

    results.push_back(max_gap_check("dj_mi_vs_joint_table", 1e-12, [] {
        double worst = 0;
        for (unsigned n = 1; n <= 6; n++) {
            for (double eps : epsilon_grid()) {
                for (double p : {0.1, 0.3, 0.5, 0.9}) {
                    double direct = empirical_mutual_information(dj_table_as_joint(dj_joint_table(n, eps, p)));
                    worst = std::max(worst, std::abs(dj_mutual_information(n, eps, p) - direct));
                }
            }
        }
        return worst;
    }));

    results.push_back(max_gap_check("dj_mi_vs_entropy_formula", 1e-12, [] {
        double worst = 0;
        for (unsigned n = 1; n <= 6; n++) {
            for (double eps : epsilon_grid()) {
                for (double p : {0.1, 0.3, 0.5, 0.9}) {
                    double i = dj_mutual_information(n, eps, p);
                    worst = std::max(worst, std::abs(i - dj_mutual_information_direct(n, eps, p)));
                    worst = std::max(worst, std::abs(i - (entropy_h(p) - dj_conditional_entropy(n, eps, p))));
                }
            }
        }
        return worst;
    }));

    results.push_back(max_gap_check("simon_mi_vs_marginal_entropies", 1e-12, [] {
        double worst = 0;
        for (unsigned n = 2; n <= 10; n++) {
            for (double eps : epsilon_grid()) {
                auto e = simon_entropies(n, eps);
                double i = simon_mutual_information(n, eps);
                worst = std::max(worst, std::abs(i - (e.h_j - e.h_j_given_s)));
                worst = std::max(worst, std::abs(i - simon_mutual_information_direct(n, eps)));
            }
        }
        return worst;
    }));

    results.push_back(max_gap_check("simon_mi_vs_joint_table", 1e-12, [] {
        double worst = 0;
        for (unsigned n = 2; n <= 4; n++) {
            for (double eps : epsilon_grid()) {
                worst = std::max(worst,
                                 std::abs(simon_mutual_information(n, eps) - empirical_mutual_information(simon_joint(n, eps))));
            }
        }
        return worst;
    }));

    results.push_back(max_gap_check("entropy_small_deviation_expansion", 1e-9, [] {
        double worst = 0;
        for (double x : {1e-2, 3e-3, 1e-3}) {
            // Two leading terms of the series in (2x)^2; the next one is O(x^6).
            double u = 4 * x * x;
            double expansion = 1 - (u / 2 + u * u / 12) / std::numbers::ln2;
            worst = std::max(worst, std::abs(entropy_h(0.5 + x) - expansion));
        }
        return worst;
    }));

    results.push_back(max_gap_check("purity_conservation", 1e-10, [&] {
        Rng rng(options.seed);
        double worst = 0;
        for (int trial = 0; trial < 20; trial++) {
            PureState psi = random_pure_state(3, rng);
            Unitary u = random_unitary(8, rng);
            double eps = trial / 19.0;
            ComplexMatrix evolved = apply_unitary(make_pps(psi, eps).density_matrix(), u);
            std::vector<Complex> moved(8);
            for (size_t i = 0; i < 8; i++) {
                for (size_t j = 0; j < 8; j++) {
                    moved[i] += u.matrix()(i, j) * psi[j];
                }
            }
            worst = std::max(worst, std::abs(extract_purity(evolved, PureState::normalized(moved)) - eps));
        }
        return worst;
    }));

    results.push_back(max_gap_check("werner_ppt_formula", 1e-9, [] {
        double worst = 0;
        // Below lambda = 1/4 the weight on the singlet is negative and another
        // eigenvalue becomes the minimum, so the closed form stops applying.
        for (int k = 0; k <= 10; k++) {
            double lambda = 0.25 + 0.075 * k;
            double eps = werner_epsilon(lambda);
            worst = std::max(worst, std::abs(ppt_min_eigenvalue(werner(lambda), {0}) - (1 - 3 * eps) / 4));
        }
        return worst;
    }));

    results.push_back(max_gap_check("ppt_audit_separable_regime", 1e-10, [&] {
        auto dj = stepwise_ppt_audit(make_dj_function(3, DjKind::Balanced, options.seed), 1.0 / 130);
        auto simon = stepwise_ppt_audit(make_simon_function(3, 5, SimonLabeling::Permuted, options.seed), 1.0 / 2050);
        double violation = std::max(0.0, -std::min(dj.min_value(), simon.min_value()));
        return violation;
    }));

    results.push_back(max_gap_check("classical_single_query_zero_information", 1e-15, [] {
        double worst = 0;
        for (unsigned n = 1; n <= 4; n++) {
            for (double p : {0.3, 0.5, 0.7}) {
                worst = std::max(worst, std::abs(classical_dj_single_query_info(n, p)));
            }
        }
        for (unsigned n = 1; n <= 3; n++) {
            worst = std::max(worst, std::abs(classical_simon_single_query_info(n)));
        }
        return worst;
    }));

    results.push_back(max_gap_check("simd_kernels_match_scalar", 1e-12, [&] {
        const simd::KernelTable *wide = simd::avx2_kernels();
        if (wide == nullptr) {
            return 0.0;
        }
        Rng rng(options.seed);
        size_t dim = 37;
        std::vector<Complex> a(dim * dim), b(dim * dim), c1(dim * dim), c2(dim * dim);
        for (auto *v : {&a, &b}) {
            for (auto &e : *v) {
                e = Complex(rng.normal(), rng.normal());
            }
        }
        simd::scalar_kernels().matmul_adjoint(a.data(), b.data(), c1.data(), dim);
        wide->matmul_adjoint(a.data(), b.data(), c2.data(), dim);
        double worst = 0;
        for (size_t k = 0; k < c1.size(); k++) {
            worst = std::max(worst, std::abs(c1[k] - c2[k]));
        }
        return worst;
    }));

    return results;
}

}  // namespace pps
