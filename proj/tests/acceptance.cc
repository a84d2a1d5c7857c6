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

// Acceptance harness: one line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pps/classical.h"
#include "pps/cli.h"
#include "pps/experiments.h"
#include "pps/infotheory.h"
#include "pps/qstate.h"
#include "pps/rng.h"

namespace {

using namespace pps;

struct Outcome {
    bool passed;
    std::string detail;
};

char buf[256];

template <typename... Args>
std::string fmt(const char *f, Args... args) {
    std::snprintf(buf, sizeof(buf), f, args...);
    return buf;
}

Outcome dj_headline() {
    double mi = dj_mutual_information(3, 1.0 / 129, 0.5);
    return {std::abs(mi - 0.0000972) <= 1e-7, fmt("I = %.7g bits (target 0.0000972 +/- 1e-7)", mi)};
}

Outcome improved_headline() {
    double mi = dj_mutual_information_improved(3, 1.0 / 129, 0.5);
    return {std::abs(mi - 0.000189) <= 1e-6, fmt("I = %.6g bits (target 0.000189 +/- 1e-6)", mi)};
}

Outcome simon_headline() {
    double mi = simon_mutual_information(3, 1.0 / 2049);
    return {std::abs(mi - 1.47e-7) <= 2e-9, fmt("I = %.4g bits (target 1.47e-7 +/- 2e-9)", mi)};
}

Outcome pure_dj() {
    bool ok = true;
    double worst = 0;
    for (unsigned n = 1; n <= 10; n++) {
        auto probs = dj_closed_form(n, 1.0);
        ok &= probs.p_zero_given_const == 1.0 && probs.p_zero_given_bal == 0.0;
        for (double p : {0.1, 0.25, 0.5, 0.9}) {
            worst = std::max(worst, std::abs(dj_mutual_information(n, 1.0, p) - entropy_h(p)));
        }
    }
    for (unsigned n = 1; n <= 4; n++) {
        ok &= dj_simulate(make_constant_dj_function(n, 0), 1.0).p_zero() > 1 - 1e-12;
        ok &= dj_simulate(make_dj_function(n, DjKind::Balanced, n), 1.0).p_zero() < 1e-12;
    }
    return {ok && worst <= 1e-15, fmt("probabilities exact; max |I - h(p)| = %.2g", worst)};
}

Outcome pure_simon() {
    double worst = 0;
    bool conditional_ok = true;
    for (unsigned n = 2; n <= 10; n++) {
        double N = std::ldexp(1.0, static_cast<int>(n));
                double expected = 1 - (2 - (N - 2) * std::log2((N - 1) / (N - 2))) / N;
        worst = std::max(worst, std::abs(simon_mutual_information(n, 1.0) - expected));
        conditional_ok &= simon_entropies(n, 1.0).h_j_given_s == static_cast<double>(n - 1);
    }
    return {conditional_ok && worst <= 1e-12, fmt("H(J|S) = n-1 for n=2..10; max |I - closed form| = %.2g", worst)};
}

Outcome simulation_equivalence() {
    double worst = 0;
    size_t runs = 0;
    for (int k = 0; k <= 10; k++) {
        double eps = k / 10.0;
        for (unsigned n = 1; n <= 4; n++) {
            auto closed = dj_closed_form(n, eps);
            std::vector<DjFunction> fs{make_constant_dj_function(n, 0), make_constant_dj_function(n, 1)};
            for (uint64_t seed = 0; seed < 20; seed++) {
                fs.push_back(make_dj_function(n, DjKind::Balanced, seed));
            }
            for (const auto &f : fs) {
                auto sim = dj_simulate(f, eps);
                worst = std::max(worst, std::abs(sim.p_zero() - closed.p_zero(f.kind())));
                runs++;
            }
        }
        for (unsigned n = 2; n <= 3; n++) {
            for (uint64_t s = 1; s < (uint64_t{1} << n); s++) {
                auto closed = simon_closed_form(n, eps, s);
                std::vector<SimonFunction> fs{make_simon_function(n, s, SimonLabeling::Canonical)};
                for (uint64_t seed = 0; seed < 5; seed++) {
                    fs.push_back(make_simon_function(n, s, SimonLabeling::Permuted, seed));
                }
                for (const auto &f : fs) {
                    auto sim = simon_simulate(f, eps);
                    for (size_t j = 0; j < sim.probabilities.size(); j++) {
                        worst = std::max(worst, std::abs(sim.probabilities[j] - closed.probabilities[j]));
                    }
                    runs++;
                }
            }
        }
    }
    return {worst <= 1e-12, fmt("%zu simulations, max gap %.2g (tol 1e-12)", runs, worst)};
}

Outcome purity_conservation() {
    Rng rng(20260101);
    double worst = 0;
    for (int trial = 0; trial < 100; trial++) {
        PureState psi = random_pure_state(3, rng);
        Unitary u = random_unitary(8, rng);
        double eps = rng.uniform_unit();
        ComplexMatrix evolved = apply_unitary(make_pps(psi, eps).density_matrix(), u);
        std::vector<Complex> moved(8);
        for (size_t i = 0; i < 8; i++) {
            for (size_t j = 0; j < 8; j++) {
                moved[i] += u.matrix()(i, j) * psi[j];
            }
        }
        worst = std::max(worst, std::abs(extract_purity(evolved, PureState::normalized(moved)) - eps));
    }
    return {worst <= 1e-10, fmt("100 random unitaries, max drift %.2g (tol 1e-10)", worst)};
}

Outcome werner_witness() {
    double worst = 0;
    for (int k = 0; k <= 30; k++) {
        double lambda = 0.25 + 0.025 * k;
        double eps = werner_epsilon(lambda);
        worst = std::max(worst, std::abs(ppt_min_eigenvalue(werner(lambda), {0}) - (1 - 3 * eps) / 4));
    }
    double at = ppt_min_eigenvalue(werner(0.5), {0});
    bool crossing = std::abs(at) <= 1e-12 && ppt_min_eigenvalue(werner(0.5 - 1e-6), {0}) > 0 &&
                    ppt_min_eigenvalue(werner(0.5 + 1e-6), {0}) < 0;
    return {worst <= 1e-9 && crossing, fmt("max |PPT - (1-3eps)/4| = %.2g; zero crossing at eps = 1/3", worst)};
}

Outcome separability_audit() {
    double worst = 0;
    size_t entries = 0;
    for (uint64_t seed = 0; seed < 3; seed++) {
        for (DjKind kind : {DjKind::Constant, DjKind::Balanced}) {
            auto a = stepwise_ppt_audit(make_dj_function(3, kind, seed), 1.0 / 130);
            worst = std::min(worst, a.min_value());
            entries += a.entries.size();
        }
        auto s = stepwise_ppt_audit(make_simon_function(3, 1 + seed * 3, SimonLabeling::Permuted, seed), 1.0 / 2050);
        worst = std::min(worst, s.min_value());
        entries += s.entries.size();
    }
    return {worst >= -1e-10, fmt("%zu step/bipartition values, minimum %.3g (floor -1e-10)", entries, worst)};
}

Outcome classical_zero() {
    double worst = 0;
    for (unsigned n = 1; n <= 4; n++) {
        for (double p : {0.3, 0.5, 0.7}) {
            worst = std::max(worst, std::abs(classical_dj_single_query_info(n, p)));
        }
    }
    for (unsigned n = 1; n <= 3; n++) {
        worst = std::max(worst, std::abs(classical_simon_single_query_info(n)));
    }
    return {worst <= 1e-15, fmt("max |I| = %.2g over DJ n<=4 and Simon n<=3", worst)};
}

Outcome asymptotics() {
    double example_dj = dj_mutual_information(3, 1.0 / 129, 0.5) / dj_mi_asymptotic(3, 1.0 / 129);
    double example_simon = simon_mutual_information(3, 1.0 / 2049) / simon_mi_asymptotic(3, 1.0 / 2049);
    double example_imp = dj_mutual_information_improved(3, 1.0 / 129, 0.5) / dj_mi_improved_asymptotic(3, 1.0 / 129);
    double small_worst = 0;
    for (double eps : {1e-3, 1e-4, 1e-5, 1e-6}) {
        small_worst = std::max(small_worst, std::abs(dj_mutual_information(3, eps, 0.5) / dj_mi_asymptotic(3, eps) - 1));
        small_worst = std::max(small_worst, std::abs(simon_mutual_information(3, eps) / simon_mi_asymptotic(3, eps) - 1));
    }
    double quarter_worst = 0;
    for (double eps : {1e-4, 5e-5}) {
        quarter_worst = std::max(quarter_worst, std::abs(dj_mutual_information(3, eps, 0.5) /
                                                             dj_mutual_information(3, eps / 2, 0.5) / 4 - 1));
        quarter_worst = std::max(quarter_worst, std::abs(simon_mutual_information(3, eps) /
                                                             simon_mutual_information(3, eps / 2) / 4 - 1));
    }
    double example_worst =
        std::max({std::abs(example_dj - 1), std::abs(example_simon - 1), std::abs(example_imp - 1)});
    return {example_worst <= 0.05 && small_worst <= 0.01 && quarter_worst <= 0.01,
            fmt("examples off by %.3g, small eps by %.2g, halving ratio off by %.2g", example_worst, small_worst,
                quarter_worst)};
}

Outcome figure_properties() {
    bool fig1 = true;
    auto p_grid = cli::parse_grid("0:1:0.05").values;
    auto eps_grid = cli::parse_grid("0:0.2:0.01").values;
    for (double p : p_grid) {
        for (double eps : eps_grid) {
            double mi = dj_mutual_information(3, eps, p);
            bool interior = p > 0 && p < 1 && eps > 0;
            fig1 &= interior ? mi > 0 : mi == 0;
        }
    }
    bool fig2 = simon_mutual_information(10, 0.0) == 0.0;
    double prev = 0;
    for (double eps : cli::parse_grid("0.01:1:0.01").values) {
        double mi = simon_mutual_information(10, eps);
        fig2 &= mi > prev;
        prev = mi;
    }
    fig2 &= simon_mutual_information(10, 1e-8) > 0;
    bool endpoints = std::abs(prev - simon_pure_mutual_information(10)) <= 1e-12 &&
                     std::abs(dj_mutual_information(3, 1.0, 0.5) - 1.0) <= 1e-12;
    return {fig1 && fig2 && endpoints,
            fmt("DJ grid sign pattern %s; Simon n=10 increasing %s; endpoints %s", fig1 ? "ok" : "BAD",
                fig2 ? "ok" : "BAD", endpoints ? "ok" : "BAD")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"DJ headline information", dj_headline},
        {"improved DJ headline information", improved_headline},
        {"Simon headline information", simon_headline},
        {"pure DJ limit", pure_dj},
        {"pure Simon limit", pure_simon},
        {"simulation matches closed forms", simulation_equivalence},
        {"purity conservation", purity_conservation},
        {"Werner PPT witness", werner_witness},
        {"separable-regime PPT audit", separability_audit},
        {"classical single query gives zero information", classical_zero},
        {"small-epsilon asymptotics", asymptotics},
        {"figure data properties", figure_properties},
    };
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); i++) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failures += !o.passed;
        std::printf("%s  %2zu  %-46s %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
