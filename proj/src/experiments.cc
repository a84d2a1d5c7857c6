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

#include "pps/experiments.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "pps/qstate.h"

namespace pps {
namespace {

void check_epsilon(double epsilon, const char *what) {
    if (!(epsilon >= 0 && epsilon <= 1)) {
        throw std::invalid_argument(std::string(what) + ": epsilon must lie in [0, 1], got " +
                                    std::to_string(epsilon));
    }
}

std::vector<unsigned> first_qubits(unsigned count) {
    std::vector<unsigned> q(count);
    std::iota(q.begin(), q.end(), 0u);
    return q;
}

// The shared shape of both circuits: a PPS pushed through H-layer, oracle,
// H-layer. The observer sees the state after preparation and after each layer.
void run_layers(const ComplexMatrix &initial, const Unitary &hadamards, const OracleUnitary &oracle,
                const std::function<void(unsigned, const char *, const ComplexMatrix &)> &observe,
                ComplexMatrix &final_state) {
    ComplexMatrix rho = initial;
    if (observe) {
        observe(0, "prepare", rho);
    }
    rho = apply_unitary(rho, hadamards);
    if (observe) {
        observe(1, "hadamard", rho);
    }
    rho = apply_permutation(rho, oracle.permutation());
    if (observe) {
        observe(2, "oracle", rho);
    }
    rho = apply_unitary(rho, hadamards);
    if (observe) {
        observe(3, "hadamard", rho);
    }
    final_state = std::move(rho);
}

ComplexMatrix dj_initial(unsigned n, double epsilon) {
    return make_pps(PureState::basis(n + 1, 1), epsilon).density_matrix();
}

ComplexMatrix simon_initial(unsigned n, double epsilon) {
    return make_pps(PureState::basis(2 * n, 0), epsilon).density_matrix();
}

Unitary simon_hadamards(unsigned n) {
    return Unitary(tensor(gates::hadamard_layer(n), ComplexMatrix::identity(size_t{1} << n)));
}

void check_dj_cap(unsigned n) {
    if (n > kDjSimulationCap) {
        throw std::invalid_argument("dense DJ simulation supports n <= " + std::to_string(kDjSimulationCap));
    }
}

void check_simon_cap(unsigned n) {
    if (n > kSimonSimulationCap) {
        throw std::invalid_argument("dense Simon simulation supports n <= " + std::to_string(kSimonSimulationCap));
    }
}

}  // namespace

DjOutcomeProbs dj_closed_form(unsigned n, double epsilon) {
    if (n < 1) {
        throw std::invalid_argument("dj_closed_form: n must be at least 1");
    }
    check_epsilon(epsilon, "dj_closed_form");
    double inv = std::ldexp(1.0, -static_cast<int>(n));
    DjOutcomeProbs r{};
    r.n = n;
    r.epsilon = epsilon;
    r.p_zero_given_const = epsilon + (1 - epsilon) * inv;
    r.p_nonzero_given_const = (1 - inv) * (1 - epsilon);
    r.p_nonzero_given_bal = epsilon + (1 - inv) * (1 - epsilon);
    r.p_zero_given_bal = (1 - epsilon) * inv;
    return r;
}

double DjSimulation::p_ancilla(unsigned bit) const {
    double total = 0;
    for (size_t z = 0; z < z_distribution.size(); z++) {
        total += joint[(z << 1) | bit];
    }
    return total;
}

DjSimulation dj_simulate(const DjFunction &f, double epsilon) {
    check_epsilon(epsilon, "dj_simulate");
    unsigned n = f.n();
    check_dj_cap(n);
    unsigned m = n + 1;
    ComplexMatrix rho(1);
    run_layers(dj_initial(n, epsilon), Unitary(gates::hadamard_layer(m)), oracle_unitary(f), nullptr, rho);
    auto keep = first_qubits(n);
    return DjSimulation{n, epsilon, f.kind(), partial_trace(rho, keep, m).real_diagonal(), rho.real_diagonal()};
}

ImprovedDjOutcome dj_improved_closed_form(unsigned n, double epsilon) {
    if (n < 1) {
        throw std::invalid_argument("dj_improved_closed_form: n must be at least 1");
    }
    check_epsilon(epsilon, "dj_improved_closed_form");
    ImprovedDjOutcome r{};
    r.n = n;
    r.epsilon = epsilon;
    r.epsilon_hat = 2 * epsilon / (1 + epsilon);
    r.p_ancilla_one = (1 + epsilon) / 2;
    r.p_ancilla_zero = (1 - epsilon) / 2;
    r.given_ancilla_one = dj_closed_form(n, r.epsilon_hat);
    r.given_ancilla_zero = dj_closed_form(n, 0.0);
    const auto &one = r.given_ancilla_one;
    const auto &zero = r.given_ancilla_zero;
    r.constant_ancilla_one = {r.p_ancilla_one * one.p_zero_given_const, r.p_ancilla_one * one.p_nonzero_given_const};
    r.constant_ancilla_zero = {r.p_ancilla_zero * zero.p_zero_given_const,
                               r.p_ancilla_zero * zero.p_nonzero_given_const};
    r.balanced_ancilla_one = {r.p_ancilla_one * one.p_zero_given_bal, r.p_ancilla_one * one.p_nonzero_given_bal};
    r.balanced_ancilla_zero = {r.p_ancilla_zero * zero.p_zero_given_bal, r.p_ancilla_zero * zero.p_nonzero_given_bal};
    return r;
}

unsigned dot_mod2(uint64_t a, uint64_t b) {
    return static_cast<unsigned>(std::popcount(a & b) & 1);
}

SimonOutcomeDist simon_closed_form(unsigned n, double epsilon, uint64_t mask) {
    if (n < 1 || n > 62) {
        throw std::invalid_argument("simon_closed_form: n must lie in [1, 62]");
    }
    uint64_t size = uint64_t{1} << n;
    if (mask == 0 || mask >= size) {
        throw std::invalid_argument("simon_closed_form: mask must lie in [1, 2^n - 1]");
    }
    check_epsilon(epsilon, "simon_closed_form");
    if (n > kMaxTableBits) {
        throw std::invalid_argument("simon_closed_form: distribution too large to tabulate");
    }
    double inv = std::ldexp(1.0, -static_cast<int>(n));
    SimonOutcomeDist d{n, epsilon, mask, std::vector<double>(size)};
    for (uint64_t j = 0; j < size; j++) {
        d.probabilities[j] = dot_mod2(j, mask) ? (1 - epsilon) * inv : (1 + epsilon) * inv;
    }
    return d;
}

SimonOutcomeDist simon_simulate(const SimonFunction &f, double epsilon) {
    check_epsilon(epsilon, "simon_simulate");
    unsigned n = f.n();
    check_simon_cap(n);
    ComplexMatrix rho(1);
    run_layers(simon_initial(n, epsilon), simon_hadamards(n), oracle_unitary(f), nullptr, rho);
    auto keep = first_qubits(n);
    return SimonOutcomeDist{n, epsilon, f.mask(), partial_trace(rho, keep, 2 * n).real_diagonal()};
}

double PptAudit::min_value() const {
    double v = std::numeric_limits<double>::infinity();
    for (const auto &e : entries) {
        v = std::min(v, e.ppt_min_eigenvalue);
    }
    return v;
}

bool PptAudit::no_violation(double tolerance) const {
    return min_value() >= -tolerance;
}

namespace {

PptAudit audit(const ComplexMatrix &initial, const Unitary &hadamards, const OracleUnitary &oracle, double epsilon) {
    unsigned m = oracle.total_qubits();
    PptAudit report{m, epsilon, certified_separable(epsilon, m), {}};
    auto splits = all_bipartitions(m);
    ComplexMatrix final_state(1);
    run_layers(
        initial, hadamards, oracle,
        [&](unsigned step, const char *name, const ComplexMatrix &rho) {
            for (const auto &left : splits) {
                report.entries.push_back({step, name, left, ppt_min_eigenvalue(rho, left)});
            }
        },
        final_state);
    return report;
}

}  // namespace

PptAudit stepwise_ppt_audit(const DjFunction &f, double epsilon) {
    check_epsilon(epsilon, "stepwise_ppt_audit");
    check_dj_cap(f.n());
    return audit(dj_initial(f.n(), epsilon), Unitary(gates::hadamard_layer(f.n() + 1)), oracle_unitary(f), epsilon);
}

PptAudit stepwise_ppt_audit(const SimonFunction &f, double epsilon) {
    check_epsilon(epsilon, "stepwise_ppt_audit");
    check_simon_cap(f.n());
    return audit(simon_initial(f.n(), epsilon), simon_hadamards(f.n()), oracle_unitary(f), epsilon);
}

}  // namespace pps
