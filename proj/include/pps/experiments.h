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

#ifndef PPS_EXPERIMENTS_H
#define PPS_EXPERIMENTS_H

#include <string>
#include <vector>

#include "pps/oracles.h"
#include "pps/qmath.h"

namespace pps {

/// Dense simulation limits: 2^(n+1) and 2^(2n) dimensional density matrices.
inline constexpr unsigned kDjSimulationCap = 8;
inline constexpr unsigned kSimonSimulationCap = 5;

/// Single-query Deutsch-Jozsa outcome probabilities on a PPS with pure part
/// |0^n>|1>.
struct DjOutcomeProbs {
    unsigned n;
    double epsilon;
    double p_zero_given_const;
    double p_nonzero_given_const;
    double p_zero_given_bal;
    double p_nonzero_given_bal;

    double p_zero(DjKind kind) const { return kind == DjKind::Constant ? p_zero_given_const : p_zero_given_bal; }
};

DjOutcomeProbs dj_closed_form(unsigned n, double epsilon);

/// Result of running the DJ circuit on a dense density matrix.
struct DjSimulation {
    unsigned n;
    double epsilon;
    DjKind kind;
    /// P(first register reads z), z in [0, 2^n).
    std::vector<double> z_distribution;
    /// P(z, ancilla) at index (z << 1) | ancilla.
    std::vector<double> joint;

    double p_zero() const { return z_distribution[0]; }
    double p_ancilla(unsigned bit) const;
    /// P(z = 0 and ancilla = bit).
    double p_zero_and_ancilla(unsigned bit) const { return joint[bit]; }
};

/// PPS(|0^n>|1>, eps) -> H^(n+1) -> U_f -> H^(n+1) -> read the diagonal.
DjSimulation dj_simulate(const DjFunction &f, double epsilon);

/// P(ancilla = a, z = 0) and P(ancilla = a, z != 0) for one function kind.
struct AncillaBranch {
    double p_zero;
    double p_nonzero;
};

/// The DJ experiment when the last qubit is measured as well.
struct ImprovedDjOutcome {
    unsigned n;
    double epsilon;
    /// Purity conditioned on the ancilla reading 1: 2 eps / (1 + eps).
    double epsilon_hat;
    double p_ancilla_one;
    double p_ancilla_zero;
    AncillaBranch constant_ancilla_one;
    AncillaBranch constant_ancilla_zero;
    AncillaBranch balanced_ancilla_one;
    AncillaBranch balanced_ancilla_zero;
    /// Outcome probabilities given the ancilla read 1 (purity epsilon_hat).
    DjOutcomeProbs given_ancilla_one;
    /// Outcome probabilities given the ancilla read 0 (z uniform).
    DjOutcomeProbs given_ancilla_zero;
};

ImprovedDjOutcome dj_improved_closed_form(unsigned n, double epsilon);

/// Distribution of the measured j for a fixed Simon mask.
struct SimonOutcomeDist {
    unsigned n;
    double epsilon;
    uint64_t mask;
    std::vector<double> probabilities;
};

/// Parity of popcount(a & b).
unsigned dot_mod2(uint64_t a, uint64_t b);

SimonOutcomeDist simon_closed_form(unsigned n, double epsilon, uint64_t mask);

/// PPS(|0^n>|0^n>, eps) -> H on the first register -> U_f -> H on the first register.
SimonOutcomeDist simon_simulate(const SimonFunction &f, double epsilon);

struct AuditEntry {
    unsigned step;
    std::string step_name;
    std::vector<unsigned> bipartition;
    double ppt_min_eigenvalue;
};

struct PptAudit {
    unsigned total_qubits;
    double epsilon;
    /// epsilon < separability_threshold(total_qubits).
    bool certified;
    std::vector<AuditEntry> entries;

    double min_value() const;
    /// True when every recorded value is >= -tolerance.
    bool no_violation(double tolerance = 1e-10) const;
};

/// PPT minimum eigenvalue across every bipartition after each gate layer
/// (initial state, H, U_f, H). Purities above the threshold are allowed and
/// reported as not certified.
PptAudit stepwise_ppt_audit(const DjFunction &f, double epsilon);
PptAudit stepwise_ppt_audit(const SimonFunction &f, double epsilon);

}  // namespace pps

#endif
