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

#ifndef PPS_QSTATE_H
#define PPS_QSTATE_H

#include <span>
#include <string>
#include <vector>

#include "pps/qmath.h"
#include "pps/rational.h"

namespace pps {

/// Pseudo-pure state eps |psi><psi| + (1 - eps) I / 2^m.
class PpsState {
   public:
    /// Throws std::invalid_argument unless 0 <= epsilon <= 1.
    PpsState(PureState pure_part, double epsilon);

    const PureState &pure_part() const { return pure_part_; }
    double epsilon() const { return epsilon_; }
    unsigned num_qubits() const { return pure_part_.num_qubits(); }

    ComplexMatrix density_matrix() const;

   private:
    PureState pure_part_;
    double epsilon_;
};

PpsState make_pps(PureState pure_part, double epsilon);

/// 1 / (1 + 2^(2m-1)): a PPS over m qubits with purity strictly below this
/// is separable whatever its pure part.
double separability_threshold(unsigned num_qubits);
/// Same bound as an exact fraction; m <= 31.
Rational separability_threshold_exact(unsigned num_qubits);

enum class ThresholdRelation { Below, AtThreshold, Above };
ThresholdRelation compare_to_threshold(const Rational &epsilon, unsigned num_qubits);
/// Used when epsilon was given as a non-representable decimal.
ThresholdRelation compare_to_threshold(double epsilon, unsigned num_qubits);
std::string to_string(ThresholdRelation r);

/// Strict inequality epsilon < separability_threshold(m).
bool certified_separable(double epsilon, unsigned num_qubits);

namespace bell {
PureState psi_minus();
PureState psi_plus();
PureState phi_minus();
PureState phi_plus();
}  // namespace bell

/// Werner state lambda |Psi-><Psi-| + ((1 - lambda)/3)(|Psi+><Psi+| + |Phi-><Phi-| + |Phi+><Phi+|).
ComplexMatrix werner(double lambda);
/// (4 lambda - 1) / 3; negative for lambda < 1/4.
double werner_epsilon(double lambda);

/// Minimum eigenvalue of rho partially transposed on every qubit not in
/// left_qubits. Negative certifies entanglement across the split; for two
/// qubits a non-negative value also certifies separability.
double ppt_min_eigenvalue(const ComplexMatrix &rho, std::span<const unsigned> left_qubits);
double ppt_min_eigenvalue(const ComplexMatrix &rho, std::initializer_list<unsigned> left_qubits);

/// Every split of m qubits into two non-empty halves, each listed once
/// (the half containing qubit 0).
std::vector<std::vector<unsigned>> all_bipartitions(unsigned num_qubits);

struct SeparabilityVerdict {
    bool certified_separable;
    /// Smallest PPT eigenvalue over every bipartition.
    double ppt_min_eigenvalue;
    /// The bipartition (left half) attaining it.
    std::vector<unsigned> bipartition;
};

SeparabilityVerdict assess_separability(const PpsState &state);

/// (<psi|rho|psi> - 2^-m) / (1 - 2^-m); recovers eps from a PPS with pure part psi.
double extract_purity(const ComplexMatrix &rho, const PureState &pure_part);

/// a|00> + b|01> + c|10> + d|11> is a product state iff ad = bc.
bool is_product_two_qubit(Complex a, Complex b, Complex c, Complex d);

}  // namespace pps

#endif
