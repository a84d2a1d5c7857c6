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

#include "pps/qstate.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pps {

PpsState::PpsState(PureState pure_part, double epsilon) : pure_part_(std::move(pure_part)), epsilon_(epsilon) {
    if (!(epsilon >= 0 && epsilon <= 1)) {
        throw std::invalid_argument("purity epsilon must lie in [0, 1], got " + std::to_string(epsilon));
    }
}

ComplexMatrix PpsState::density_matrix() const {
    ComplexMatrix rho = pure_part_.density_matrix();
    rho *= epsilon_;
    double mixed = (1 - epsilon_) / static_cast<double>(pure_part_.dim());
    for (size_t i = 0; i < rho.dim(); i++) {
        rho(i, i) += mixed;
    }
    return rho;
}

PpsState make_pps(PureState pure_part, double epsilon) {
    return PpsState(std::move(pure_part), epsilon);
}

double separability_threshold(unsigned num_qubits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("separability_threshold: need at least one qubit");
    }
    return 1.0 / (1.0 + std::ldexp(1.0, static_cast<int>(2 * num_qubits - 1)));
}

Rational separability_threshold_exact(unsigned num_qubits) {
    if (num_qubits < 1 || num_qubits > 31) {
        throw std::invalid_argument("separability_threshold_exact: need 1 <= m <= 31");
    }
    return Rational(1, 1 + (int64_t{1} << (2 * num_qubits - 1)));
}

ThresholdRelation compare_to_threshold(const Rational &epsilon, unsigned num_qubits) {
    auto order = epsilon <=> separability_threshold_exact(num_qubits);
    if (order < 0) {
        return ThresholdRelation::Below;
    }
    if (order == 0) {
        return ThresholdRelation::AtThreshold;
    }
    return ThresholdRelation::Above;
}

ThresholdRelation compare_to_threshold(double epsilon, unsigned num_qubits) {
    double t = separability_threshold(num_qubits);
    if (epsilon < t) {
        return ThresholdRelation::Below;
    }
    if (epsilon == t) {
        return ThresholdRelation::AtThreshold;
    }
    return ThresholdRelation::Above;
}

std::string to_string(ThresholdRelation r) {
    switch (r) {
        case ThresholdRelation::Below:
            return "below separability threshold (certified separable)";
        case ThresholdRelation::AtThreshold:
            return "at separability threshold";
        case ThresholdRelation::Above:
            return "above separability threshold (not certified)";
    }
    return "unknown";
}

bool certified_separable(double epsilon, unsigned num_qubits) {
    return epsilon < separability_threshold(num_qubits);
}

namespace bell {
namespace {
const double r = 1 / std::sqrt(2.0);
}
PureState psi_minus() {
    return PureState({0, r, -r, 0});
}
PureState psi_plus() {
    return PureState({0, r, r, 0});
}
PureState phi_minus() {
    return PureState({r, 0, 0, -r});
}
PureState phi_plus() {
    return PureState({r, 0, 0, r});
}
}  // namespace bell

ComplexMatrix werner(double lambda) {
    if (!(lambda >= 0 && lambda <= 1)) {
        throw std::invalid_argument("werner: lambda must lie in [0, 1], got " + std::to_string(lambda));
    }
    ComplexMatrix rho = bell::psi_minus().density_matrix();
    rho *= lambda;
    ComplexMatrix rest = bell::psi_plus().density_matrix();
    rest += bell::phi_minus().density_matrix();
    rest += bell::phi_plus().density_matrix();
    rest *= (1 - lambda) / 3;
    rho += rest;
    return rho;
}

double werner_epsilon(double lambda) {
    return (4 * lambda - 1) / 3;
}

double ppt_min_eigenvalue(const ComplexMatrix &rho, std::span<const unsigned> left_qubits) {
    unsigned m = rho.num_qubits();
    std::vector<bool> is_left(m);
    for (unsigned q : left_qubits) {
        if (q >= m) {
            throw std::out_of_range("ppt_min_eigenvalue: qubit index out of range");
        }
        is_left[q] = true;
    }
    std::vector<unsigned> right;
    for (unsigned q = 0; q < m; q++) {
        if (!is_left[q]) {
            right.push_back(q);
        }
    }
    if (right.empty() || right.size() == m) {
        throw std::invalid_argument("ppt_min_eigenvalue: bipartition must leave both halves non-empty");
    }
    return hermitian_eigenvalues(partial_transpose(rho, right, m)).front();
}

double ppt_min_eigenvalue(const ComplexMatrix &rho, std::initializer_list<unsigned> left_qubits) {
    return ppt_min_eigenvalue(rho, std::span<const unsigned>(left_qubits.begin(), left_qubits.size()));
}

std::vector<std::vector<unsigned>> all_bipartitions(unsigned num_qubits) {
    std::vector<std::vector<unsigned>> out;
    if (num_qubits < 2) {
        return out;
    }
    // Qubit 0 always on the left; the other m-1 qubits choose sides, except
    // the choice that puts all of them on the left.
    uint64_t others = uint64_t{1} << (num_qubits - 1);
    for (uint64_t mask = 0; mask + 1 < others; mask++) {
        std::vector<unsigned> left{0};
        for (unsigned q = 1; q < num_qubits; q++) {
            if ((mask >> (q - 1)) & 1) {
                left.push_back(q);
            }
        }
        out.push_back(std::move(left));
    }
    return out;
}

SeparabilityVerdict assess_separability(const PpsState &state) {
    SeparabilityVerdict verdict{certified_separable(state.epsilon(), state.num_qubits()),
                                std::numeric_limits<double>::infinity(),
                                {}};
    ComplexMatrix rho = state.density_matrix();
    for (const auto &left : all_bipartitions(state.num_qubits())) {
        double v = ppt_min_eigenvalue(rho, left);
        if (v < verdict.ppt_min_eigenvalue) {
            verdict.ppt_min_eigenvalue = v;
            verdict.bipartition = left;
        }
    }
    return verdict;
}

double extract_purity(const ComplexMatrix &rho, const PureState &pure_part) {
    if (rho.dim() != pure_part.dim()) {
        throw std::invalid_argument("extract_purity: dimension mismatch");
    }
    double floor = 1.0 / static_cast<double>(rho.dim());
    return (expectation(rho, pure_part) - floor) / (1 - floor);
}

bool is_product_two_qubit(Complex a, Complex b, Complex c, Complex d) {
    double norm = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
    if (std::abs(norm - 1) > 1e-10) {
        throw std::invalid_argument("is_product_two_qubit: amplitudes are not normalized");
    }
    return std::abs(a * d - b * c) <= 1e-10;
}

}  // namespace pps
