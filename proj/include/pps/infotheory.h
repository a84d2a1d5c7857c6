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

#ifndef PPS_INFOTHEORY_H
#define PPS_INFOTHEORY_H

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pps {

/// Binary entropy in bits, h(0) = h(1) = 0.
double entropy_h(double q);

/// Joint distribution of function type X (constant / balanced) and the DJ
/// measurement Y (z = 0 / z != 0) for prior p on "constant".
struct DjJointTable {
    unsigned n;
    double epsilon;
    double p;
    double const_zero;
    double const_nonzero;
    double bal_zero;
    double bal_nonzero;

    /// P(Y = zero) = p eps + (1 - eps) / 2^n.
    double p_zero() const { return const_zero + bal_zero; }
    double p_const_given_zero() const;
    double p_const_given_nonzero() const;
};

DjJointTable dj_joint_table(unsigned n, double epsilon, double p);

/// H(X|Y) from the joint table via Bayes' rule.
double dj_conditional_entropy(unsigned n, double epsilon, double p);

/// I(X;Y) in bits for one DJ query on a PPS of purity epsilon.
///
/// Evaluated as sum_y P(y) D(P(X|y) || P(X)) with log1p, which equals
/// h(p) - H(X|Y) but keeps full relative precision as epsilon -> 0.
double dj_mutual_information(unsigned n, double epsilon, double p);

/// The same quantity written as h(p) - p0 h(.) - (1 - p0) h(.). Loses
/// relative accuracy once I drops below ~1e-13.
double dj_mutual_information_direct(unsigned n, double epsilon, double p);

/// 2^(2n) eps^2 / (8 (2^n - 1) ln 2), the p = 1/2 small-epsilon leading term.
double dj_mi_asymptotic(unsigned n, double epsilon);

/// Mutual information when the ancilla is measured too:
/// (1 + eps)/2 * I(n, 2 eps/(1 + eps), p).
double dj_mutual_information_improved(unsigned n, double epsilon, double p);
double dj_mi_improved_asymptotic(unsigned n, double epsilon);

/// I(S;J) for one Simon query, S uniform on [1, 2^n - 1]; n >= 2.
double simon_mutual_information(unsigned n, double epsilon);
/// The three-term closed form, evaluated literally.
double simon_mutual_information_direct(unsigned n, double epsilon);
/// 1 - (2 - (2^n - 2) log2((2^n - 1)/(2^n - 2))) / 2^n, the epsilon = 1 value.
double simon_pure_mutual_information(unsigned n);
/// (2^n - 2) eps^2 / (2 (2^n - 1) ln 2).
double simon_mi_asymptotic(unsigned n, double epsilon);

struct SimonEntropies {
    double h_j;
    double h_j_given_s;
};
SimonEntropies simon_entropies(unsigned n, double epsilon);

/// Row-major joint probability table.
class ProbabilityTable {
   public:
    /// Throws std::invalid_argument on negative entries or a total off 1 by > 1e-10.
    ProbabilityTable(size_t rows, size_t cols, std::vector<double> values);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    double operator()(size_t r, size_t c) const { return values_[r * cols_ + c]; }
    std::vector<double> row_marginal() const;
    std::vector<double> col_marginal() const;

   private:
    size_t rows_;
    size_t cols_;
    std::vector<double> values_;
};

/// sum p(x,y) log2(p(x,y) / (p(x) p(y))) with 0 log 0 = 0.
double empirical_mutual_information(const ProbabilityTable &joint);

/// Shannon entropy in bits of a distribution.
double shannon_entropy(std::span<const double> distribution);

struct InfoReport {
    std::string problem;
    unsigned n;
    double epsilon;
    std::optional<double> p;
    bool improved;
    double prior_entropy;
    double conditional_entropy;
    double mutual_information;
    double asymptotic;
};

InfoReport dj_info_report(unsigned n, double epsilon, double p, bool improved);
InfoReport simon_info_report(unsigned n, double epsilon);

namespace fault_injection {
/// Negates entropy_h while set. Lets the verification harness prove it can fail.
void set_flip_entropy_sign(bool enabled);
bool flip_entropy_sign();
}  // namespace fault_injection

}  // namespace pps

#endif
