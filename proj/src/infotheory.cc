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

#include "pps/infotheory.h"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pps {
namespace {

std::atomic<bool> g_flip_entropy_sign{false};

constexpr double kLn2 = std::numbers::ln2;

void check_probability(double q, const char *what) {
    if (!(q >= 0 && q <= 1)) {
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1], got " + std::to_string(q));
    }
}

void check_n(unsigned n, unsigned min_n, const char *what) {
    if (n < min_n || n > 60) {
        throw std::invalid_argument(std::string(what) + ": n must lie in [" + std::to_string(min_n) +
                                    ", 60], got " + std::to_string(n));
    }
}

// -x log2 x with the 0 log 0 = 0 convention.
double neg_xlog2x(double x) {
    return x > 0 ? -x * std::log2(x) : 0.0;
}

// x log2 y, 0 when x is 0 whatever y is.
double xlog2y(double x, double y) {
    return x == 0 ? 0.0 : x * std::log2(y);
}

// D(p + delta || p) for Bernoulli distributions, in nats. 0 < p < 1.
double bernoulli_divergence_shift(double p, double delta) {
    double q = p + delta;
    double a = q > 0 ? q * std::log1p(delta / p) : 0.0;
    double b = (1 - q) > 0 ? (1 - q) * std::log1p(-delta / (1 - p)) : 0.0;
    return a + b;
}

double inv_pow2(unsigned n) {
    return std::ldexp(1.0, -static_cast<int>(n));
}

}  // namespace

namespace fault_injection {
void set_flip_entropy_sign(bool enabled) {
    g_flip_entropy_sign.store(enabled);
}
bool flip_entropy_sign() {
    return g_flip_entropy_sign.load();
}
}  // namespace fault_injection

double entropy_h(double q) {
    check_probability(q, "entropy_h argument");
    double h = neg_xlog2x(q) + neg_xlog2x(1 - q);
    return g_flip_entropy_sign.load(std::memory_order_relaxed) ? -h : h;
}

double DjJointTable::p_const_given_zero() const {
    double pz = p_zero();
    return pz > 0 ? const_zero / pz : p;
}

double DjJointTable::p_const_given_nonzero() const {
    double pn = const_nonzero + bal_nonzero;
    return pn > 0 ? const_nonzero / pn : p;
}

DjJointTable dj_joint_table(unsigned n, double epsilon, double p) {
    check_n(n, 1, "dj_joint_table");
    check_probability(epsilon, "epsilon");
    check_probability(p, "prior p");
    double inv = inv_pow2(n);
    return DjJointTable{n,
                        epsilon,
                        p,
                        p * (epsilon + (1 - epsilon) * inv),
                        p * (1 - epsilon) * (1 - inv),
                        (1 - p) * (1 - epsilon) * inv,
                        (1 - p) * (1 - (1 - epsilon) * inv)};
}

double dj_conditional_entropy(unsigned n, double epsilon, double p) {
    DjJointTable t = dj_joint_table(n, epsilon, p);
    double p0 = t.p_zero();
    return p0 * entropy_h(t.p_const_given_zero()) + (1 - p0) * entropy_h(t.p_const_given_nonzero());
}

double dj_mutual_information(unsigned n, double epsilon, double p) {
    check_n(n, 1, "dj_mutual_information");
    check_probability(epsilon, "epsilon");
    check_probability(p, "prior p");
    if (p == 0 || p == 1 || epsilon == 0) {
        return 0.0;
    }
    double p0 = p * epsilon + (1 - epsilon) * inv_pow2(n);
    // P(const | zero) - p and P(const | nonzero) - p, simplified by hand so no
    // difference of nearly equal numbers is ever formed.
    double shift = p * (1 - p) * epsilon;
    double up = shift / p0;
    double down = -shift / (1 - p0);
    double nats = p0 * bernoulli_divergence_shift(p, up) + (1 - p0) * bernoulli_divergence_shift(p, down);
    return nats / kLn2;
}

double dj_mutual_information_direct(unsigned n, double epsilon, double p) {
    check_n(n, 1, "dj_mutual_information_direct");
    check_probability(epsilon, "epsilon");
    check_probability(p, "prior p");
    double inv = inv_pow2(n);
    double p0 = (1 - epsilon) * inv + epsilon * p;
    double given_zero = p0 > 0 ? (p / p0) * (epsilon + (1 - epsilon) * inv) : p;
    double given_nonzero = p0 < 1 ? (p * (1 - epsilon) / (1 - p0)) * (1 - inv) : p;
    return entropy_h(p) - p0 * entropy_h(given_zero) - (1 - p0) * entropy_h(given_nonzero);
}

double dj_mi_asymptotic(unsigned n, double epsilon) {
    check_n(n, 1, "dj_mi_asymptotic");
    double two_n = std::ldexp(1.0, static_cast<int>(n));
    return two_n * two_n * epsilon * epsilon / (8 * (two_n - 1) * kLn2);
}

double dj_mutual_information_improved(unsigned n, double epsilon, double p) {
    check_probability(epsilon, "epsilon");
    double epsilon_hat = 2 * epsilon / (1 + epsilon);
    // The ancilla = 0 branch has z independent of f and contributes nothing.
    return (1 + epsilon) / 2 * dj_mutual_information(n, epsilon_hat, p);
}

double dj_mi_improved_asymptotic(unsigned n, double epsilon) {
    return 2 * dj_mi_asymptotic(n, epsilon);
}

double simon_mutual_information(unsigned n, double epsilon) {
    check_n(n, 2, "simon_mutual_information");
    check_probability(epsilon, "epsilon");
    if (epsilon == 0) {
        return 0.0;
    }
    // sum_s P(s) D(P(J|s) || P(J)). Relative to P(J) every P(J = j | s) is
    // 1 (j = 0), (1 + eps)/(1 - eps/(N-1)) for the 2^(n-1) - 1 other j
    // orthogonal to s, and (1 - eps)/(1 - eps/(N-1)) for the 2^(n-1) others.
    double N = std::ldexp(1.0, static_cast<int>(n));
    double log_marginal = std::log1p(-epsilon / (N - 1));
    double orthogonal = (N / 2 - 1) * (1 + epsilon) / N * (std::log1p(epsilon) - log_marginal);
    double other = epsilon < 1 ? (1 - epsilon) / 2 * (std::log1p(-epsilon) - log_marginal) : 0.0;
    return (orthogonal + other) / kLn2;
}

double simon_mutual_information_direct(unsigned n, double epsilon) {
    check_n(n, 2, "simon_mutual_information_direct");
    check_probability(epsilon, "epsilon");
    double N = std::ldexp(1.0, static_cast<int>(n));
    double orth = (1 + epsilon) / N;
    double non_orth = (1 - epsilon) / N;
    double rest = 1 - orth;
    return -xlog2y(rest, rest / (N - 1)) + (N / 2 - 1) * xlog2y(orth, orth) + N / 2 * xlog2y(non_orth, non_orth);
}

double simon_pure_mutual_information(unsigned n) {
    check_n(n, 2, "simon_pure_mutual_information");
    double N = std::ldexp(1.0, static_cast<int>(n));
    return 1 - (2 - (N - 2) * std::log2((N - 1) / (N - 2))) / N;
}

double simon_mi_asymptotic(unsigned n, double epsilon) {
    check_n(n, 2, "simon_mi_asymptotic");
    double N = std::ldexp(1.0, static_cast<int>(n));
    return (N - 2) * epsilon * epsilon / (2 * (N - 1) * kLn2);
}

SimonEntropies simon_entropies(unsigned n, double epsilon) {
    check_n(n, 2, "simon_entropies");
    check_probability(epsilon, "epsilon");
    double N = std::ldexp(1.0, static_cast<int>(n));
    double orth = (1 + epsilon) / N;
    double non_orth = (1 - epsilon) / N;
    double rest = 1 - orth;
    SimonEntropies e{};
    e.h_j = -xlog2y(rest, rest / (N - 1)) + neg_xlog2x(orth);
    e.h_j_given_s = -xlog2y((1 + epsilon) / 2, orth) - xlog2y((1 - epsilon) / 2, non_orth);
    return e;
}

ProbabilityTable::ProbabilityTable(size_t rows, size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (rows == 0 || cols == 0 || values_.size() != rows * cols) {
        throw std::invalid_argument("ProbabilityTable: shape does not match value count");
    }
    double total = 0;
    for (double v : values_) {
        if (!(v >= 0) || !std::isfinite(v)) {
            throw std::invalid_argument("ProbabilityTable: entries must be finite and non-negative");
        }
        total += v;
    }
    if (std::abs(total - 1) > 1e-10) {
        throw std::invalid_argument("ProbabilityTable: entries sum to " + std::to_string(total) + ", not 1");
    }
}

std::vector<double> ProbabilityTable::row_marginal() const {
    std::vector<double> m(rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            m[r] += (*this)(r, c);
        }
    }
    return m;
}

std::vector<double> ProbabilityTable::col_marginal() const {
    std::vector<double> m(cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            m[c] += (*this)(r, c);
        }
    }
    return m;
}

double empirical_mutual_information(const ProbabilityTable &joint) {
    auto px = joint.row_marginal();
    auto py = joint.col_marginal();
    double total = 0;
    for (size_t r = 0; r < joint.rows(); r++) {
        for (size_t c = 0; c < joint.cols(); c++) {
            double pxy = joint(r, c);
            if (pxy > 0) {
                total += pxy * std::log2(pxy / (px[r] * py[c]));
            }
        }
    }
    return total;
}

double shannon_entropy(std::span<const double> distribution) {
    double total = 0;
    for (double v : distribution) {
        total += neg_xlog2x(v);
    }
    return total;
}

InfoReport dj_info_report(unsigned n, double epsilon, double p, bool improved) {
    InfoReport r{};
    r.problem = "dj";
    r.n = n;
    r.epsilon = epsilon;
    r.p = p;
    r.improved = improved;
    r.prior_entropy = entropy_h(p);
    if (improved) {
        r.mutual_information = dj_mutual_information_improved(n, epsilon, p);
        r.asymptotic = dj_mi_improved_asymptotic(n, epsilon);
    } else {
        r.mutual_information = dj_mutual_information(n, epsilon, p);
        r.asymptotic = dj_mi_asymptotic(n, epsilon);
    }
    r.conditional_entropy = r.prior_entropy - r.mutual_information;
    return r;
}

InfoReport simon_info_report(unsigned n, double epsilon) {
    InfoReport r{};
    r.problem = "simon";
    r.n = n;
    r.epsilon = epsilon;
    r.improved = false;
    r.prior_entropy = std::log2(std::ldexp(1.0, static_cast<int>(n)) - 1);
    r.mutual_information = simon_mutual_information(n, epsilon);
    r.conditional_entropy = r.prior_entropy - r.mutual_information;
    r.asymptotic = simon_mi_asymptotic(n, epsilon);
    return r;
}

}  // namespace pps
