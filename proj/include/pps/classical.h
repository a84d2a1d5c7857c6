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

#ifndef PPS_CLASSICAL_H
#define PPS_CLASSICAL_H

#include <cstdint>
#include <span>

namespace pps {

/// Enumeration limits: C(16, 8) balanced functions at n = 4; 8!/4! labelings
/// per mask at n = 3.
inline constexpr unsigned kClassicalDjCap = 4;
inline constexpr unsigned kClassicalSimonCap = 3;

/// I(X; f(x)) in bits for a single classical query at input x, where X is
/// constant (prior p) versus balanced and f is uniform within its class.
double classical_dj_query_info(unsigned n, double p, uint64_t x);

/// Largest single-query information over every query input. Zero.
double classical_dj_single_query_info(unsigned n, double p);

/// I(S; f(q_1), ..., f(q_k)) in bits for fixed classical queries, with S
/// uniform on [1, 2^n - 1] and the coset labels uniform over injective
/// labelings into {0,1}^n.
double classical_simon_query_info(unsigned n, std::span<const uint64_t> queries);

/// Largest single-query information over every query input. Zero.
double classical_simon_single_query_info(unsigned n);

/// Coin-flip strategy with one query on average: with probability
/// no_query_probability ask nothing, otherwise ask queries_when_querying
/// distinct uniformly random inputs.
struct ClassicalStrategy {
    double no_query_probability = 0.5;
    unsigned queries_when_querying = 2;

    double expected_queries() const { return (1 - no_query_probability) * queries_when_querying; }
};

struct JozsaStrategyResult {
    double expected_queries;
    /// I(X; coin, outputs) in bits.
    double expected_information;
    /// P(the two outputs differ), which proves "balanced".
    double p_full_information;
    /// Posterior P(constant | outputs differ); always 0.
    double p_constant_given_distinct;
    /// The large-n limit (1 - p) / 4 of p_full_information.
    double p_full_information_limit;
};

/// Evaluates the two-query coin-flip strategy by enumerating every function
/// and every ordered pair of distinct inputs. n <= kClassicalDjCap.
JozsaStrategyResult jozsa_average_strategy(unsigned n, double p);

/// (1 - p) / 2 * 2^(n-1) / (2^n - 1), counted rather than enumerated; any n <= 62.
double jozsa_full_information_probability(unsigned n, double p);

}  // namespace pps

#endif
