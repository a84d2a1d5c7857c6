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

#include "pps/classical.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pps/rational.h"

namespace pps {
namespace {

// Conditional distribution of an observation given a hypothesis, held as
// integer counts over the enumerated worlds.
struct CountRow {
    std::vector<uint64_t> counts;
    uint64_t total = 0;
};

// I(H; O) in bits from prior weights and count rows. Likelihood ratios between
// hypotheses are formed as exact fractions, so hypotheses with identical
// conditional distributions give log(1) = 0 exactly rather than rounding noise.
double mutual_information_from_counts(std::span<const double> prior, std::span<const CountRow> rows) {
    size_t outcomes = rows.front().counts.size();
    double prior_sum = 0;
    for (double w : prior) {
        prior_sum += w;
    }
    double bits = 0;
    for (size_t h = 0; h < rows.size(); h++) {
        if (prior[h] == 0) {
            continue;
        }
        for (size_t o = 0; o < outcomes; o++) {
            uint64_t c = rows[h].counts[o];
            if (c == 0) {
                continue;
            }
            Rational likelihood(static_cast<int64_t>(c), static_cast<int64_t>(rows[h].total));
            double weighted = 0;
            for (size_t g = 0; g < rows.size(); g++) {
                Rational other(static_cast<int64_t>(rows[g].counts[o]), static_cast<int64_t>(rows[g].total));
                weighted += prior[g] * (other / likelihood).to_double();
            }
            // P(o | h) / P(o) = sum_g P(g) / sum_g P(g) (P(o|g) / P(o|h)).
            double ratio = prior_sum / weighted;
            bits += prior[h] / prior_sum * likelihood.to_double() * std::log2(ratio);
        }
    }
    return bits;
}

void check_prior(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("prior p must lie in [0, 1], got " + std::to_string(p));
    }
}

void check_dj_n(unsigned n) {
    if (n < 1 || n > kClassicalDjCap) {
        throw std::invalid_argument("classical DJ enumeration supports 1 <= n <= " + std::to_string(kClassicalDjCap));
    }
}

// Calls visit(table) for every balanced table over 2^n inputs (as a bitmask).
void for_each_balanced(unsigned n, const std::function<void(uint64_t)> &visit) {
    unsigned size = 1u << n;
    unsigned half = size / 2;
    for (uint64_t mask = 0; mask < (uint64_t{1} << size); mask++) {
        if (static_cast<unsigned>(__builtin_popcountll(mask)) == half) {
            visit(mask);
        }
    }
}

// Calls visit(table) for every injective labeling of the cosets of mask.
void for_each_simon_labeling(unsigned n, uint64_t mask, const std::function<void(const std::vector<uint64_t> &)> &visit) {
    uint64_t size = uint64_t{1} << n;
    std::vector<uint64_t> reps;
    for (uint64_t x = 0; x < size; x++) {
        if (x < (x ^ mask)) {
            reps.push_back(x);
        }
    }
    std::vector<uint64_t> table(size);
    std::vector<bool> used(size);
    std::function<void(size_t)> assign = [&](size_t k) {
        if (k == reps.size()) {
            visit(table);
            return;
        }
        for (uint64_t label = 0; label < size; label++) {
            if (used[label]) {
                continue;
            }
            used[label] = true;
            table[reps[k]] = label;
            table[reps[k] ^ mask] = label;
            assign(k + 1);
            used[label] = false;
        }
    };
    assign(0);
}

}  // namespace

double classical_dj_query_info(unsigned n, double p, uint64_t x) {
    check_dj_n(n);
    check_prior(p);
    if (x >= (uint64_t{1} << n)) {
        throw std::out_of_range("classical_dj_query_info: query outside the input space");
    }
    CountRow constant{{1, 1}, 2};
    CountRow balanced{{0, 0}, 0};
    for_each_balanced(n, [&](uint64_t table) {
        balanced.counts[(table >> x) & 1]++;
        balanced.total++;
    });
    std::vector<double> prior{p, 1 - p};
    std::vector<CountRow> rows{constant, balanced};
    return mutual_information_from_counts(prior, rows);
}

double classical_dj_single_query_info(unsigned n, double p) {
    check_dj_n(n);
    double worst = 0;
    for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
        worst = std::max(worst, classical_dj_query_info(n, p, x));
    }
    return worst;
}

double classical_simon_query_info(unsigned n, std::span<const uint64_t> queries) {
    if (n < 1 || n > kClassicalSimonCap) {
        throw std::invalid_argument("classical Simon enumeration supports 1 <= n <= " +
                                    std::to_string(kClassicalSimonCap));
    }
    uint64_t size = uint64_t{1} << n;
    if (queries.empty() || queries.size() > 2) {
        throw std::invalid_argument("classical_simon_query_info: between one and two queries");
    }
    for (uint64_t q : queries) {
        if (q >= size) {
            throw std::out_of_range("classical_simon_query_info: query outside the input space");
        }
    }
    size_t outcomes = 1;
    for (size_t k = 0; k < queries.size(); k++) {
        outcomes *= size;
    }
    std::vector<CountRow> rows;
    for (uint64_t s = 1; s < size; s++) {
        CountRow row{std::vector<uint64_t>(outcomes), 0};
        for_each_simon_labeling(n, s, [&](const std::vector<uint64_t> &table) {
            size_t o = 0;
            for (uint64_t q : queries) {
                o = o * size + table[q];
            }
            row.counts[o]++;
            row.total++;
        });
        rows.push_back(std::move(row));
    }
    std::vector<double> prior(rows.size(), 1.0 / static_cast<double>(rows.size()));
    return mutual_information_from_counts(prior, rows);
}

double classical_simon_single_query_info(unsigned n) {
    double worst = 0;
    for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
        uint64_t q[1] = {x};
        worst = std::max(worst, classical_simon_query_info(n, q));
    }
    return worst;
}

namespace {

// Outcome rows for the counted form, reduced by common factors. A balanced
// table splits the N inputs into halves, so an ordered distinct pair lands
// in equal halves (N/2)(N/2 - 1) ways and across them (N/2)^2 ways.
std::pair<CountRow, CountRow> counted_jozsa_rows(unsigned n) {
    uint64_t half = uint64_t{1} << (n - 1);
    CountRow constant{{2, 1, 0, 0, 1}, 4};
    CountRow balanced{{2 * (2 * half - 1), half - 1, half, half, half - 1}, 4 * (2 * half - 1)};
    return {constant, balanced};
}

std::pair<CountRow, CountRow> enumerated_jozsa_rows(unsigned n) {
    uint64_t size = uint64_t{1} << n;
    // Outcomes: 0 = no query, 1 + 2 f(x) + f(y) for the queried pair.
    // Each hypothesis row is weighted half on the skip branch, half over the
    // functions in its class times the ordered distinct pairs.
    auto fill = [&](CountRow &row, uint64_t table) {
        for (uint64_t x = 0; x < size; x++) {
            for (uint64_t y = 0; y < size; y++) {
                if (x != y) {
                    row.counts[1 + 2 * ((table >> x) & 1) + ((table >> y) & 1)]++;
                }
            }
        }
    };
    CountRow constant{std::vector<uint64_t>(5), 0};
    fill(constant, 0);
    fill(constant, (uint64_t{1} << size) - 1);
    CountRow balanced{std::vector<uint64_t>(5), 0};
    for_each_balanced(n, [&](uint64_t table) { fill(balanced, table); });
    for (CountRow *row : {&constant, &balanced}) {
        uint64_t queried = std::accumulate(row->counts.begin() + 1, row->counts.end(), uint64_t{0});
        row->counts[0] = queried;
        row->total = 2 * queried;
    }
    return {constant, balanced};
}

}  // namespace

JozsaStrategyResult jozsa_average_strategy(unsigned n, double p) {
    if (n < 1 || n > 60) {
        throw std::invalid_argument("jozsa_average_strategy: n must lie in [1, 60]");
    }
    check_prior(p);
    const ClassicalStrategy strategy;
    // Small cases walk every function; larger ones use the counted rows.
    auto [constant, balanced] = n <= kClassicalDjCap ? enumerated_jozsa_rows(n) : counted_jozsa_rows(n);

    std::vector<double> prior{p, 1 - p};
    std::vector<CountRow> rows{constant, balanced};
    JozsaStrategyResult r{};
    r.expected_queries = strategy.expected_queries();
    r.expected_information = mutual_information_from_counts(prior, rows);
    double distinct_given_bal =
        static_cast<double>(balanced.counts[2] + balanced.counts[3]) / static_cast<double>(balanced.total);
    double distinct_given_const =
        static_cast<double>(constant.counts[2] + constant.counts[3]) / static_cast<double>(constant.total);
    double p_distinct = p * distinct_given_const + (1 - p) * distinct_given_bal;
    r.p_full_information = (1 - p) * distinct_given_bal;
    r.p_constant_given_distinct = p_distinct > 0 ? p * distinct_given_const / p_distinct : 0.0;
    r.p_full_information_limit = (1 - p) / 4;
    return r;
}

double jozsa_full_information_probability(unsigned n, double p) {
    check_prior(p);
    if (n < 1 || n > 62) {
        throw std::invalid_argument("jozsa_full_information_probability: n must lie in [1, 62]");
    }
    // Second input lands on the other half of a balanced table with
    // probability 2^(n-1) / (2^n - 1).
    double half = std::ldexp(1.0, static_cast<int>(n) - 1);
    return (1 - p) / 2 * half / (2 * half - 1);
}

}  // namespace pps
