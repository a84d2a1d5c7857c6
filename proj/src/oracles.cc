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

#include "pps/oracles.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pps/rng.h"

namespace pps {
namespace {

void check_width(unsigned n, const char *what) {
    if (n < 1 || n > kMaxTableBits) {
        throw std::invalid_argument(std::string(what) + ": n must lie in [1, " + std::to_string(kMaxTableBits) +
                                    "], got " + std::to_string(n));
    }
}

}  // namespace

std::string to_string(DjKind kind) {
    return kind == DjKind::Constant ? "constant" : "balanced";
}

bool is_valid_dj_table(unsigned n, std::span<const uint8_t> table) {
    if (n < 1 || n > kMaxTableBits || table.size() != (size_t{1} << n)) {
        return false;
    }
    size_t ones = 0;
    for (uint8_t v : table) {
        if (v > 1) {
            return false;
        }
        ones += v;
    }
    return ones == 0 || ones == table.size() || 2 * ones == table.size();
}

DjFunction::DjFunction(unsigned n, std::vector<uint8_t> table) : n_(n), table_(std::move(table)) {
    check_width(n, "DjFunction");
    if (!is_valid_dj_table(n, table_)) {
        throw std::invalid_argument("DjFunction: table violates the constant-or-balanced promise");
    }
    bool constant = std::all_of(table_.begin(), table_.end(), [&](uint8_t v) { return v == table_[0]; });
    kind_ = constant ? DjKind::Constant : DjKind::Balanced;
}

DjFunction make_constant_dj_function(unsigned n, uint8_t value) {
    check_width(n, "make_constant_dj_function");
    if (value > 1) {
        throw std::invalid_argument("make_constant_dj_function: value must be 0 or 1");
    }
    return DjFunction(n, std::vector<uint8_t>(size_t{1} << n, value));
}

DjFunction make_dj_function(unsigned n, DjKind kind, uint64_t seed) {
    check_width(n, "make_dj_function");
    Rng rng(seed);
    if (kind == DjKind::Constant) {
        return make_constant_dj_function(n, static_cast<uint8_t>(rng.uniform_below(2)));
    }
    size_t size = size_t{1} << n;
    std::vector<uint64_t> order(size);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    std::vector<uint8_t> table(size, 0);
    for (size_t k = 0; k < size / 2; k++) {
        table[order[k]] = 1;
    }
    return DjFunction(n, std::move(table));
}

bool is_valid_simon_table(unsigned n, uint64_t mask, std::span<const uint64_t> table) {
    if (n < 1 || n > kMaxTableBits || table.size() != (size_t{1} << n)) {
        return false;
    }
    uint64_t size = table.size();
    if (mask == 0 || mask >= size) {
        return false;
    }
    std::vector<int64_t> owner(size, -1);
    for (uint64_t x = 0; x < size; x++) {
        uint64_t y = table[x];
        if (y >= size || table[x ^ mask] != y) {
            return false;
        }
        uint64_t rep = std::min(x, x ^ mask);
        if (owner[y] == -1) {
            owner[y] = static_cast<int64_t>(rep);
        } else if (owner[y] != static_cast<int64_t>(rep)) {
            return false;
        }
    }
    return true;
}

SimonFunction::SimonFunction(unsigned n, uint64_t mask, std::vector<uint64_t> table)
    : n_(n), mask_(mask), table_(std::move(table)) {
    check_width(n, "SimonFunction");
    if (mask == 0 || mask >= (uint64_t{1} << n)) {
        throw std::invalid_argument("SimonFunction: mask must lie in [1, 2^n - 1]");
    }
    if (!is_valid_simon_table(n, mask, table_)) {
        throw std::invalid_argument("SimonFunction: table violates the two-to-one promise for mask " +
                                    std::to_string(mask));
    }
}

SimonFunction make_simon_function(unsigned n, uint64_t mask, SimonLabeling labeling, uint64_t seed) {
    check_width(n, "make_simon_function");
    uint64_t size = uint64_t{1} << n;
    if (mask == 0 || mask >= size) {
        throw std::invalid_argument("make_simon_function: mask must lie in [1, 2^n - 1]");
    }
    std::vector<uint64_t> table(size);
    uint64_t next_label = 0;
    for (uint64_t x = 0; x < size; x++) {
        if (x < (x ^ mask)) {
            table[x] = next_label;
            table[x ^ mask] = next_label;
            next_label++;
        }
    }
    if (labeling == SimonLabeling::Permuted) {
        std::vector<uint64_t> relabel(size);
        std::iota(relabel.begin(), relabel.end(), 0);
        Rng rng(seed);
        rng.shuffle(relabel);
        for (auto &v : table) {
            v = relabel[v];
        }
    }
    return SimonFunction(n, mask, std::move(table));
}

OracleUnitary::OracleUnitary(unsigned input_qubits, unsigned output_qubits, std::vector<uint64_t> permutation)
    : input_qubits_(input_qubits), output_qubits_(output_qubits), permutation_(std::move(permutation)) {
    if (permutation_.size() != (size_t{1} << (input_qubits + output_qubits))) {
        throw std::invalid_argument("OracleUnitary: permutation size does not match register widths");
    }
}

ComplexMatrix OracleUnitary::matrix() const {
    ComplexMatrix m(permutation_.size());
    for (size_t i = 0; i < permutation_.size(); i++) {
        m(permutation_[i], i) = 1;
    }
    return m;
}

OracleUnitary oracle_unitary(const DjFunction &f) {
    uint64_t size = uint64_t{1} << (f.n() + 1);
    std::vector<uint64_t> perm(size);
    for (uint64_t idx = 0; idx < size; idx++) {
        uint64_t x = idx >> 1;
        perm[idx] = idx ^ f(x);
    }
    return OracleUnitary(f.n(), 1, std::move(perm));
}

OracleUnitary oracle_unitary(const SimonFunction &f) {
    unsigned n = f.n();
    uint64_t size = uint64_t{1} << (2 * n);
    uint64_t low = (uint64_t{1} << n) - 1;
    std::vector<uint64_t> perm(size);
    for (uint64_t idx = 0; idx < size; idx++) {
        uint64_t x = idx >> n;
        perm[idx] = (x << n) | ((idx & low) ^ f(x));
    }
    return OracleUnitary(n, n, std::move(perm));
}

ComplexMatrix phase_kickback(const DjFunction &f) {
    std::vector<Complex> diag(size_t{1} << f.n());
    for (size_t x = 0; x < diag.size(); x++) {
        diag[x] = f(x) ? -1.0 : 1.0;
    }
    return ComplexMatrix::diagonal(std::span<const Complex>(diag));
}

std::string to_text(const DjFunction &f) {
    std::ostringstream out;
    out << "DJ " << f.n() << " " << to_string(f.kind()) << "\n";
    for (size_t x = 0; x < f.table().size(); x++) {
        out << (x ? " " : "") << static_cast<int>(f(x));
    }
    out << "\n";
    return out.str();
}

std::string to_text(const SimonFunction &f) {
    std::ostringstream out;
    out << "SIMON " << f.n() << " " << f.mask() << "\n";
    for (size_t x = 0; x < f.table().size(); x++) {
        out << (x ? " " : "") << f(x);
    }
    out << "\n";
    return out.str();
}

std::variant<DjFunction, SimonFunction> parse_function_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tag;
    long long n = 0;
    if (!(in >> tag >> n) || n < 1 || n > static_cast<long long>(kMaxTableBits)) {
        throw std::invalid_argument("function text: expected header 'DJ n kind' or 'SIMON n s'");
    }
    size_t size = size_t{1} << n;
    if (tag == "DJ") {
        std::string kind;
        if (!(in >> kind) || (kind != "constant" && kind != "balanced")) {
            throw std::invalid_argument("function text: DJ kind must be 'constant' or 'balanced'");
        }
        std::vector<uint8_t> table;
        table.reserve(size);
        long long v;
        while (in >> v) {
            if (v != 0 && v != 1) {
                throw std::invalid_argument("function text: DJ outputs must be 0 or 1");
            }
            table.push_back(static_cast<uint8_t>(v));
        }
        if (!in.eof() || table.size() != size) {
            throw std::invalid_argument("function text: expected " + std::to_string(size) + " DJ outputs");
        }
        DjFunction f(static_cast<unsigned>(n), std::move(table));
        if (to_string(f.kind()) != kind) {
            throw std::invalid_argument("function text: header says " + kind + " but table is " +
                                        to_string(f.kind()));
        }
        return f;
    }
    if (tag == "SIMON") {
        long long mask = 0;
        if (!(in >> mask) || mask < 1) {
            throw std::invalid_argument("function text: SIMON mask must be a positive integer");
        }
        std::vector<uint64_t> table;
        table.reserve(size);
        long long v;
        while (in >> v) {
            if (v < 0) {
                throw std::invalid_argument("function text: SIMON outputs must be non-negative");
            }
            table.push_back(static_cast<uint64_t>(v));
        }
        if (!in.eof() || table.size() != size) {
            throw std::invalid_argument("function text: expected " + std::to_string(size) + " SIMON outputs");
        }
        return SimonFunction(static_cast<unsigned>(n), static_cast<uint64_t>(mask), std::move(table));
    }
    throw std::invalid_argument("function text: unknown tag '" + tag + "'");
}

}  // namespace pps
