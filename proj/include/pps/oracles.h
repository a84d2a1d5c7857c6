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

#ifndef PPS_ORACLES_H
#define PPS_ORACLES_H

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pps/qmath.h"

namespace pps {

enum class DjKind { Constant, Balanced };
std::string to_string(DjKind kind);

/// Largest input width accepted for explicit truth tables.
inline constexpr unsigned kMaxTableBits = 20;

/// f: {0,1}^n -> {0,1}, promised constant or balanced.
class DjFunction {
   public:
    /// Validates the promise and infers the kind.
    DjFunction(unsigned n, std::vector<uint8_t> table);

    unsigned n() const { return n_; }
    DjKind kind() const { return kind_; }
    std::span<const uint8_t> table() const { return table_; }
    uint8_t operator()(uint64_t x) const { return table_[x]; }

   private:
    unsigned n_;
    DjKind kind_;
    std::vector<uint8_t> table_;
};

/// True when the table has 2^n entries in {0,1} and is constant or balanced.
bool is_valid_dj_table(unsigned n, std::span<const uint8_t> table);

DjFunction make_constant_dj_function(unsigned n, uint8_t value);
/// Constant functions take their value from the seed; balanced functions are
/// drawn uniformly from all C(2^n, 2^(n-1)) tables.
DjFunction make_dj_function(unsigned n, DjKind kind, uint64_t seed);

/// f: {0,1}^n -> {0,1}^n with f(x) = f(y), x != y, exactly when y = x ^ mask.
class SimonFunction {
   public:
    SimonFunction(unsigned n, uint64_t mask, std::vector<uint64_t> table);

    unsigned n() const { return n_; }
    uint64_t mask() const { return mask_; }
    std::span<const uint64_t> table() const { return table_; }
    uint64_t operator()(uint64_t x) const { return table_[x]; }

   private:
    unsigned n_;
    uint64_t mask_;
    std::vector<uint64_t> table_;
};

bool is_valid_simon_table(unsigned n, uint64_t mask, std::span<const uint64_t> table);

enum class SimonLabeling {
    /// Coset {x, x^s} gets label = rank of min(x, x^s) among coset minima.
    Canonical,
    /// Canonical labels pushed through a seeded permutation of {0,1}^n.
    Permuted,
};

SimonFunction make_simon_function(unsigned n, uint64_t mask, SimonLabeling labeling, uint64_t seed = 0);

/// |x>|b> -> |x>|b ^ f(x)> as a basis permutation.
class OracleUnitary {
   public:
    OracleUnitary(unsigned input_qubits, unsigned output_qubits, std::vector<uint64_t> permutation);

    unsigned input_qubits() const { return input_qubits_; }
    unsigned output_qubits() const { return output_qubits_; }
    unsigned total_qubits() const { return input_qubits_ + output_qubits_; }
    /// Image of each basis index.
    std::span<const uint64_t> permutation() const { return permutation_; }
    /// Dense 0/1 matrix with entry (perm[i], i) = 1.
    ComplexMatrix matrix() const;

   private:
    unsigned input_qubits_;
    unsigned output_qubits_;
    std::vector<uint64_t> permutation_;
};

OracleUnitary oracle_unitary(const DjFunction &f);
OracleUnitary oracle_unitary(const SimonFunction &f);

/// Diagonal (-1)^f(x) over the n input qubits.
ComplexMatrix phase_kickback(const DjFunction &f);

/// Text form: a header line "DJ n kind" or "SIMON n s" (s in decimal), then
/// the 2^n outputs separated by whitespace.
std::string to_text(const DjFunction &f);
std::string to_text(const SimonFunction &f);
std::variant<DjFunction, SimonFunction> parse_function_text(std::string_view text);

}  // namespace pps

#endif
