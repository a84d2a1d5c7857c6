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

#ifndef PPS_RNG_H
#define PPS_RNG_H

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace pps {

/// The repository-wide seeded generator.
///
/// Wraps std::mt19937_64, whose output sequence is fixed by the standard. The
/// distributions below are implemented here rather than taken from <random>
/// because the library distributions are allowed to differ between standard
/// library vendors, which would make seeded tables non-portable.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed), seed_(seed) {}

    uint64_t seed() const { return seed_; }
    uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    uint64_t uniform_below(uint64_t bound);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform_unit();

    /// Standard normal via Box-Muller.
    double normal();

    template <typename T>
    void shuffle(std::span<T> items) {
        for (size_t i = items.size(); i > 1; i--) {
            size_t j = static_cast<size_t>(uniform_below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    template <typename T>
    void shuffle(std::vector<T> &items) {
        shuffle(std::span<T>(items));
    }

   private:
    std::mt19937_64 engine_;
    uint64_t seed_;
};

}  // namespace pps

#endif
