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

#ifndef PPS_RATIONAL_H
#define PPS_RATIONAL_H

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pps {

/// Exact fraction num/den with den > 0 and gcd(num, den) = 1.
///
/// Arithmetic throws std::overflow_error rather than wrapping.
class Rational {
   public:
    constexpr Rational() = default;
    Rational(int64_t num, int64_t den = 1);

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    friend Rational operator+(const Rational &a, const Rational &b);
    friend Rational operator-(const Rational &a, const Rational &b);
    friend Rational operator*(const Rational &a, const Rational &b);
    friend Rational operator/(const Rational &a, const Rational &b);
    friend bool operator==(const Rational &a, const Rational &b) = default;
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

   private:
    struct Normalized {};
    constexpr Rational(int64_t num, int64_t den, Normalized) : num_(num), den_(den) {}
    friend Rational make_normalized(__int128 num, __int128 den);

    int64_t num_ = 0;
    int64_t den_ = 1;
};

/// A real parsed from user text. Keeps the exact fraction when the text was a
/// fraction ("1/129") or a decimal that fits in 64-bit integers ("0.05",
/// "1e-3"); the double is what numeric code consumes.
struct ExactReal {
    std::optional<Rational> exact;
    double value = 0;

    static ExactReal parse(std::string_view text);
    static ExactReal from(Rational r) { return {r, r.to_double()}; }
    static ExactReal from(double v) { return {std::nullopt, v}; }

    /// Fraction text when exact, otherwise shortest round-trip decimal.
    std::string str() const;
};

}  // namespace pps

#endif
