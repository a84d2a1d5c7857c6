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

#include "pps/rational.h"

#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pps {
namespace {

int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < -INT64_MAX) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    return static_cast<int64_t>(v);
}

}  // namespace

Rational make_normalized(__int128 num, __int128 den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return Rational(narrow(num), narrow(den), Rational::Normalized{});
}

namespace {

Rational make(__int128 num, __int128 den) { return make_normalized(num, den); }

bool parse_int(std::string_view text, int64_t &out) {
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size() && !text.empty();
}

// Parses [sign]digits[.digits][e[sign]digits] exactly; nullopt when the value
// does not fit or the text is not of that form.
std::optional<Rational> parse_decimal(std::string_view text) {
    size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        i++;
    }
    __int128 mantissa = 0;
    int exponent = 0;
    bool any_digit = false;
    bool seen_point = false;
    for (; i < text.size(); i++) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            any_digit = true;
            mantissa = mantissa * 10 + (c - '0');
            if (mantissa > INT64_MAX) {
                return std::nullopt;
            }
            if (seen_point) {
                exponent--;
            }
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!any_digit) {
        return std::nullopt;
    }
    if (i < text.size()) {
        if (text[i] != 'e' && text[i] != 'E') {
            return std::nullopt;
        }
        int64_t e = 0;
        if (!parse_int(text.substr(i + 1), e) || e > 40 || e < -40) {
            return std::nullopt;
        }
        exponent += static_cast<int>(e);
    }
    __int128 num = negative ? -mantissa : mantissa;
    __int128 den = 1;
    for (; exponent > 0; exponent--) {
        num *= 10;
        if (num > INT64_MAX || num < -INT64_MAX) {
            return std::nullopt;
        }
    }
    for (; exponent < 0; exponent++) {
        den *= 10;
        if (den > INT64_MAX) {
            return std::nullopt;
        }
    }
    try {
        return make(num, den);
    } catch (const std::overflow_error &) {
        return std::nullopt;
    }
}

}  // namespace

Rational::Rational(int64_t num, int64_t den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    *this = make(num, den);
}

std::string Rational::str() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational &a, const Rational &b) {
    return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational &a, const Rational &b) {
    return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational &a, const Rational &b) {
    return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational &a, const Rational &b) {
    if (b.num_ == 0) {
        throw std::domain_error("rational division by zero");
    }
    return make(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
}

ExactReal ExactReal::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw std::invalid_argument("empty number");
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        int64_t num = 0;
        int64_t den = 0;
        if (!parse_int(text.substr(0, slash), num) || !parse_int(text.substr(slash + 1), den)) {
            throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
        }
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
        return from(Rational(num, den));
    }
    if (auto exact = parse_decimal(text)) {
        return from(*exact);
    }
    double v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
    return from(v);
}

std::string ExactReal::str() const {
    if (exact) {
        return exact->str();
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

}  // namespace pps
