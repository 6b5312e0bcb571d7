/**
 * Copyright 2026 The qmeasure Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qmeasure/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace qmeasure {

Rat abs_rat(const Rat& r) { return r < 0 ? Rat(-r) : r; }

namespace {

using BigInt = boost::multiprecision::cpp_int;

Rat pow10(long k) {
    BigInt p = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(k < 0 ? -k : k));
    return k < 0 ? Rat(BigInt(1), p) : Rat(p);
}

}  // namespace

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    if (text.find('/') != std::string::npos) {
        try {
            return Rat(text);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed rational: " + text);
        }
    }

    // Decimal / scientific form, parsed exactly.
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    BigInt digits = 0;
    long frac_digits = 0;
    bool seen_digit = false, seen_dot = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits = digits * 10 + (c - '0');
            if (seen_dot) ++frac_digits;
            seen_digit = true;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((c == 'e' || c == 'E') && seen_digit) {
            break;
        } else {
            throw std::invalid_argument("malformed number: " + text);
        }
    }
    long exponent = 0;
    if (i < text.size()) {
        try {
            std::size_t used = 0;
            exponent = std::stol(text.substr(i + 1), &used);
            if (used != text.size() - i - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed exponent: " + text);
        }
    }
    if (!seen_digit) throw std::invalid_argument("malformed number: " + text);

    Rat value = Rat(digits) * pow10(exponent - frac_digits);
    return negative ? Rat(-value) : value;
}

std::string format_rational(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string format_decimal(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace qmeasure
