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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qmeasure {

/// Exact rational scalar used for all table values, weights and integrals.
/// Conversion from double is exact (binary expansion), so float inputs can be
/// carried through the same code path; the `exact` flags on containers record
/// whether exact comparisons are meaningful.
using Rat = boost::multiprecision::cpp_rational;

/// Complex number with exact rational parts (quantum amplitudes).
struct RatComplex {
    Rat re;
    Rat im;

    friend RatComplex operator+(const RatComplex& a, const RatComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend bool operator==(const RatComplex& a, const RatComplex& b) = default;

    Rat norm_squared() const { return re * re + im * im; }
};

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

Rat abs_rat(const Rat& r);

/// Parses "p/q", plain integers, and decimal strings ("0.5625", "-1.2e-3").
/// Throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string& text);

/// "p/q" when the denominator is not 1, plain integer otherwise.
std::string format_rational(const Rat& r);

/// Decimal string with 12 significant digits (deterministic, for CLI output).
std::string format_decimal(double v);

}  // namespace qmeasure
