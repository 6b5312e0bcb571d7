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

#include "qmeasure/real_measure.hpp"

#include <cmath>
#include <stdexcept>

namespace qmeasure {

RealQMeasure RealQMeasure::destructive(Rat shift) {
    if (shift <= 0 || shift >= 1) throw std::invalid_argument("destructive shift must lie in (0,1)");
    return RealQMeasure(RealMeasureKind::destructive_shift, std::move(shift));
}

std::string RealQMeasure::name() const {
    switch (kind_) {
        case RealMeasureKind::lebesgue: return "lebesgue";
        case RealMeasureKind::q_lebesgue: return "qlebesgue";
        case RealMeasureKind::destructive_shift: return "destructive:" + format_decimal(to_double(shift_));
    }
    return "?";
}

namespace {

template <class S>
S evaluate_measure(RealMeasureKind kind, const S& shift, const BasicIntervalUnion<S>& a) {
    switch (kind) {
        case RealMeasureKind::lebesgue:
            return a.length();
        case RealMeasureKind::q_lebesgue: {
            S len = a.length();
            return len * len;
        }
        case RealMeasureKind::destructive_shift: {
            // {x in A : x + s in A} = A ^ (A shifted left by s)
            BasicIntervalUnion<S> paired = a & a.translated(S(0) - shift);
            return a.length() - S(2) * paired.length();
        }
    }
    return S(0);
}

}  // namespace

Rat RealQMeasure::operator()(const IntervalUnion& a) const {
    Rat value = evaluate_measure<Rat>(kind_, shift_, a);
    if (value < 0)
        throw std::domain_error("destructive measure evaluated negative; data error in the set construction");
    return value;
}

double RealQMeasure::operator()(const IntervalUnionD& a) const {
    double value = evaluate_measure<double>(kind_, to_double(shift_), a);
    if (value < -1e-12)
        throw std::domain_error("destructive measure evaluated negative; data error in the set construction");
    return std::max(value, 0.0);
}

}  // namespace qmeasure
