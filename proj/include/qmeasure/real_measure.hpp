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

#include <string>

#include "qmeasure/interval.hpp"

namespace qmeasure {

enum class RealMeasureKind {
    lebesgue,          // nu(A): ordinary length (grade-1)
    q_lebesgue,        // nu(A)^2
    destructive_shift  // nu(A) - 2 nu(A ^ (A shifted left by s))
};

/// The measure families on interval unions of [0,1]. Evaluation is exact on
/// rational-endpoint unions and available on the double instantiation for
/// the quadrature loop. For the destructive family a negative value is a
/// data error (nonnegativity is checked on every evaluation, not assumed).
class RealQMeasure {
  public:
    static RealQMeasure lebesgue() { return RealQMeasure(RealMeasureKind::lebesgue, Rat(0)); }
    static RealQMeasure q_lebesgue() { return RealQMeasure(RealMeasureKind::q_lebesgue, Rat(0)); }
    static RealQMeasure destructive(Rat shift = Rat(3, 4));

    RealMeasureKind kind() const { return kind_; }
    const Rat& shift() const { return shift_; }
    std::string name() const;

    Rat operator()(const IntervalUnion& a) const;
    double operator()(const IntervalUnionD& a) const;

  private:
    RealQMeasure(RealMeasureKind kind, Rat shift) : kind_(kind), shift_(std::move(shift)) {}

    RealMeasureKind kind_;
    Rat shift_;
};

}  // namespace qmeasure
