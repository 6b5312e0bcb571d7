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

#include "qmeasure/finite_integral.hpp"

namespace qmeasure {

/// The set function A -> integral of the density over A, with its full
/// derived table. On finite spaces the boundedness hypothesis (a dominating
/// integrable layer bound) is automatic and recorded as a note.
struct InducedQMeasure {
    QMeasureTable table;
    CheckReport grade2;  // run at construction and recorded
};

/// Builds mu1(A) = integral over A of f d(mu) for a nonnegative density f.
InducedQMeasure induce(const QMeasureTable& mu, const FiniteFunction& density);

struct InheritanceReport {
    bool induced_is_q_measure = false;   // grade-2 sweep on the derived table
    bool base_regular = false;
    bool induced_regular = false;        // meaningful when base_regular
    bool base_completely_regular = false;
    bool induced_completely_regular = false;
    bool absolutely_continuous = true;   // mu(A)=0 => mu1(A)=0, when base CR
    std::string witness;
    std::vector<std::string> notes;

    bool pass() const;
};

/// Inheritance of regularity and absolute continuity by the induced
/// measure: regular base gives a regular induced measure, completely
/// regular base additionally gives complete regularity and mu1 << mu.
InheritanceReport theorem53_check(const QMeasureTable& mu, const FiniteFunction& density);

struct RadonNikodymReport {
    bool absolutely_continuous = false;  // nu << mu on the three-point space
    Rat forced_x2;                       // density value forced at x2 (= 1)
    Rat forced_x3;                       // density value forced at x3 (= 1)
    Rat nu_pair;                         // nu({x2,x3}) = 2
    Rat integral_pair;                   // integral of the forced density over {x2,x3} = 1
    bool contradiction = false;          // the two differ: no density exists
    std::uint64_t grid_candidates = 0;
    std::uint64_t grid_representers = 0;  // must be 0
};

/// No density can represent nu(x1)=0, nu(x2)=nu(x3)=1 against the
/// null-singleton q-measure, although nu << mu: the singleton equations
/// force f(x2)=f(x3)=1, yet the integral over {x2,x3} is 1, not 2. A grid
/// search over densities (a,b,c) in {0, 1/10, ..., 3}^3 confirms no
/// candidate reproduces nu on all eight subsets (illustrative; the forced
/// argument is the authoritative one).
RadonNikodymReport radon_nikodym_counterexample();

}  // namespace qmeasure
