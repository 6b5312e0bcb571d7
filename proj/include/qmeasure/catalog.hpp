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

#include "qmeasure/table.hpp"

namespace qmeasure::catalog {

/// Four outcomes of flipping a fair coin twice, uniform weight 1/4 each;
/// mu(A) = nu(A)^2. Singletons measure 1/16, three-outcome events 9/16.
QMeasureTable quantum_coin();

/// The at-least-one-head event {x1,x2,x3} of the quantum coin.
SubsetMask quantum_coin_heads_event();

/// Three points with mu(empty) = mu({x1}) = 0 and mu(A) = 1 otherwise;
/// completely regular but far from additive.
QMeasureTable null_singleton_space();

/// mu(A) = |A|^3: nonnegative with mu(empty)=0 but not grade-2 additive
/// (adversarial fixture for the axiom sweeps).
QMeasureTable cube_cardinality_table(int points);

/// mu(A) = max weight in A (Sugeno-style possibility table): another
/// non-grade-2 fixture.
QMeasureTable max_weight_table(const FiniteMeasure& nu);

}  // namespace qmeasure::catalog
