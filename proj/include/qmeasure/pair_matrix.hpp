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

#include <vector>

#include "qmeasure/table.hpp"

namespace qmeasure {

/// Symmetric signed measure on X x X given by its point atoms
/// lambda_ij = lambda({x_i} x {x_j}). Symmetry is enforced at construction;
/// diagonal positivity (sum over A x A nonnegative for every subset A) is
/// checked when a table is built from the matrix.
class PairMeasureMatrix {
  public:
    PairMeasureMatrix(Universe universe, std::vector<std::vector<Rat>> entries);

    const Universe& universe() const { return universe_; }
    int dim() const { return universe_.size(); }
    const Rat& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    const std::vector<std::vector<Rat>>& entries() const { return entries_; }

    /// lambda(A x A) = sum of entries over A x A.
    Rat diagonal_block_sum(SubsetMask a) const;

  private:
    Universe universe_;
    std::vector<std::vector<Rat>> entries_;
};

/// mu(A) = lambda(A x A). Throws (with the witnessing subset) if some
/// diagonal block sum is negative. The result is grade-2 checked rather than
/// assumed; a failure would indicate an internal error and throws.
QMeasureTable from_pair_matrix(const PairMeasureMatrix& lambda);

/// The unique atom matrix of a grade-2 additive table:
/// lambda_ii = mu({x_i}), lambda_ij = [mu({x_i,x_j}) - mu({x_i}) - mu({x_j})] / 2.
/// Throws if mu fails grade-2 additivity (the round trip would not close).
PairMeasureMatrix recover_pair_matrix(const QMeasureTable& mu);

/// Marginal signed measure nu1(A) = lambda(A x X): weights[i] = sum_j lambda_ij.
FiniteMeasure marginal_measure(const PairMeasureMatrix& lambda);

}  // namespace qmeasure
