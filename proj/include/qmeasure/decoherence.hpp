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

#include <complex>
#include <vector>

#include "qmeasure/report.hpp"
#include "qmeasure/table.hpp"

namespace qmeasure {

/// Set-pair functional given by its point atoms D({x_i},{x_j});
/// D(A,B) = sum over (i,j) in A x B. Additivity in each slot is automatic
/// from the sum representation; Hermiticity, diagonal nonnegativity and the
/// Cauchy-Schwarz bound are checked by `decoherence_check`.
class DecoherenceMatrix {
  public:
    DecoherenceMatrix(Universe universe, std::vector<std::vector<std::complex<double>>> entries);

    const Universe& universe() const { return universe_; }
    int dim() const { return universe_.size(); }
    const std::complex<double>& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    std::complex<double> block_sum(SubsetMask a, SubsetMask b) const;

  private:
    Universe universe_;
    std::vector<std::vector<std::complex<double>>> entries_;
};

struct DecoherenceReport {
    bool hermitian = true;           // D(A,B) = conj(D(B,A)) on atoms
    bool diagonal_nonnegative = true;  // D(A,A) >= 0 for every subset
    bool cauchy_schwarz = true;      // |D(A,B)|^2 <= D(A,A) D(B,B)
    std::string witness;             // first failing atom pair or subset pair
    std::uint64_t cases_checked = 0;
    std::vector<std::string> notes;

    bool pass() const { return hermitian && diagonal_nonnegative && cauchy_schwarz; }
};

/// Verifies Hermiticity on the atoms, then diagonal nonnegativity and the
/// Cauchy-Schwarz bound over all subset pairs (exhaustive; at most 12
/// points). Additivity in each slot holds by the matrix representation and
/// is recorded as a note.
DecoherenceReport decoherence_check(const DecoherenceMatrix& d, double tolerance = 1e-9);

/// mu(A) = D(A,A) (real by Hermiticity). Requires the matrix to pass
/// `decoherence_check`; the result is grade-2 checked and must pass the
/// regularity sweep, which the Cauchy-Schwarz bound guarantees. Complete
/// regularity does NOT follow from (7)-(10) and is not enforced: the
/// diagonal of [[1,-1],[-1,1]] is the one-pair destructive space.
QMeasureTable from_decoherence(const DecoherenceMatrix& d, double tolerance = 1e-9);

}  // namespace qmeasure
