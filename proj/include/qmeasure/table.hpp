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

#include <optional>
#include <vector>

#include "qmeasure/rational.hpp"
#include "qmeasure/universe.hpp"

namespace qmeasure {

/// Weighted point masses: nu(A) = sum of weights over A. Additive by
/// construction. Signed weights are allowed; `nonnegative()` distinguishes
/// genuine measures from signed ones (e.g. marginals of pair matrices).
class FiniteMeasure {
  public:
    FiniteMeasure(Universe universe, std::vector<Rat> weights);

    const Universe& universe() const { return universe_; }
    const std::vector<Rat>& weights() const { return weights_; }
    bool nonnegative() const { return nonnegative_; }

    Rat operator()(SubsetMask a) const;
    Rat total() const { return (*this)(universe_.full()); }

  private:
    Universe universe_;
    std::vector<Rat> weights_;
    bool nonnegative_;
};

/// Total assignment A -> mu(A) >= 0 over every subset of a finite universe.
/// Values are exact rationals (doubles convert exactly); `exact()` records
/// whether exact comparisons are meaningful for this table. A parallel
/// double view is kept for the large exhaustive identity sweeps.
///
/// Construction enforces mu(empty) = 0 and nonnegativity. Grade-2 additivity
/// is NOT enforced here: a table is a candidate until a check marks it
/// `grade2_verified`.
class QMeasureTable {
  public:
    QMeasureTable(Universe universe, std::vector<Rat> values, bool exact = true);

    const Universe& universe() const { return universe_; }
    int points() const { return universe_.size(); }
    std::uint32_t subset_count() const { return universe_.subset_count(); }

    const Rat& operator[](SubsetMask a) const { return values_[a.bits]; }
    const std::vector<Rat>& values() const { return values_; }
    /// Double mirror of the table, for tolerance-based sweeps.
    const std::vector<double>& value_doubles() const { return doubles_; }

    bool exact() const { return exact_; }
    bool grade2_verified() const { return grade2_verified_; }
    void mark_grade2_verified() { grade2_verified_ = true; }

    void require_same_universe(const Universe& other) const;

  private:
    Universe universe_;
    std::vector<Rat> values_;
    std::vector<double> doubles_;
    bool exact_;
    bool grade2_verified_ = false;
};

/// Largest universe for which a total table is materialized (2^18 values).
/// Subset algebra itself supports up to 24 points.
constexpr int kMaxTablePoints = 18;

/// mu(A) = evaluate of the table at A; throws on universe mismatch.
Rat evaluate(const QMeasureTable& mu, SubsetMask a);

/// mu(A) = nu(A)^2 for a nonnegative measure nu. Grade-2 additive by
/// construction (marked verified).
QMeasureTable from_measure_squared(const FiniteMeasure& nu);

/// mu(A) = |nu(A)|^2 for complex point amplitudes. The interference identity
/// mu(A u B) = mu(A) + mu(B) + 2 Re[nu(A) conj(nu(B))] holds exactly for
/// disjoint A, B.
QMeasureTable from_complex_amplitude(const Universe& universe, const std::vector<RatComplex>& amplitudes);

/// Universe {x1..xm, y1..ym, z1..zn} where each (xi, yi) annihilates:
/// mu(A) = |A| - 2 |{i : xi in A and yi in A}|.
QMeasureTable from_destructive_pairs(int pair_count, int singleton_count);

/// Additive table from point weights (grade-1, hence grade-2).
QMeasureTable to_table(const FiniteMeasure& nu);

/// Interference term mu(A u B) - mu(A) - mu(B) = 2 Re[nu(A) conj(nu(B))]
/// for disjoint sets, computed from the amplitudes.
Rat interference_term(const std::vector<RatComplex>& amplitudes, SubsetMask a, SubsetMask b);

}  // namespace qmeasure
