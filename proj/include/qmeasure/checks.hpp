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

#include "qmeasure/report.hpp"
#include "qmeasure/table.hpp"

namespace qmeasure {

/// Shared knobs for the axiom sweeps. Identities are evaluated on the
/// table's double view with an absolute tolerance; sweeps are exhaustive up
/// to `exhaustive_max_points` and seeded-random beyond.
struct CheckConfig {
    double tolerance = 1e-9;
    int exhaustive_max_points = 12;
    std::uint64_t sample_count = 1'000'000;
    std::uint64_t seed = 1729;
};

/// Grade-2 additivity over every (A,B,C,rest) assignment of the points:
/// mu(AuBuC) = mu(AuB) + mu(AuC) + mu(BuC) - mu(A) - mu(B) - mu(C)
/// for mutually disjoint A, B, C. Continuity on monotone sequences is
/// recorded as satisfied by finiteness.
CheckReport grade2_check(const QMeasureTable& mu, const CheckConfig& config = {});

/// Grade-n additivity: over n_grade+1 mutually disjoint sets,
/// mu(union) = sum_{k=n_grade..1} (-1)^(n_grade-k) sum_{|S|=k} mu(union over S).
CheckReport graden_check(const QMeasureTable& mu, int n_grade, const CheckConfig& config = {});

/// The pair identity
/// mu(AuB) = mu(A)+mu(B)-mu(A^B) + mu(A delta B) - mu(A^B') - mu(A'^B)
/// over all (not necessarily disjoint) pairs; equivalent to grade-2
/// additivity, and the report records that both verdicts agree.
CheckReport theorem21_check(const QMeasureTable& mu, const CheckConfig& config = {});

/// Expansion of a disjoint union into pairwise unions:
/// sum_{i<j} mu(Ai u Aj) - (n-2) sum_i mu(Ai). Equals mu(union of parts)
/// when mu is grade-2 additive. Throws if parts are not mutually disjoint.
Rat disjoint_union_expand(const QMeasureTable& mu, const std::vector<SubsetMask>& parts);

/// A and B do not interfere: mu(AuB) = mu(A) + mu(B) - mu(A^B).
/// The equivalent symmetric-difference form is cross-checked; for a table
/// that is not grade-2 additive the two forms can disagree, which throws.
bool is_compatible(const QMeasureTable& mu, SubsetMask a, SubsetMask b, double tolerance = 1e-9);

/// All sets compatible with every set (exhaustive; universe of at most 12
/// points). Always contains the empty set and X; for a q-measure the result
/// is an algebra.
std::vector<SubsetMask> mu_center(const QMeasureTable& mu, double tolerance = 1e-9);

/// mu(B) = mu(B ^ A) + mu(B ^ A') for every B.
bool is_splitting(const QMeasureTable& mu, SubsetMask a, double tolerance = 1e-9);

/// Splitting sets coincide with the center; mu restricted to the center is
/// additive on disjoint pairs; and for disjoint A1..Ak in the center
/// (k <= 3) and any B, mu(union of B^Ai) = sum mu(B^Ai).
CheckReport center_measure_check(const QMeasureTable& mu, const CheckConfig& config = {});

struct RegularityReport {
    bool regular = true;
    bool completely_regular = true;
    std::string witness_regular;    // first violation of either regularity clause
    std::string witness_complete;   // first null set with a non-null subset
    std::uint64_t cases_checked = 0;
};

/// Regularity: mu(A)=0 implies mu(AuB)=mu(B) for disjoint B, and
/// mu(AuB)=0 implies mu(A)=mu(B). Complete regularity additionally
/// propagates null sets to subsets.
RegularityReport regularity_check(const QMeasureTable& mu, double tolerance = 1e-9);

struct EquivalenceReport {
    bool equivalent = true;       // (a) <=> (b) <=> (c) held for every subset
    std::string witness;          // first subset where the three disagree
    std::uint64_t cases_checked = 0;
};

/// For every A, compares (a) A in the center, (b) A compatible with its
/// complement, (c) mu(A) + mu(A') = total. `total` is a parameter: it equals
/// mu(X) for the destructive-pair families.
EquivalenceReport theorem24_check(const QMeasureTable& mu, const Rat& total, double tolerance = 1e-9);

}  // namespace qmeasure
