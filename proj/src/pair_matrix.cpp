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

#include "qmeasure/pair_matrix.hpp"

#include <stdexcept>

#include "qmeasure/checks.hpp"

namespace qmeasure {

PairMeasureMatrix::PairMeasureMatrix(Universe universe, std::vector<std::vector<Rat>> entries)
    : universe_(std::move(universe)), entries_(std::move(entries)) {
    std::size_t n = static_cast<std::size_t>(universe_.size());
    if (entries_.size() != n) throw std::invalid_argument("matrix dimension must match universe size");
    for (const auto& row : entries_)
        if (row.size() != n) throw std::invalid_argument("matrix must be square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (entries_[i][j] != entries_[j][i])
                throw std::invalid_argument("pair matrix must be symmetric (entry " + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
}

Rat PairMeasureMatrix::diagonal_block_sum(SubsetMask a) const {
    Rat sum = 0;
    int n = universe_.size();
    for (int i = 0; i < n; ++i) {
        if (!a.contains(i)) continue;
        for (int j = 0; j < n; ++j)
            if (a.contains(j)) sum += at(i, j);
    }
    return sum;
}

QMeasureTable from_pair_matrix(const PairMeasureMatrix& lambda) {
    const Universe& u = lambda.universe();
    int n = u.size();
    std::uint32_t count = u.subset_count();

    // Row sums over subsets, then the block sums, both by lowest-bit DP:
    // lambda((A+i) x (A+i)) = lambda(A x A) + 2 row_i(A) + lambda_ii.
    std::vector<std::vector<Rat>> row_sums(static_cast<std::size_t>(n), std::vector<Rat>(count));
    for (int i = 0; i < n; ++i) {
        auto& rs = row_sums[static_cast<std::size_t>(i)];
        for (std::uint32_t m = 1; m < count; ++m) {
            std::uint32_t low = m & (~m + 1);
            rs[m] = rs[m ^ low] + lambda.at(i, std::countr_zero(low));
        }
    }
    std::vector<Rat> values(count);
    for (std::uint32_t m = 1; m < count; ++m) {
        std::uint32_t low = m & (~m + 1);
        int i = std::countr_zero(low);
        values[m] = values[m ^ low] + 2 * row_sums[static_cast<std::size_t>(i)][m ^ low] + lambda.at(i, i);
    }

    for (std::uint32_t m = 0; m < count; ++m)
        if (values[m] < 0)
            throw std::invalid_argument("pair matrix is not diagonally positive: lambda(AxA) < 0 for A=" +
                                        u.format_subset(SubsetMask{m}));

    QMeasureTable table(u, std::move(values));
    CheckReport g2 = grade2_check(table);
    if (!g2.pass)
        throw std::logic_error("table built from a pair matrix failed the grade-2 sweep: " + g2.summary());
    table.mark_grade2_verified();
    return table;
}

PairMeasureMatrix recover_pair_matrix(const QMeasureTable& mu) {
    CheckReport g2 = grade2_check(mu);
    if (!g2.pass)
        throw std::invalid_argument("table is not grade-2 additive; no atom matrix exists (" + g2.witness + ")");

    int n = mu.points();
    std::vector<std::vector<Rat>> entries(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = mu[SubsetMask::singleton(i)];
        for (int j = i + 1; j < n; ++j) {
            Rat off = (mu[SubsetMask::singleton(i) | SubsetMask::singleton(j)] - mu[SubsetMask::singleton(i)] -
                       mu[SubsetMask::singleton(j)]) /
                      2;
            entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = off;
            entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = off;
        }
    }
    return PairMeasureMatrix(mu.universe(), std::move(entries));
}

FiniteMeasure marginal_measure(const PairMeasureMatrix& lambda) {
    int n = lambda.universe().size();
    std::vector<Rat> weights(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rat sum = 0;
        for (int j = 0; j < n; ++j) sum += lambda.at(i, j);
        weights[static_cast<std::size_t>(i)] = sum;
    }
    return FiniteMeasure(lambda.universe(), std::move(weights));
}

}  // namespace qmeasure
