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

#include "qmeasure/decoherence.hpp"

#include <cmath>
#include <stdexcept>

#include "qmeasure/checks.hpp"

namespace qmeasure {

namespace {
constexpr int kMaxExhaustivePoints = 12;
}

DecoherenceMatrix::DecoherenceMatrix(Universe universe, std::vector<std::vector<std::complex<double>>> entries)
    : universe_(std::move(universe)), entries_(std::move(entries)) {
    std::size_t n = static_cast<std::size_t>(universe_.size());
    if (entries_.size() != n) throw std::invalid_argument("matrix dimension must match universe size");
    for (const auto& row : entries_)
        if (row.size() != n) throw std::invalid_argument("matrix must be square");
}

std::complex<double> DecoherenceMatrix::block_sum(SubsetMask a, SubsetMask b) const {
    std::complex<double> sum = 0.0;
    int n = universe_.size();
    for (int i = 0; i < n; ++i) {
        if (!a.contains(i)) continue;
        for (int j = 0; j < n; ++j)
            if (b.contains(j)) sum += at(i, j);
    }
    return sum;
}

DecoherenceReport decoherence_check(const DecoherenceMatrix& d, double tolerance) {
    DecoherenceReport report;
    report.notes.push_back("additivity in each slot: automatic for the atom-matrix representation");
    const Universe& u = d.universe();
    int n = u.size();
    if (n > kMaxExhaustivePoints)
        throw std::invalid_argument("universe too large for exhaustive decoherence check");

    for (int i = 0; i < n && report.hermitian; ++i) {
        for (int j = 0; j < n; ++j) {
            ++report.cases_checked;
            if (std::abs(d.at(i, j) - std::conj(d.at(j, i))) > tolerance) {
                report.hermitian = false;
                report.witness = "atoms (" + u.label(i) + "," + u.label(j) + ") are not Hermitian";
                break;
            }
        }
    }
    if (!report.hermitian) return report;

    std::uint32_t count = u.subset_count();

    // Row sums per subset, so D(A,B) accumulates in O(1) per pair.
    std::vector<std::vector<std::complex<double>>> row_sums(
        static_cast<std::size_t>(n), std::vector<std::complex<double>>(count));
    for (int i = 0; i < n; ++i) {
        auto& rs = row_sums[static_cast<std::size_t>(i)];
        for (std::uint32_t m = 1; m < count; ++m) {
            std::uint32_t low = m & (~m + 1);
            rs[m] = rs[m ^ low] + d.at(i, std::countr_zero(low));
        }
    }
    auto block = [&](std::uint32_t a, std::uint32_t b) {
        std::complex<double> sum = 0.0;
        std::uint32_t rest = a;
        while (rest) {
            std::uint32_t low = rest & (~rest + 1);
            sum += row_sums[static_cast<std::size_t>(std::countr_zero(low))][b];
            rest ^= low;
        }
        return sum;
    };

    std::vector<double> diag(count);
    for (std::uint32_t a = 0; a < count; ++a) {
        std::complex<double> daa = block(a, a);
        diag[a] = daa.real();
        ++report.cases_checked;
        if (daa.real() < -tolerance) {
            report.diagonal_nonnegative = false;
            report.witness = "D(A,A) < 0 for A=" + u.format_subset(SubsetMask{a});
            return report;
        }
    }
    for (std::uint32_t a = 0; a < count; ++a) {
        for (std::uint32_t b = 0; b < count; ++b) {
            ++report.cases_checked;
            double lhs = std::norm(block(a, b));
            if (lhs > diag[a] * diag[b] + tolerance) {
                report.cauchy_schwarz = false;
                report.witness = "|D(A,B)|^2 > D(A,A)D(B,B) for A=" + u.format_subset(SubsetMask{a}) +
                                 " B=" + u.format_subset(SubsetMask{b});
                return report;
            }
        }
    }
    return report;
}

QMeasureTable from_decoherence(const DecoherenceMatrix& d, double tolerance) {
    DecoherenceReport check = decoherence_check(d, tolerance);
    if (!check.pass())
        throw std::invalid_argument("matrix is not a decoherence functional: " + check.witness);

    const Universe& u = d.universe();
    std::uint32_t count = u.subset_count();
    std::vector<Rat> values(count);
    for (std::uint32_t m = 0; m < count; ++m) {
        double v = d.block_sum(SubsetMask{m}, SubsetMask{m}).real();
        values[m] = m == 0 ? Rat(0) : Rat(std::fabs(v) <= tolerance ? 0.0 : v);
    }
    QMeasureTable table(u, std::move(values), /*exact=*/false);

    CheckReport g2 = grade2_check(table);
    if (!g2.pass)
        throw std::logic_error("decoherence diagonal failed the grade-2 sweep: " + g2.summary());
    table.mark_grade2_verified();

    // The Cauchy-Schwarz bound forces regularity of the diagonal. It does
    // not force complete regularity: the diagonal of [[1,-1],[-1,1]] is the
    // one-pair destructive space, which is regular only.
    RegularityReport reg = regularity_check(table, tolerance);
    if (!reg.regular)
        throw std::logic_error("decoherence diagonal is not regular: " + reg.witness_regular);
    return table;
}

}  // namespace qmeasure
