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

#include "qmeasure/table.hpp"

#include <stdexcept>

namespace qmeasure {

FiniteMeasure::FiniteMeasure(Universe universe, std::vector<Rat> weights)
    : universe_(std::move(universe)), weights_(std::move(weights)) {
    if (weights_.size() != static_cast<std::size_t>(universe_.size()))
        throw std::invalid_argument("weight count must match universe size");
    nonnegative_ = true;
    for (const auto& w : weights_)
        if (w < 0) nonnegative_ = false;
}

Rat FiniteMeasure::operator()(SubsetMask a) const {
    Rat sum = 0;
    for (int i = 0; i < universe_.size(); ++i)
        if (a.contains(i)) sum += weights_[static_cast<std::size_t>(i)];
    return sum;
}

QMeasureTable::QMeasureTable(Universe universe, std::vector<Rat> values, bool exact)
    : universe_(std::move(universe)), values_(std::move(values)), exact_(exact) {
    if (universe_.size() > kMaxTablePoints)
        throw std::invalid_argument("universe too large to materialize a total table (max " +
                                    std::to_string(kMaxTablePoints) + " points)");
    if (values_.size() != universe_.subset_count())
        throw std::invalid_argument("table must assign a value to every subset");
    if (values_[0] != 0) throw std::invalid_argument("mu(empty set) must be 0");
    for (const auto& v : values_)
        if (v < 0) throw std::invalid_argument("q-measure values must be nonnegative");
    doubles_.reserve(values_.size());
    for (const auto& v : values_) doubles_.push_back(to_double(v));
}

void QMeasureTable::require_same_universe(const Universe& other) const {
    if (!(universe_ == other)) throw std::invalid_argument("universe mismatch");
}

Rat evaluate(const QMeasureTable& mu, SubsetMask a) {
    if (!mu.universe().valid(a)) throw std::invalid_argument("subset outside the table's universe");
    return mu[a];
}

namespace {

// Subset sums by dynamic programming over the lowest set bit.
std::vector<Rat> subset_sums(const Universe& universe, const std::vector<Rat>& weights) {
    std::vector<Rat> sums(universe.subset_count());
    for (std::uint32_t m = 1; m < universe.subset_count(); ++m) {
        std::uint32_t low = m & (~m + 1);
        sums[m] = sums[m ^ low] + weights[static_cast<std::size_t>(std::countr_zero(low))];
    }
    return sums;
}

}  // namespace

QMeasureTable from_measure_squared(const FiniteMeasure& nu) {
    if (!nu.nonnegative()) throw std::invalid_argument("measure has a negative weight");
    std::vector<Rat> sums = subset_sums(nu.universe(), nu.weights());
    for (auto& s : sums) s *= s;
    QMeasureTable table(nu.universe(), std::move(sums));
    table.mark_grade2_verified();
    return table;
}

QMeasureTable from_complex_amplitude(const Universe& universe, const std::vector<RatComplex>& amplitudes) {
    if (amplitudes.size() != static_cast<std::size_t>(universe.size()))
        throw std::invalid_argument("amplitude count must match universe size");
    std::vector<Rat> re, im;
    for (const auto& a : amplitudes) {
        re.push_back(a.re);
        im.push_back(a.im);
    }
    std::vector<Rat> re_sums = subset_sums(universe, re);
    std::vector<Rat> im_sums = subset_sums(universe, im);
    std::vector<Rat> values(universe.subset_count());
    for (std::uint32_t m = 0; m < universe.subset_count(); ++m)
        values[m] = re_sums[m] * re_sums[m] + im_sums[m] * im_sums[m];
    QMeasureTable table(universe, std::move(values));
    table.mark_grade2_verified();
    return table;
}

QMeasureTable from_destructive_pairs(int pair_count, int singleton_count) {
    if (pair_count < 0 || singleton_count < 0)
        throw std::invalid_argument("counts must be nonnegative");
    int n = 2 * pair_count + singleton_count;
    if (n < 1 || n > kMaxTablePoints)
        throw std::invalid_argument("universe size 2m+n out of range");

    std::vector<std::string> labels;
    for (int i = 1; i <= pair_count; ++i) labels.push_back("x" + std::to_string(i));
    for (int i = 1; i <= pair_count; ++i) labels.push_back("y" + std::to_string(i));
    for (int i = 1; i <= singleton_count; ++i) labels.push_back("z" + std::to_string(i));
    Universe universe(std::move(labels));

    std::vector<Rat> values(universe.subset_count());
    for (std::uint32_t m = 0; m < universe.subset_count(); ++m) {
        SubsetMask a{m};
        int annihilated = 0;
        for (int i = 0; i < pair_count; ++i)
            if (a.contains(i) && a.contains(pair_count + i)) ++annihilated;
        values[m] = a.size() - 2 * annihilated;
    }
    QMeasureTable table(std::move(universe), std::move(values));
    table.mark_grade2_verified();
    return table;
}

QMeasureTable to_table(const FiniteMeasure& nu) {
    if (!nu.nonnegative()) throw std::invalid_argument("measure has a negative weight");
    QMeasureTable table(nu.universe(), subset_sums(nu.universe(), nu.weights()));
    table.mark_grade2_verified();
    return table;
}

Rat interference_term(const std::vector<RatComplex>& amplitudes, SubsetMask a, SubsetMask b) {
    RatComplex na{0, 0}, nb{0, 0};
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
        if (a.contains(static_cast<int>(i))) na = na + amplitudes[i];
        if (b.contains(static_cast<int>(i))) nb = nb + amplitudes[i];
    }
    // 2 Re[nu(A) conj(nu(B))]
    return 2 * (na.re * nb.re + na.im * nb.im);
}

}  // namespace qmeasure
