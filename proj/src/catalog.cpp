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

#include "qmeasure/catalog.hpp"

#include <algorithm>

namespace qmeasure::catalog {

QMeasureTable quantum_coin() {
    Universe u = Universe::of_size(4);
    std::vector<Rat> weights(4, Rat(1, 4));
    return from_measure_squared(FiniteMeasure(u, std::move(weights)));
}

SubsetMask quantum_coin_heads_event() {
    return SubsetMask::singleton(0) | SubsetMask::singleton(1) | SubsetMask::singleton(2);
}

QMeasureTable null_singleton_space() {
    Universe u = Universe::of_size(3);
    std::vector<Rat> values(8, Rat(1));
    values[0] = 0;
    values[SubsetMask::singleton(0).bits] = 0;
    return QMeasureTable(std::move(u), std::move(values));
}

QMeasureTable cube_cardinality_table(int points) {
    Universe u = Universe::of_size(points);
    std::vector<Rat> values(u.subset_count());
    for (std::uint32_t m = 0; m < u.subset_count(); ++m) {
        int k = SubsetMask{m}.size();
        values[m] = Rat(k * k * k);
    }
    return QMeasureTable(std::move(u), std::move(values));
}

QMeasureTable max_weight_table(const FiniteMeasure& nu) {
    std::vector<Rat> values(nu.universe().subset_count());
    for (std::uint32_t m = 1; m < nu.universe().subset_count(); ++m) {
        Rat best = 0;
        for (int i = 0; i < nu.universe().size(); ++i)
            if (SubsetMask{m}.contains(i)) best = std::max(best, nu.weights()[static_cast<std::size_t>(i)]);
        values[m] = best;
    }
    return QMeasureTable(nu.universe(), std::move(values));
}

}  // namespace qmeasure::catalog
