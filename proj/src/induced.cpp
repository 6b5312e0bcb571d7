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

#include "qmeasure/induced.hpp"

#include <stdexcept>

#include "qmeasure/catalog.hpp"

namespace qmeasure {

InducedQMeasure induce(const QMeasureTable& mu, const FiniteFunction& density) {
    mu.require_same_universe(density.universe());
    for (const auto& v : density.values())
        if (v < 0) throw std::invalid_argument("density must be nonnegative");

    std::uint32_t count = mu.subset_count();
    std::vector<Rat> values(count);
    for (std::uint32_t m = 1; m < count; ++m) values[m] = restricted_integral(mu, density, SubsetMask{m});

    QMeasureTable table(mu.universe(), std::move(values), mu.exact());
    CheckReport g2 = grade2_check(table);
    if (g2.pass) table.mark_grade2_verified();
    return {std::move(table), std::move(g2)};
}

bool InheritanceReport::pass() const {
    if (!induced_is_q_measure) return false;
    if (base_regular && !induced_regular) return false;
    if (base_completely_regular && !induced_completely_regular) return false;
    if (base_completely_regular && !absolutely_continuous) return false;
    return true;
}

InheritanceReport theorem53_check(const QMeasureTable& mu, const FiniteFunction& density) {
    InheritanceReport report;
    report.notes.push_back("layer-bound hypothesis: automatic on finite spaces (take the max of the table)");

    InducedQMeasure induced = induce(mu, density);
    report.induced_is_q_measure = induced.grade2.pass;
    if (!report.induced_is_q_measure) report.witness = induced.grade2.witness;

    double tol = mu.exact() ? 1e-15 : 1e-9;
    RegularityReport base = regularity_check(mu, tol);
    RegularityReport derived = regularity_check(induced.table, tol);
    report.base_regular = base.regular;
    report.induced_regular = derived.regular;
    report.base_completely_regular = base.completely_regular;
    report.induced_completely_regular = derived.completely_regular;
    if (base.regular && !derived.regular && report.witness.empty()) report.witness = derived.witness_regular;
    if (base.completely_regular && !derived.completely_regular && report.witness.empty())
        report.witness = derived.witness_complete;

    if (base.completely_regular) {
        for (std::uint32_t m = 0; m < mu.subset_count(); ++m) {
            if (mu[SubsetMask{m}] == 0 && induced.table[SubsetMask{m}] != 0) {
                report.absolutely_continuous = false;
                if (report.witness.empty())
                    report.witness = "mu(A)=0 but mu1(A)>0 for A=" + mu.universe().format_subset(SubsetMask{m});
                break;
            }
        }
    }
    return report;
}

RadonNikodymReport radon_nikodym_counterexample() {
    RadonNikodymReport report;
    QMeasureTable mu = catalog::null_singleton_space();
    const Universe& u = mu.universe();

    // nu(x1) = 0, nu(x2) = nu(x3) = 1, extended additively.
    FiniteMeasure nu(u, {Rat(0), Rat(1), Rat(1)});
    QMeasureTable nu_table = to_table(nu);

    report.absolutely_continuous = true;
    for (std::uint32_t m = 0; m < mu.subset_count(); ++m)
        if (mu[SubsetMask{m}] == 0 && nu_table[SubsetMask{m}] != 0) report.absolutely_continuous = false;

    // The singleton equations force the density: integrating any f over a
    // singleton gives f(x) mu({x}).
    SubsetMask x2 = SubsetMask::singleton(1), x3 = SubsetMask::singleton(2);
    report.forced_x2 = nu_table[x2] / mu[x2];
    report.forced_x3 = nu_table[x3] / mu[x3];

    FiniteFunction forced(u, {Rat(0), report.forced_x2, report.forced_x3});
    report.nu_pair = nu_table[x2 | x3];
    report.integral_pair = restricted_integral(mu, forced, x2 | x3);
    report.contradiction = report.nu_pair != report.integral_pair;

    // Illustrative sweep: no density on the 31^3 grid represents nu either.
    for (int a = 0; a <= 30; ++a) {
        for (int b = 0; b <= 30; ++b) {
            for (int c = 0; c <= 30; ++c) {
                ++report.grid_candidates;
                FiniteFunction f(u, {Rat(a, 10), Rat(b, 10), Rat(c, 10)});
                bool represents = true;
                for (std::uint32_t m = 1; m < mu.subset_count() && represents; ++m)
                    represents = restricted_integral(mu, f, SubsetMask{m}) == nu_table[SubsetMask{m}];
                if (represents) ++report.grid_representers;
            }
        }
    }
    return report;
}

}  // namespace qmeasure
