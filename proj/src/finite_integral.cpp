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

#include "qmeasure/finite_integral.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qmeasure/catalog.hpp"

namespace qmeasure {

FiniteFunction::FiniteFunction(Universe universe, std::vector<Rat> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(universe_.size()))
        throw std::invalid_argument("function must be total on the universe");
}

FiniteFunction FiniteFunction::positive_part() const {
    std::vector<Rat> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] > 0 ? values_[i] : Rat(0);
    return FiniteFunction(universe_, std::move(out));
}

FiniteFunction FiniteFunction::negative_part() const {
    std::vector<Rat> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] < 0 ? Rat(-values_[i]) : Rat(0);
    return FiniteFunction(universe_, std::move(out));
}

SubsetMask FiniteFunction::support() const {
    SubsetMask s;
    for (int i = 0; i < points(); ++i)
        if (values_[static_cast<std::size_t>(i)] != 0) s = s.with(i);
    return s;
}

SubsetMask FiniteFunction::superlevel_set(const Rat& lambda) const {
    SubsetMask s;
    for (int i = 0; i < points(); ++i)
        if (values_[static_cast<std::size_t>(i)] > lambda) s = s.with(i);
    return s;
}

FiniteFunction FiniteFunction::indicator(const Universe& universe, SubsetMask a) {
    std::vector<Rat> values(static_cast<std::size_t>(universe.size()));
    for (int i = 0; i < universe.size(); ++i)
        if (a.contains(i)) values[static_cast<std::size_t>(i)] = 1;
    return FiniteFunction(universe, std::move(values));
}

FiniteFunction FiniteFunction::constant(const Universe& universe, const Rat& c) {
    return FiniteFunction(universe, std::vector<Rat>(static_cast<std::size_t>(universe.size()), c));
}

FiniteFunction FiniteFunction::operator+(const FiniteFunction& other) const {
    if (!(universe_ == other.universe_)) throw std::invalid_argument("universe mismatch");
    std::vector<Rat> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] + other.values_[i];
    return FiniteFunction(universe_, std::move(out));
}

FiniteFunction FiniteFunction::scaled(const Rat& c) const {
    std::vector<Rat> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] * c;
    return FiniteFunction(universe_, std::move(out));
}

FiniteFunction FiniteFunction::shifted(const Rat& c) const {
    std::vector<Rat> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] + c;
    return FiniteFunction(universe_, std::move(out));
}

FiniteFunction FiniteFunction::restricted_to(SubsetMask a) const {
    std::vector<Rat> out(values_.size());
    for (int i = 0; i < points(); ++i)
        if (a.contains(i)) out[static_cast<std::size_t>(i)] = values_[static_cast<std::size_t>(i)];
    return FiniteFunction(universe_, std::move(out));
}

Rat LayerFunction::evaluate(const Rat& lambda) const {
    if (lambda < 0) throw std::invalid_argument("layer function is defined on [0, inf)");
    std::size_t i = 0;
    while (i + 1 < thresholds.size() && lambda >= thresholds[i + 1]) ++i;
    if (i + 1 == thresholds.size() && !thresholds.empty() && lambda >= thresholds.back() &&
        thresholds.size() == plateaus.size())
        return plateaus.back();
    return plateaus[i];
}

Rat LayerFunction::integral() const {
    Rat sum = 0;
    for (std::size_t i = 0; i + 1 < thresholds.size(); ++i) sum += plateaus[i] * (thresholds[i + 1] - thresholds[i]);
    return sum;
}

LayerFunction layer_function(const QMeasureTable& mu, const FiniteFunction& f) {
    mu.require_same_universe(f.universe());
    // Sorted distinct positive values; equal values merge into one level.
    std::vector<Rat> levels;
    for (const auto& v : f.values())
        if (v > 0) levels.push_back(v);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    LayerFunction layer;
    layer.thresholds.push_back(Rat(0));
    for (const auto& v : levels) layer.thresholds.push_back(v);
    for (std::size_t i = 0; i + 1 < layer.thresholds.size(); ++i)
        layer.plateaus.push_back(mu[f.superlevel_set(layer.thresholds[i])]);
    layer.plateaus.push_back(Rat(0));  // beyond max f
    return layer;
}

Rat q_integral(const QMeasureTable& mu, const FiniteFunction& f) {
    mu.require_same_universe(f.universe());
    Rat positive = layer_function(mu, f.positive_part()).integral();
    Rat negative = layer_function(mu, f.negative_part()).integral();
    return positive - negative;
}

Rat q_integral_closed_form(const QMeasureTable& mu, const FiniteFunction& f) {
    mu.require_same_universe(f.universe());
    // Canonical representation: distinct positive values with their level sets.
    std::map<Rat, SubsetMask> levels;
    for (int i = 0; i < f.points(); ++i) {
        const Rat& v = f.at(i);
        if (v < 0) throw std::invalid_argument("closed form requires a nonnegative function");
        if (v > 0) levels[v] = levels[v].with(i);
    }
    std::vector<Rat> alpha;
    std::vector<SubsetMask> sets;
    for (const auto& [value, mask] : levels) {
        alpha.push_back(value);
        sets.push_back(mask);
    }

    std::size_t n = alpha.size();
    Rat total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Rat bracket = 0;
        if (i + 1 == n) {
            bracket = mu[sets[i]];
        } else {
            for (std::size_t j = i + 1; j < n; ++j) bracket += mu[sets[i] | sets[j]];
            bracket -= Rat(static_cast<long>(n - i) - 2) * mu[sets[i]];
            for (std::size_t j = i + 1; j < n; ++j) bracket -= mu[sets[j]];
        }
        total += alpha[i] * bracket;
    }
    return total;
}

Rat naive_integral(const QMeasureTable& mu, const FiniteFunction& f) {
    mu.require_same_universe(f.universe());
    std::map<Rat, SubsetMask> levels;
    for (int i = 0; i < f.points(); ++i)
        if (f.at(i) != 0) levels[f.at(i)] = levels[f.at(i)].with(i);
    Rat sum = 0;
    for (const auto& [value, mask] : levels) sum += value * mu[mask];
    return sum;
}

Rat restricted_integral(const QMeasureTable& mu, const FiniteFunction& f, SubsetMask a) {
    if (!mu.universe().valid(a)) throw std::invalid_argument("subset outside the table's universe");
    return q_integral(mu, f.restricted_to(a));
}

IntegralIdentityReport theorem44_check(const QMeasureTable& mu, const FiniteFunction& f, const FiniteFunction& g,
                                       const FiniteFunction& h) {
    SubsetMask sf = f.support(), sg = g.support(), sh = h.support();
    if (!sf.disjoint_with(sg) || !sf.disjoint_with(sh) || !sg.disjoint_with(sh))
        throw std::invalid_argument("supports must be mutually disjoint; the identity fails otherwise");

    IntegralIdentityReport report;
    report.lhs = q_integral(mu, f + g + h);
    report.rhs = q_integral(mu, f + g) + q_integral(mu, f + h) + q_integral(mu, g + h) - q_integral(mu, f) -
                 q_integral(mu, g) - q_integral(mu, h);
    report.match = report.lhs == report.rhs;
    return report;
}

Rat integral_expand(const QMeasureTable& mu, const std::vector<FiniteFunction>& fs) {
    if (fs.size() < 3 || fs.size() > 5)
        throw std::invalid_argument("expansion is exposed for 3 to 5 functions");
    SubsetMask seen;
    for (const auto& f : fs) {
        if (!f.support().disjoint_with(seen))
            throw std::invalid_argument("supports must be mutually disjoint");
        seen = seen | f.support();
    }
    Rat pairs = 0;
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j) pairs += q_integral(mu, fs[i] + fs[j]);
    Rat singles = 0;
    for (const auto& f : fs) singles += q_integral(mu, f);
    return pairs - Rat(static_cast<long>(fs.size()) - 2) * singles;
}

Grade2GapReport grade2_integral_counterexample() {
    QMeasureTable mu = catalog::quantum_coin();
    const Universe& u = mu.universe();
    FiniteFunction f = FiniteFunction::indicator(u, SubsetMask{0b0011});
    FiniteFunction g = FiniteFunction::indicator(u, SubsetMask{0b0110});
    FiniteFunction h = FiniteFunction::indicator(u, SubsetMask{0b1100});

    Grade2GapReport report;
    report.combined = q_integral(mu, f + g + h);
    report.expansion = q_integral(mu, f + g) + q_integral(mu, f + h) + q_integral(mu, g + h) - q_integral(mu, f) -
                       q_integral(mu, g) - q_integral(mu, h);
    report.gap = report.combined != report.expansion;
    return report;
}

AdditivityEquivalenceReport lemma43_check(const QMeasureTable& mu, SubsetMask a, SubsetMask b) {
    AdditivityEquivalenceReport report;
    FiniteFunction sum = FiniteFunction::indicator(mu.universe(), a) + FiniteFunction::indicator(mu.universe(), b);
    report.combined = q_integral(mu, sum);
    report.sum_of_integrals = mu[a] + mu[b];
    report.union_intersection = mu[a | b] + mu[a & b];
    if (report.combined != report.union_intersection)
        throw std::logic_error("I(chi_A + chi_B) != mu(AuB) + mu(A^B); layer integration is broken");
    report.additive = report.combined == report.sum_of_integrals;
    report.compatible = is_compatible(mu, a, b, mu.exact() ? 0.0 : 1e-9);
    if (report.additive != report.compatible)
        throw std::logic_error("integral additivity and compatibility verdicts disagree");
    return report;
}

ConvergenceFailureReport convergence_failure_demo(int max_n) {
    if (max_n < 1) throw std::invalid_argument("need at least one sequence element");
    QMeasureTable mu = catalog::null_singleton_space();
    const Universe& u = mu.universe();
    SubsetMask first_two{0b011};

    ConvergenceFailureReport report;
    FiniteFunction one = FiniteFunction::constant(u, Rat(1));
    report.naive_of_limit = naive_integral(mu, one);
    report.q_of_limit = q_integral(mu, one);
    for (int n = 1; n <= max_n; ++n) {
        FiniteFunction fn = FiniteFunction::indicator(u, first_two) +
                            FiniteFunction::indicator(u, SubsetMask::singleton(2)).scaled(Rat(n - 1, n));
        report.naive_sequence.push_back(naive_integral(mu, fn));
        report.q_sequence.push_back(q_integral(mu, fn));
    }
    report.naive_limit = 2;  // 2 - 1/n -> 2
    report.naive_converges_wrong = report.naive_limit != report.naive_of_limit;
    report.q_converges_right = report.q_sequence.back() == report.q_of_limit;
    return report;
}

bool dominates(const QMeasureTable& mu, const FiniteFunction& g, const FiniteFunction& f) {
    mu.require_same_universe(f.universe());
    mu.require_same_universe(g.universe());
    // Both layer functions are steps; compare at every breakpoint and at
    // midpoints between consecutive breakpoints.
    std::vector<Rat> grid{Rat(0)};
    for (const auto& v : f.values())
        if (v > 0) grid.push_back(v);
    for (const auto& v : g.values())
        if (v > 0) grid.push_back(v);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    std::vector<Rat> probes = grid;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) probes.push_back((grid[i] + grid[i + 1]) / 2);

    for (const auto& t : probes)
        if (mu[f.superlevel_set(t)] > mu[g.superlevel_set(t)]) return false;
    return true;
}

MonotoneConvergenceReport monotone_convergence_check(const QMeasureTable& mu,
                                                     const std::function<FiniteFunction(int)>& sequence,
                                                     const FiniteFunction& limit, const FiniteFunction& dominator,
                                                     int i_max, const Rat& tol) {
    if (i_max < 1) throw std::invalid_argument("i_max must be positive");
    MonotoneConvergenceReport report;
    report.increasing_ok = true;
    report.domination_ok = true;

    // Probe a logarithmic subsample of the sequence plus the endpoint.
    std::vector<int> probes;
    for (int i = 1; i <= i_max; i = i < 8 ? i + 1 : i * 2) probes.push_back(i);
    if (probes.back() != i_max) probes.push_back(i_max);

    FiniteFunction previous = sequence(probes.front());
    for (int i : probes) {
        FiniteFunction fi = sequence(i);
        for (int p = 0; p < fi.points(); ++p) {
            if (fi.at(p) < previous.at(p)) report.increasing_ok = false;
            if (fi.at(p) > limit.at(p)) report.increasing_ok = false;
        }
        if (!dominates(mu, dominator, fi)) report.domination_ok = false;
        report.integrals.push_back(q_integral(mu, fi));
        previous = fi;
    }
    report.limit_integral = q_integral(mu, limit);
    report.gap = abs_rat(report.integrals.back() - report.limit_integral);
    report.pass = report.increasing_ok && report.domination_ok && report.gap <= tol;
    return report;
}

}  // namespace qmeasure
