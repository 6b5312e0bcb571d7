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

#include "qmeasure/real_integral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qmeasure {

namespace {

// Candidate kink positions of the layer function on the lambda axis:
// images of piece/domain boundaries, shift-adjusted for destructive
// measures (the pair-overlap structure changes where a boundary crosses
// another boundary shifted by s).
std::vector<double> layer_breakpoints(const RealQMeasure& mu, const PiecewiseMonotone& f,
                                      const IntervalUnionD& domain, bool negative_part) {
    std::vector<double> xs = f.breakpoints();
    for (const auto& p : domain.pieces()) {
        xs.push_back(p.lo);
        xs.push_back(p.hi);
    }
    if (mu.kind() == RealMeasureKind::destructive_shift) {
        double s = to_double(mu.shift());
        std::vector<double> shifted;
        for (double x : xs) {
            shifted.push_back(x + s);
            shifted.push_back(x - s);
        }
        xs.insert(xs.end(), shifted.begin(), shifted.end());
    }
    std::vector<double> lambdas;
    for (double x : xs) {
        if (x < 0.0 || x > 1.0) continue;
        double v = f(x);
        lambdas.push_back(negative_part ? -v : v);
    }
    return lambdas;
}

std::vector<double> split_points(std::vector<double> candidates, double sup) {
    candidates.push_back(0.0);
    candidates.push_back(sup);
    std::vector<double> out;
    std::sort(candidates.begin(), candidates.end());
    for (double c : candidates) {
        if (c < 0.0 || c > sup) continue;
        if (out.empty() || c - out.back() > 1e-14 * std::max(1.0, sup)) out.push_back(c);
    }
    if (out.empty() || out.back() < sup) out.push_back(sup);
    return out;
}

// Integrates a layer function over the pre-split segments with the
// tolerance divided evenly and a shared evaluation budget.
QuadratureResult integrate_layer(const std::function<double(double)>& g, const std::vector<double>& splits,
                                 double tolerance, std::uint64_t max_evaluations) {
    QuadratureResult total;
    std::size_t segments = splits.size() > 1 ? splits.size() - 1 : 0;
    if (segments == 0) return total;
    double per_segment = tolerance / static_cast<double>(segments);
    for (std::size_t i = 0; i + 1 < splits.size(); ++i) {
        if (total.evaluations >= max_evaluations)
            throw QuadratureBudgetExceeded("quadrature budget exhausted between segments");
        QuadratureResult part =
            adaptive_simpson(g, splits[i], splits[i + 1], per_segment, max_evaluations - total.evaluations);
        total.value += part.value;
        total.error_estimate += part.error_estimate;
        total.evaluations += part.evaluations;
    }
    return total;
}

}  // namespace

QuadratureResult q_integral_real(const RealQMeasure& mu, const PiecewiseMonotone& f, const IntervalUnionD& domain,
                                 double tolerance, std::uint64_t max_evaluations) {
    if (tolerance <= 0.0) throw std::invalid_argument("tolerance must be positive");
    QuadratureResult result;
    if (domain.is_empty()) return result;

    double sup = f.sup_on(domain);
    double inf = f.inf_on(domain);

    if (sup > 0.0) {
        auto g = [&](double lambda) { return mu(superlevel_set(f, std::max(lambda, 0.0), domain)); };
        std::vector<double> splits = split_points(layer_breakpoints(mu, f, domain, false), sup);
        QuadratureResult positive = integrate_layer(g, splits, tolerance / 2.0, max_evaluations);
        result.value += positive.value;
        result.error_estimate += positive.error_estimate;
        result.evaluations += positive.evaluations;
    }
    if (inf < 0.0) {
        auto h = [&](double lambda) { return mu(sublevel_set(f, -std::max(lambda, 0.0), domain)); };
        std::vector<double> splits = split_points(layer_breakpoints(mu, f, domain, true), -inf);
        QuadratureResult negative =
            integrate_layer(h, splits, tolerance / 2.0, max_evaluations - result.evaluations);
        result.value -= negative.value;
        result.error_estimate += negative.error_estimate;
        result.evaluations += negative.evaluations;
    }
    return result;
}

namespace {

// Exact quadratic-segment integration: fit the parabola through the three
// interior quarter points, integrate it, and validate the fit at an eighth
// point. A mismatch means the segment holds a kink; split and retry.
Rat exact_quadratic_segment(const std::function<Rat(const Rat&)>& g, const Rat& a, const Rat& b, int depth) {
    if (depth > 40)
        throw std::logic_error("layer function is not piecewise quadratic on the candidate segments");
    Rat h = (b - a) / 4;
    Rat v1 = g(a + h), v2 = g(a + 2 * h), v3 = g(a + 3 * h);
    // Parabola p(t) with t in units of h around the midpoint.
    // Validation at t = -3/2 (x = a + h/2):
    Rat predicted = v2 - Rat(3, 4) * (v3 - v1) + Rat(9, 8) * (v1 - 2 * v2 + v3);
    if (predicted != g(a + h / 2)) {
        Rat m = (a + b) / 2;
        return exact_quadratic_segment(g, a, m, depth + 1) + exact_quadratic_segment(g, m, b, depth + 1);
    }
    // Open 3-point rule: integral over [a,b] = (b-a)(2 v1 - v2 + 2 v3)/3.
    return (b - a) * (2 * v1 - v2 + 2 * v3) / 3;
}

}  // namespace

Rat exact_identity_integral(const RealQMeasure& mu, const Rat& y) {
    if (y <= 0 || y > 1) throw std::invalid_argument("upper endpoint must lie in (0,1]");
    auto g = [&](const Rat& lambda) { return mu(IntervalUnion::interval(lambda, y, y == 1)); };

    std::vector<Rat> candidates{Rat(0), y};
    if (mu.kind() == RealMeasureKind::destructive_shift) {
        const Rat& s = mu.shift();
        for (const Rat& c : std::vector<Rat>{Rat(y - s), s, Rat(1 - s)})
            if (c > 0 && c < y) candidates.push_back(c);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    Rat total = 0;
    for (std::size_t i = 0; i + 1 < candidates.size(); ++i)
        total += exact_quadratic_segment(g, candidates[i], candidates[i + 1], 0);
    return total;
}

double monomial_integral_closed(int n, double y) {
    if (n < 0) throw std::invalid_argument("monomial degree must be nonnegative");
    return 2.0 * std::pow(y, n + 2) / (static_cast<double>(n + 1) * static_cast<double>(n + 2));
}

Rat monomial_integral_closed_rat(int n, const Rat& y) {
    if (n < 0) throw std::invalid_argument("monomial degree must be nonnegative");
    Rat power = 1;
    for (int i = 0; i < n + 2; ++i) power *= y;
    return 2 * power / Rat((n + 1) * (n + 2));
}

double exp_integral_closed(double y) {
    if (y <= 0.0) return 0.0;
    return 2.0 * (std::exp(y) - y - 1.0);
}

SurpriseAdditivityReport surprise_additivity_check(double y, double tolerance, double quad_tolerance) {
    SurpriseAdditivityReport report;
    QuadratureResult quad = q_integral_real(RealQMeasure::q_lebesgue(), PiecewiseMonotone::quadratic_plus_linear(),
                                            IntervalUnionD::interval(0.0, y, y == 1.0), quad_tolerance);
    report.computed = quad.value;
    report.evaluations = quad.evaluations;
    report.expected = monomial_integral_closed(2, y) + monomial_integral_closed(1, y);
    report.deviation = std::fabs(report.computed - report.expected);
    report.pass = report.deviation <= tolerance;
    return report;
}

FtcReport quantum_ftc_check(const PiecewiseMonotone& f, const std::vector<double>& grid, double h, double tolerance,
                            double quad_tolerance) {
    if (!f.is_monotone())
        throw std::invalid_argument("second-difference check requires a monotone integrand");
    if (h <= 0.0) throw std::invalid_argument("step must be positive");

    FtcReport report;
    RealQMeasure mu = RealQMeasure::q_lebesgue();
    auto accumulated = [&](double y) {
        return q_integral_real(mu, f, IntervalUnionD::interval(0.0, y, y == 1.0), quad_tolerance).value;
    };
    for (double y : grid) {
        if (!(y > 2.0 * h && y < 1.0 - 2.0 * h))
            throw std::invalid_argument("grid point outside (2h, 1-2h)");
        double second = (accumulated(y + h) - 2.0 * accumulated(y) + accumulated(y - h)) / (h * h);
        double error = std::fabs(0.5 * second - f(y));
        report.per_point.push_back({y, error});
        report.max_error = std::max(report.max_error, error);
    }
    report.pass = report.max_error <= tolerance;
    return report;
}

DominationReport mu_domination_check(const RealQMeasure& mu, const PiecewiseMonotone& f, const PiecewiseMonotone& g,
                                     const IntervalUnionD& domain, std::vector<double> extra_grid) {
    DominationReport report;
    std::vector<double> grid = extra_grid;
    for (const PiecewiseMonotone* fn : {&f, &g})
        for (double x : fn->breakpoints()) grid.push_back((*fn)(x));
    grid.push_back(0.0);
    grid.push_back(std::max(f.sup_on(domain), g.sup_on(domain)));

    std::sort(grid.begin(), grid.end());
    grid.erase(std::remove_if(grid.begin(), grid.end(), [](double v) { return v < 0.0; }), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end(), [](double a, double b) { return std::fabs(a - b) < 1e-14; }),
               grid.end());
    std::vector<double> probes = grid;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) probes.push_back(0.5 * (grid[i] + grid[i + 1]));

    for (double lambda : probes) {
        ++report.checked;
        double mf = mu(superlevel_set(f, lambda, domain));
        double mg = mu(superlevel_set(g, lambda, domain));
        if (mf > mg + 1e-12) {
            report.dominates = false;
            report.witness_lambda = lambda;
            return report;
        }
    }
    return report;
}

double pointwise_leq_fraction(const PiecewiseMonotone& f, const PiecewiseMonotone& g, int samples) {
    int ok = 0;
    for (int i = 0; i < samples; ++i) {
        double x = (static_cast<double>(i) + 0.5) / static_cast<double>(samples);
        if (f(x) <= g(x) + 1e-12) ++ok;
    }
    return static_cast<double>(ok) / static_cast<double>(samples);
}

RealMonotoneReport monotone_convergence_demo(const RealQMeasure& mu,
                                             const std::function<PiecewiseMonotone(int)>& sequence,
                                             const PiecewiseMonotone& limit, const PiecewiseMonotone& dominator,
                                             int i_max, double tol, double quad_tolerance) {
    if (i_max < 1) throw std::invalid_argument("i_max must be positive");
    RealMonotoneReport report;
    report.increasing_ok = true;
    report.domination_ok = true;
    IntervalUnionD domain = IntervalUnionD::whole();

    std::vector<int> probes;
    for (int i = 1; i <= i_max; i = i < 8 ? i + 1 : i * 2) probes.push_back(i);
    if (probes.back() != i_max) probes.push_back(i_max);

    constexpr int kSampleGrid = 257;
    PiecewiseMonotone previous = sequence(probes.front());
    for (int i : probes) {
        PiecewiseMonotone fi = sequence(i);
        for (int k = 0; k <= kSampleGrid; ++k) {
            double x = static_cast<double>(k) / kSampleGrid;
            if (fi(x) < previous(x) - 1e-12 || fi(x) > limit(x) + 1e-12) report.increasing_ok = false;
        }
        if (!mu_domination_check(mu, fi, dominator, domain).dominates) report.domination_ok = false;
        report.integrals.push_back(q_integral_real(mu, fi, domain, quad_tolerance).value);
        previous = fi;
    }
    report.limit_integral = q_integral_real(mu, limit, domain, quad_tolerance).value;
    report.gap = std::fabs(report.integrals.back() - report.limit_integral);
    report.pass = report.increasing_ok && report.domination_ok && report.gap <= tol;
    return report;
}

}  // namespace qmeasure
