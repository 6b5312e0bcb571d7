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

#include "qmeasure/piecewise.hpp"
#include "qmeasure/quadrature.hpp"
#include "qmeasure/real_measure.hpp"

namespace qmeasure {

/// The layer-function integral on the continuum: integral over lambda >= 0
/// of mu{x in domain : f(x) > lambda}, minus the mirrored negative-part
/// term. The lambda axis is pre-split at every image of a piece/domain
/// boundary (shift-adjusted for destructive measures, where the overlap
/// structure kinks); adaptive Simpson runs per segment with the tolerance
/// divided evenly. Throws QuadratureBudgetExceeded when the budget runs out.
QuadratureResult q_integral_real(const RealQMeasure& mu, const PiecewiseMonotone& f, const IntervalUnionD& domain,
                                 double tolerance, std::uint64_t max_evaluations = 1'000'000);

/// Exact layer integral of f(x) = x over [0,y], in rational arithmetic.
/// The layer function of the identity is piecewise quadratic in lambda for
/// every supported measure family; each candidate segment is integrated by
/// the exact 3-point open rule and validated at a fourth interior point
/// (splitting on mismatch). This is the second, float-free route to the
/// worked destructive-measure and q-Lebesgue values.
Rat exact_identity_integral(const RealQMeasure& mu, const Rat& y);

/// 2 y^(n+2) / ((n+1)(n+2)): the closed-form q-Lebesgue integral of x^n
/// over [0,y].
double monomial_integral_closed(int n, double y);
Rat monomial_integral_closed_rat(int n, const Rat& y);

/// 2 (e^y - y - 1): the closed-form q-Lebesgue integral of e^x over [0,y].
double exp_integral_closed(double y);

struct SurpriseAdditivityReport {
    double computed = 0.0;       // quadrature of x^2 + x over [0,y]
    double expected = 0.0;       // y^4/6 + y^3/3, the sum of the two pieces
    double deviation = 0.0;
    bool pass = false;
    std::uint64_t evaluations = 0;
};

/// The q-Lebesgue integral of x^2 + x over [0,y] equals the sum of the
/// integrals of x^2 and x, despite the nonlinearity of the integral.
SurpriseAdditivityReport surprise_additivity_check(double y, double tolerance, double quad_tolerance = 1e-8);

struct FtcPointError {
    double y = 0.0;
    double error = 0.0;
};

struct FtcReport {
    double max_error = 0.0;
    std::vector<FtcPointError> per_point;
    bool pass = false;
};

/// Second-difference check of (1/2) F''(y) = f(y) for F(y) = the q-Lebesgue
/// integral of f over [0,y]. Refuses non-monotone f; grid points must lie
/// in (2h, 1-2h).
FtcReport quantum_ftc_check(const PiecewiseMonotone& f, const std::vector<double>& grid, double h, double tolerance,
                            double quad_tolerance = 1e-10);

struct DominationReport {
    bool dominates = true;
    double witness_lambda = 0.0;
    std::uint64_t checked = 0;
};

/// g dominates f under mu when mu{f > lambda} <= mu{g > lambda} for all
/// lambda. Checked on the image grid of both functions (piece boundary
/// values), the supplied extra grid, and midpoints between consecutive grid
/// values. Nonnegative integrands.
DominationReport mu_domination_check(const RealQMeasure& mu, const PiecewiseMonotone& f, const PiecewiseMonotone& g,
                                     const IntervalUnionD& domain, std::vector<double> extra_grid = {});

/// Fraction of a uniform sample grid where f <= g; near 1 means f <= g
/// almost everywhere, substantially below 1 demonstrates the converse
/// failure of domination vs pointwise order.
double pointwise_leq_fraction(const PiecewiseMonotone& f, const PiecewiseMonotone& g, int samples = 4096);

struct RealMonotoneReport {
    std::vector<double> integrals;
    double limit_integral = 0.0;
    double gap = 0.0;
    bool increasing_ok = false;
    bool domination_ok = false;
    bool pass = false;
};

/// Monotone convergence on the continuum: f_i increasing to f, each
/// dominated by g; the integral sequence converges to the integral of f.
/// The gap at i_max is compared against `tol`.
RealMonotoneReport monotone_convergence_demo(const RealQMeasure& mu,
                                             const std::function<PiecewiseMonotone(int)>& sequence,
                                             const PiecewiseMonotone& limit, const PiecewiseMonotone& dominator,
                                             int i_max, double tol, double quad_tolerance = 1e-8);

}  // namespace qmeasure
