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

#include "qmeasure/quadrature.hpp"

#include <cmath>

namespace qmeasure {

namespace {

constexpr int kMaxDepth = 60;

struct SimpsonState {
    const std::function<double(double)>& g;
    std::uint64_t budget;
    std::uint64_t evaluations = 0;
    double error_estimate = 0.0;

    double eval(double x) {
        if (++evaluations > budget)
            throw QuadratureBudgetExceeded("quadrature budget of " + std::to_string(budget) +
                                           " evaluations exhausted before reaching the tolerance");
        return g(x);
    }

    static double simpson(double h, double fa, double fm, double fb) { return (fa + 4.0 * fm + fb) * (h / 6.0); }

    double refine(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) {
        double m = 0.5 * (a + b);
        double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        double flm = eval(lm), frm = eval(rm);
        double left = simpson(m - a, fa, flm, fm);
        double right = simpson(b - m, fm, frm, fb);
        double delta = (left + right - whole) / 15.0;
        if (std::fabs(delta) <= tol || depth >= kMaxDepth) {
            error_estimate += std::fabs(delta);
            return left + right + delta;
        }
        return refine(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
               refine(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }
};

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& g, double a, double b, double tolerance,
                                  std::uint64_t max_evaluations) {
    QuadratureResult result;
    if (!(a < b)) return result;
    SimpsonState state{g, max_evaluations};
    double fa = state.eval(a);
    double fm = state.eval(0.5 * (a + b));
    double fb = state.eval(b);
    double whole = SimpsonState::simpson(b - a, fa, fm, fb);
    result.value = state.refine(a, b, fa, fm, fb, whole, tolerance, 0);
    result.error_estimate = state.error_estimate;
    result.evaluations = state.evaluations;
    return result;
}

}  // namespace qmeasure
