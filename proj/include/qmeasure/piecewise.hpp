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

#include <functional>
#include <string>
#include <vector>

#include "qmeasure/interval.hpp"

namespace qmeasure {

enum class Direction { increasing, decreasing, constant };

/// One monotone piece on [lo, hi]. `inverse` maps a value in the piece's
/// range back to the argument; when absent, bisection on `eval` is used.
struct MonotonePiece {
    double lo = 0.0;
    double hi = 1.0;
    Direction direction = Direction::constant;
    std::function<double(double)> eval;
    std::function<double(double)> inverse;  // optional
};

/// Real function on [0,1] described as finitely many monotone pieces with
/// inverse oracles: the integrand representation for the layer-function
/// construction on the continuum.
class PiecewiseMonotone {
  public:
    explicit PiecewiseMonotone(std::vector<MonotonePiece> pieces, std::string description = "");

    double operator()(double x) const;
    const std::vector<MonotonePiece>& pieces() const { return pieces_; }
    const std::string& description() const { return description_; }

    /// Supremum / infimum over a domain (attained at piece or domain
    /// endpoints since every piece is monotone).
    double sup_on(const IntervalUnionD& domain) const;
    double inf_on(const IntervalUnionD& domain) const;

    /// All piece boundaries (candidate kink positions on the x-axis).
    std::vector<double> breakpoints() const;

    /// True when the function is monotone of a single direction (constants
    /// allowed only as a whole; mixed directions refuse).
    bool is_monotone() const;

    static PiecewiseMonotone identity();
    static PiecewiseMonotone monomial(int n);
    static PiecewiseMonotone exponential();
    /// x^2 + x, with the analytic inverse (sqrt(1+4y) - 1) / 2.
    static PiecewiseMonotone quadratic_plus_linear();
    static PiecewiseMonotone constant(double c);
    /// height * chi_[a,b).
    static PiecewiseMonotone step_indicator(double a, double b, double height);
    static PiecewiseMonotone linear(double slope, double intercept = 0.0);

  private:
    std::vector<MonotonePiece> pieces_;
    std::string description_;
};

/// {x in domain : f(x) > lambda}, exact per monotone piece via the inverse
/// oracle: (f^{-1}(lambda), hi] on increasing pieces, [lo, f^{-1}(lambda))
/// on decreasing ones, all-or-nothing on constants. The inverse residual is
/// verified on every call; out-of-tolerance oracles throw.
IntervalUnionD superlevel_set(const PiecewiseMonotone& f, double lambda, const IntervalUnionD& domain);

/// {x in domain : f(x) < -lambda} for the negative part of the split.
IntervalUnionD sublevel_set(const PiecewiseMonotone& f, double threshold, const IntervalUnionD& domain);

/// Function mini-language: "x", "x^n", "exp", "x^2+x", "const:c",
/// "indicator:a,b:h", "linear:m,b". Throws std::invalid_argument on
/// unknown specs.
PiecewiseMonotone parse_function_spec(const std::string& spec);

}  // namespace qmeasure
