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

#include <cstdint>
#include <functional>
#include <stdexcept>

namespace qmeasure {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::uint64_t evaluations = 0;
};

/// Thrown when the requested tolerance is not reached within the
/// evaluation budget.
struct QuadratureBudgetExceeded : std::runtime_error {
    explicit QuadratureBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive Simpson on [a,b] with Richardson correction. The error estimate
/// accumulates the per-interval |S2 - S1| / 15 terms of accepted intervals.
QuadratureResult adaptive_simpson(const std::function<double(double)>& g, double a, double b, double tolerance,
                                  std::uint64_t max_evaluations = 1'000'000);

}  // namespace qmeasure
