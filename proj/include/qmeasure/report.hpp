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
#include <string>
#include <vector>

namespace qmeasure {

/// Outcome of a verification sweep. Failures are reported, never thrown;
/// the witness is the first counterexample in canonical enumeration order
/// (increasing subset-mask value), so output is deterministic.
struct CheckReport {
    std::string name;
    bool pass = true;
    std::string witness;          // formatted first counterexample, empty on pass
    std::uint64_t cases_checked = 0;
    bool sampled = false;         // exhaustive sweep vs seeded sampling
    std::uint64_t seed = 0;       // meaningful only when sampled
    double max_deviation = 0.0;
    std::vector<std::string> notes;

    std::string summary() const;
};

}  // namespace qmeasure
