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

#include "qmeasure/universe.hpp"

#include <stdexcept>
#include <unordered_set>

namespace qmeasure {

std::vector<int> SubsetMask::indices() const {
    std::vector<int> out;
    for (int i = 0; i < kMaxUniverseSize; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty() || labels_.size() > kMaxUniverseSize)
        throw std::invalid_argument("universe must have between 1 and 24 points");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw std::invalid_argument("empty point label");
        if (!seen.insert(l).second) throw std::invalid_argument("duplicate point label: " + l);
    }
}

Universe Universe::of_size(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
    return Universe(std::move(labels));
}

int Universe::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    throw std::invalid_argument("unknown point label: " + label);
}

std::string Universe::format_subset(SubsetMask a) const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < size(); ++i) {
        if (!a.contains(i)) continue;
        if (!first) out += ",";
        out += labels_[static_cast<std::size_t>(i)];
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace qmeasure
