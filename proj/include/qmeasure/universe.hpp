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

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace qmeasure {

/// A subset of a finite universe of up to 24 labeled points, one bit per
/// point index. Plain value type; the owning Universe supplies complement.
struct SubsetMask {
    std::uint32_t bits = 0;

    constexpr SubsetMask() = default;
    constexpr explicit SubsetMask(std::uint32_t b) : bits(b) {}

    static constexpr SubsetMask empty() { return SubsetMask{0}; }
    static constexpr SubsetMask singleton(int i) { return SubsetMask{1u << i}; }

    constexpr bool contains(int i) const { return (bits >> i) & 1u; }
    constexpr int size() const { return std::popcount(bits); }
    constexpr bool is_empty() const { return bits == 0; }

    constexpr SubsetMask with(int i) const { return SubsetMask{bits | (1u << i)}; }

    friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask{a.bits | b.bits}; }
    friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask{a.bits & b.bits}; }
    friend constexpr SubsetMask operator^(SubsetMask a, SubsetMask b) { return SubsetMask{a.bits ^ b.bits}; }
    /// Set difference a \ b.
    friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) { return SubsetMask{a.bits & ~b.bits}; }
    friend constexpr bool operator==(SubsetMask a, SubsetMask b) { return a.bits == b.bits; }
    friend constexpr bool operator<(SubsetMask a, SubsetMask b) { return a.bits < b.bits; }

    constexpr bool subset_of(SubsetMask other) const { return (bits & ~other.bits) == 0; }
    constexpr bool disjoint_with(SubsetMask other) const { return (bits & other.bits) == 0; }

    /// Sorted 0-based point indices.
    std::vector<int> indices() const;
};

constexpr int kMaxUniverseSize = 24;

/// Ordered universe of labeled points; index of a label is stable.
class Universe {
  public:
    explicit Universe(std::vector<std::string> labels);

    /// Convenience: points named x1..xn.
    static Universe of_size(int n);

    int size() const { return static_cast<int>(labels_.size()); }
    std::uint32_t subset_count() const { return 1u << labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    /// Index of a label; throws std::invalid_argument if unknown.
    int index_of(const std::string& label) const;

    SubsetMask full() const { return SubsetMask{subset_count() - 1}; }
    SubsetMask complement(SubsetMask a) const { return full() - a; }
    bool valid(SubsetMask a) const { return a.bits < subset_count(); }

    /// "{x1,x3}" for messages and witnesses.
    std::string format_subset(SubsetMask a) const;

    friend bool operator==(const Universe& a, const Universe& b) { return a.labels_ == b.labels_; }

  private:
    std::vector<std::string> labels_;
};

}  // namespace qmeasure
