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

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qmeasure/rational.hpp"

namespace qmeasure {

/// Canonical finite union of disjoint half-open intervals [a,b) inside
/// [0,1), plus a flag for membership of the point 1. Adjacent pieces merge
/// exactly (zero merge tolerance). The endpoint flag never affects Lebesgue
/// length; it is carried so complements stay involutive.
///
/// Instantiated with exact rationals for the measure identities and with
/// doubles inside the quadrature loop.
template <class S>
class BasicIntervalUnion {
  public:
    struct Piece {
        S lo, hi;  // [lo, hi)
    };

    BasicIntervalUnion() = default;

    static BasicIntervalUnion empty() { return {}; }

    static BasicIntervalUnion whole() { return interval(S(0), S(1), true); }

    /// [lo, hi) clipped to [0,1); `includes_one` adds the point 1.
    static BasicIntervalUnion interval(S lo, S hi, bool includes_one = false) {
        BasicIntervalUnion out;
        lo = std::max(lo, S(0));
        hi = std::min(hi, S(1));
        if (lo < hi) out.pieces_.push_back({lo, hi});
        out.includes_one_ = includes_one;
        return out;
    }

    /// Builds from arbitrary pieces (sorted and merged).
    static BasicIntervalUnion from_pieces(std::vector<Piece> pieces, bool includes_one = false) {
        BasicIntervalUnion out;
        out.includes_one_ = includes_one;
        std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
        for (auto& p : pieces) {
            p.lo = std::max(p.lo, S(0));
            p.hi = std::min(p.hi, S(1));
            if (!(p.lo < p.hi)) continue;
            if (!out.pieces_.empty() && p.lo <= out.pieces_.back().hi)
                out.pieces_.back().hi = std::max(out.pieces_.back().hi, p.hi);
            else
                out.pieces_.push_back(p);
        }
        return out;
    }

    const std::vector<Piece>& pieces() const { return pieces_; }
    bool includes_one() const { return includes_one_; }
    bool is_empty() const { return pieces_.empty() && !includes_one_; }

    /// Lebesgue length (the point 1 is null).
    S length() const {
        S sum(0);
        for (const auto& p : pieces_) sum += p.hi - p.lo;
        return sum;
    }

    bool contains(const S& x) const {
        if (x == S(1)) return includes_one_;
        for (const auto& p : pieces_)
            if (p.lo <= x && x < p.hi) return true;
        return false;
    }

    friend BasicIntervalUnion operator|(const BasicIntervalUnion& a, const BasicIntervalUnion& b) {
        std::vector<Piece> all = a.pieces_;
        all.insert(all.end(), b.pieces_.begin(), b.pieces_.end());
        return from_pieces(std::move(all), a.includes_one_ || b.includes_one_);
    }

    friend BasicIntervalUnion operator&(const BasicIntervalUnion& a, const BasicIntervalUnion& b) {
        BasicIntervalUnion out;
        out.includes_one_ = a.includes_one_ && b.includes_one_;
        std::size_t i = 0, j = 0;
        while (i < a.pieces_.size() && j < b.pieces_.size()) {
            const Piece& pa = a.pieces_[i];
            const Piece& pb = b.pieces_[j];
            S lo = std::max(pa.lo, pb.lo);
            S hi = std::min(pa.hi, pb.hi);
            if (lo < hi) out.pieces_.push_back({lo, hi});
            if (pa.hi < pb.hi)
                ++i;
            else
                ++j;
        }
        return out;
    }

    BasicIntervalUnion complement() const {
        BasicIntervalUnion out;
        out.includes_one_ = !includes_one_;
        S cursor(0);
        for (const auto& p : pieces_) {
            if (cursor < p.lo) out.pieces_.push_back({cursor, p.lo});
            cursor = p.hi;
        }
        if (cursor < S(1)) out.pieces_.push_back({cursor, S(1)});
        return out;
    }

    friend BasicIntervalUnion operator-(const BasicIntervalUnion& a, const BasicIntervalUnion& b) {
        return a & b.complement();
    }

    /// {x + s : x in A} clipped back to [0,1); the point-1 flag is dropped
    /// (a single point, Lebesgue-null).
    BasicIntervalUnion translated(const S& s) const {
        std::vector<Piece> out;
        for (const auto& p : pieces_) out.push_back({p.lo + s, p.hi + s});
        return from_pieces(std::move(out), false);
    }

    friend bool operator==(const BasicIntervalUnion& a, const BasicIntervalUnion& b) {
        if (a.includes_one_ != b.includes_one_ || a.pieces_.size() != b.pieces_.size()) return false;
        for (std::size_t i = 0; i < a.pieces_.size(); ++i)
            if (a.pieces_[i].lo != b.pieces_[i].lo || a.pieces_[i].hi != b.pieces_[i].hi) return false;
        return true;
    }

  private:
    std::vector<Piece> pieces_;
    bool includes_one_ = false;
};

using IntervalUnion = BasicIntervalUnion<Rat>;
using IntervalUnionD = BasicIntervalUnion<double>;

IntervalUnionD to_double_union(const IntervalUnion& a);

}  // namespace qmeasure
