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

#include "qmeasure/interval.hpp"

namespace qmeasure {

IntervalUnionD to_double_union(const IntervalUnion& a) {
    std::vector<IntervalUnionD::Piece> pieces;
    pieces.reserve(a.pieces().size());
    for (const auto& p : a.pieces()) pieces.push_back({to_double(p.lo), to_double(p.hi)});
    return IntervalUnionD::from_pieces(std::move(pieces), a.includes_one());
}

}  // namespace qmeasure
