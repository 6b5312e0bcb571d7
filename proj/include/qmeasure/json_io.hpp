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

#include <string>

#include "qmeasure/decoherence.hpp"
#include "qmeasure/pair_matrix.hpp"
#include "qmeasure/table.hpp"

namespace qmeasure {

/// Measure-space file:
///   {"universe": ["x1","x2",...],
///    "values": [{"set":[0,2],"mu":"9/16"}, ...]}
/// `set` is a sorted list of 0-based indices (bitmask integers accepted on
/// input); `mu` is a decimal string, a "p/q" rational, or a JSON number.
/// Tables are total: every subset must appear exactly once.
QMeasureTable table_from_json(const std::string& text);
QMeasureTable load_table(const std::string& path);

/// Canonical encoding: sorted index lists, rationals as "p/q" strings.
std::string table_to_json(const QMeasureTable& table);

/// Matrix builders: {"universe": [...], "matrix": [[...], ...]}.
/// Pair-matrix entries are numbers or rational strings; decoherence entries
/// additionally accept {"re":..,"im":..}.
PairMeasureMatrix pair_matrix_from_json(const std::string& text);
PairMeasureMatrix load_pair_matrix(const std::string& path);

DecoherenceMatrix decoherence_from_json(const std::string& text);
DecoherenceMatrix load_decoherence(const std::string& path);

}  // namespace qmeasure
