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

#include "qmeasure/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qmeasure {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Universe universe_from(const json& j) {
    if (!j.contains("universe") || !j["universe"].is_array())
        throw std::invalid_argument("missing universe array");
    std::vector<std::string> labels;
    for (const auto& l : j["universe"]) {
        if (!l.is_string()) throw std::invalid_argument("universe labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    return Universe(std::move(labels));
}

Rat rational_from(const json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (v.is_number_float()) return Rat(v.get<double>());
    throw std::invalid_argument("numbers must be strings, integers, or floats");
}

SubsetMask mask_from(const json& v, const Universe& u) {
    if (v.is_number_unsigned() || v.is_number_integer()) {
        auto bits = v.get<long long>();
        if (bits < 0 || bits >= static_cast<long long>(u.subset_count()))
            throw std::invalid_argument("subset bitmask out of range");
        return SubsetMask{static_cast<std::uint32_t>(bits)};
    }
    if (v.is_array()) {
        SubsetMask mask;
        for (const auto& idx : v) {
            if (!idx.is_number_integer()) throw std::invalid_argument("subset indices must be integers");
            long long i = idx.get<long long>();
            if (i < 0 || i >= u.size()) throw std::invalid_argument("subset index out of range");
            mask = mask.with(static_cast<int>(i));
        }
        return mask;
    }
    throw std::invalid_argument("subset must be an index list or a bitmask integer");
}

std::vector<std::vector<json>> matrix_from(const json& j, std::size_t n) {
    if (!j.contains("matrix") || !j["matrix"].is_array()) throw std::invalid_argument("missing matrix array");
    std::vector<std::vector<json>> rows;
    for (const auto& row : j["matrix"]) {
        if (!row.is_array() || row.size() != n) throw std::invalid_argument("matrix must be n x n");
        rows.emplace_back(row.begin(), row.end());
    }
    if (rows.size() != n) throw std::invalid_argument("matrix must be n x n");
    return rows;
}

}  // namespace

QMeasureTable table_from_json(const std::string& text) {
    json j = parse_text(text);
    Universe u = universe_from(j);
    if (!j.contains("values") || !j["values"].is_array()) throw std::invalid_argument("missing values array");

    std::vector<Rat> values(u.subset_count());
    std::vector<bool> seen(u.subset_count(), false);
    for (const auto& entry : j["values"]) {
        if (!entry.contains("set") || !entry.contains("mu"))
            throw std::invalid_argument("each value entry needs `set` and `mu`");
        SubsetMask mask = mask_from(entry["set"], u);
        if (seen[mask.bits]) throw std::invalid_argument("duplicate subset " + u.format_subset(mask));
        seen[mask.bits] = true;
        values[mask.bits] = rational_from(entry["mu"]);
    }
    for (std::uint32_t m = 0; m < u.subset_count(); ++m)
        if (!seen[m])
            throw std::invalid_argument("tables are total: missing subset " + u.format_subset(SubsetMask{m}));
    return QMeasureTable(std::move(u), std::move(values));
}

QMeasureTable load_table(const std::string& path) { return table_from_json(read_file(path)); }

std::string table_to_json(const QMeasureTable& table) {
    json j;
    j["universe"] = table.universe().labels();
    json values = json::array();
    for (std::uint32_t m = 0; m < table.subset_count(); ++m) {
        json entry;
        entry["set"] = SubsetMask{m}.indices();
        entry["mu"] = table.exact() ? format_rational(table[SubsetMask{m}])
                                    : format_decimal(table.value_doubles()[m]);
        values.push_back(std::move(entry));
    }
    j["values"] = std::move(values);
    return j.dump(2);
}

PairMeasureMatrix pair_matrix_from_json(const std::string& text) {
    json j = parse_text(text);
    Universe u = universe_from(j);
    std::size_t n = static_cast<std::size_t>(u.size());
    auto rows = matrix_from(j, n);
    std::vector<std::vector<Rat>> entries(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) entries[i][k] = rational_from(rows[i][k]);
    return PairMeasureMatrix(std::move(u), std::move(entries));
}

PairMeasureMatrix load_pair_matrix(const std::string& path) { return pair_matrix_from_json(read_file(path)); }

DecoherenceMatrix decoherence_from_json(const std::string& text) {
    json j = parse_text(text);
    Universe u = universe_from(j);
    std::size_t n = static_cast<std::size_t>(u.size());
    auto rows = matrix_from(j, n);
    std::vector<std::vector<std::complex<double>>> entries(n, std::vector<std::complex<double>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const json& v = rows[i][k];
            if (v.is_object()) {
                double re = v.contains("re") ? to_double(rational_from(v["re"])) : 0.0;
                double im = v.contains("im") ? to_double(rational_from(v["im"])) : 0.0;
                entries[i][k] = {re, im};
            } else {
                entries[i][k] = {to_double(rational_from(v)), 0.0};
            }
        }
    }
    return DecoherenceMatrix(std::move(u), std::move(entries));
}

DecoherenceMatrix load_decoherence(const std::string& path) { return decoherence_from_json(read_file(path)); }

}  // namespace qmeasure
