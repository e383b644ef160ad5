// Copyright 2026 the submaj authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <fstream>

#include <json.hpp>

#include "submaj/matrix.hpp"
#include "submaj/profile.hpp"

namespace submaj {

using json = nlohmann::ordered_json;

/// Project-wide matrix file format:
/// {"rows": n, "cols": m, "entries": [[re, im], ...]} row-major.
inline json matrix_to_json(const Matrix& a) {
    json j;
    j["rows"] = a.rows();
    j["cols"] = a.cols();
    json entries = json::array();
    for (const cplx& z : a.entries()) entries.push_back({z.real(), z.imag()});
    j["entries"] = std::move(entries);
    return j;
}

inline Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw input_error("matrix json: expected object with rows, cols, entries");
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows * cols)
        throw input_error("matrix json: entries length != rows*cols");
    std::vector<cplx> data;
    data.reserve(rows * cols);
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 2)
            throw input_error("matrix json: each entry must be [re, im]");
        const double re = e.at(0).get<double>();
        const double im = e.at(1).get<double>();
        if (!std::isfinite(re) || !std::isfinite(im))
            throw input_error("matrix json: non-finite entry");
        data.emplace_back(re, im);
    }
    return Matrix(rows, cols, std::move(data));
}

/// Profile file format: {"values": [...]} non-increasing, non-negative.
inline json profile_to_json(const SingularProfile& p) {
    json j;
    j["values"] = p.values;
    return j;
}

inline SingularProfile profile_from_json(const json& j) {
    if (!j.is_object() || !j.contains("values") || !j.at("values").is_array())
        throw input_error("profile json: expected object with a values array");
    std::vector<double> v;
    for (const auto& e : j.at("values")) v.push_back(e.get<double>());
    return SingularProfile(std::move(v));  // validates ordering and sign
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("invalid json in " + path + ": " + e.what());
    }
    return j;
}

inline Matrix load_matrix(const std::string& path) {
    return matrix_from_json(load_json_file(path));
}

/// A file holding either a matrix or a bare profile; `check` accepts both.
inline SingularProfile load_profile_or_matrix(const std::string& path) {
    const json j = load_json_file(path);
    if (j.is_object() && j.contains("values")) return profile_from_json(j);
    return profile_of(matrix_from_json(j));
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace submaj
