#pragma once

// JSON wire formats shared by the CLI and the session service.
//
//   matrix:     {"field": "GF(7)", "rows": [[2,4],[4,2]]}
//   pseudograph {"field": "GF(3)", "n": 3, "weights": [[1,2,2],[2,1,2],[2,2,1]]}
//   bicolored:  {"field": "GF(2)", "n": 5, "blue": [1,3,4], "edges": [[1,2],[1,5]]}
//
// Elements are a JSON integer for prime fields and the coefficient array
// [c0,...,c_{k-1}] for extension fields; readers also accept either form as a
// string. Vertex labels in the bicolored form are 1-based. Writers emit keys
// in the order shown; readers accept any order.

#include "pressing.hpp"

#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

namespace ffpd {

using ordered_json = nlohmann::ordered_json;

inline ordered_json elem_to_json(const Field& f, Value v) {
    if (f.k() == 1) return v;
    ordered_json arr = ordered_json::array();
    for (auto c : f.coeffs(v)) arr.push_back(c);
    return arr;
}

inline ordered_json elem_to_json(const Elem& e) { return elem_to_json(e.field(), e.value()); }

template <typename Json>
Elem elem_from_json(const Field& f, const Json& j) {
    if (j.is_number_integer()) return f.from_int(j.template get<std::int64_t>());
    if (j.is_array()) {
        std::vector<std::int64_t> c;
        for (const auto& x : j) {
            if (!x.is_number_integer()) throw Error(ErrorKind::ParseError, "element coefficients must be integers");
            c.push_back(x.template get<std::int64_t>());
        }
        return f.from_coeffs(c);
    }
    if (j.is_string()) return parse_elem(f, j.template get<std::string>());
    throw Error(ErrorKind::ParseError, "element must be an integer, coefficient array or string");
}

inline ordered_json mat_rows_to_json(const Mat& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(elem_to_json(m.field(), m.raw(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ordered_json mat_to_json(const Mat& m) {
    ordered_json j;
    j["field"] = m.field().literal();
    j["rows"] = mat_rows_to_json(m);
    return j;
}

namespace detail {

template <typename Json>
const Json& require_key(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing key \"") + key + "\"");
    return j.at(key);
}

template <typename Json>
Field field_from_json(const Json& j) {
    const auto& f = require_key(j, "field");
    if (!f.is_string()) throw Error(ErrorKind::ParseError, "\"field\" must be a string");
    return parse_field(f.template get<std::string>());
}

template <typename Json>
Mat rows_from_json(const Field& f, const Json& rows) {
    if (!rows.is_array() || rows.empty()) throw Error(ErrorKind::ParseError, "rows must be a non-empty array");
    const auto cols = rows.front().is_array() ? rows.front().size() : 0;
    if (cols == 0) throw Error(ErrorKind::ParseError, "rows must be non-empty arrays");
    Mat m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != cols) throw Error(ErrorKind::ParseError, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.raw(i, c) = elem_from_json(f, row[c]).value();
    }
    return m;
}

template <typename Json>
std::size_t vertex_from_json(const Json& j, std::size_t n) {
    if (!j.is_number_integer()) throw Error(ErrorKind::ParseError, "vertex labels must be integers");
    const auto v = j.template get<std::int64_t>();
    if (v < 1 || static_cast<std::size_t>(v) > n) {
        throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    return static_cast<std::size_t>(v - 1);
}

} // namespace detail

template <typename Json>
Mat mat_from_json(const Json& j) {
    const auto f = detail::field_from_json(j);
    return detail::rows_from_json(f, detail::require_key(j, "rows"));
}

inline ordered_json graph_to_json(const Pseudograph& g) {
    ordered_json j;
    j["field"] = g.field().literal();
    j["n"] = g.n();
    j["weights"] = mat_rows_to_json(g.weights());
    return j;
}

/// Accepts either the weights form or the bicolored shorthand (GF(2) only;
/// "field" may be omitted there).
template <typename Json>
Pseudograph graph_from_json(const Json& j) {
    if (!j.is_object()) throw Error(ErrorKind::ParseError, "graph must be a JSON object");
    if (j.contains("weights")) {
        const auto f = detail::field_from_json(j);
        auto w = detail::rows_from_json(f, j.at("weights"));
        if (j.contains("n") && (!j.at("n").is_number_integer() || j.at("n").template get<std::int64_t>() != static_cast<std::int64_t>(w.rows()))) {
            throw Error(ErrorKind::ParseError, "\"n\" does not match the weights matrix");
        }
        if (!w.is_square()) throw Error(ErrorKind::NotSquare, "weights matrix must be square");
        return Pseudograph(std::move(w));
    }
    if (j.contains("field") && !(detail::field_from_json(j) == Field::make(2))) {
        throw Error(ErrorKind::FieldMismatch, "bicolored graphs live over GF(2)");
    }
    const auto& nj = detail::require_key(j, "n");
    if (!nj.is_number_integer() || nj.template get<std::int64_t>() < 1) throw Error(ErrorKind::ParseError, "\"n\" must be a positive integer");
    const auto n = nj.template get<std::size_t>();
    std::vector<std::size_t> blue;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    if (j.contains("blue")) {
        if (!j.at("blue").is_array()) throw Error(ErrorKind::ParseError, "\"blue\" must be an array");
        for (const auto& v : j.at("blue")) blue.push_back(detail::vertex_from_json(v, n));
    }
    if (j.contains("edges")) {
        if (!j.at("edges").is_array()) throw Error(ErrorKind::ParseError, "\"edges\" must be an array");
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::ParseError, "each edge must be a pair");
            edges.emplace_back(detail::vertex_from_json(e[0], n), detail::vertex_from_json(e[1], n));
        }
    }
    return from_bicolored(n, blue, edges);
}

inline nlohmann::json parse_json_text(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
    }
}

inline nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

/// Right-aligned plain-text grid of a matrix.
inline std::string format_grid(const Mat& m) {
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (auto v : m.data()) {
        cells.push_back(m.field().format(v));
        width = std::max(width, cells.back().size());
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << std::setw(static_cast<int>(width)) << cells[i * m.cols() + j];
        }
        out << '\n';
    }
    return out.str();
}

/// "1,2,3" from 0-based indices.
inline std::string format_vertices(std::span<const std::size_t> vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vs[i] + 1);
    }
    return s;
}

} // namespace ffpd
