#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lsdial/algebra.hpp"
#include "lsdial/rational.hpp"

namespace lsdial {

// File format: {"dim": n, "left": [{"i":1,"j":2,"k":1,"c":"1"}, ...],
// "right": [...]} with 1-based indices and rational text coefficients.
// Omitted entries are zero; "left"/"right" may be absent entirely.

namespace detail {

inline std::size_t parse_index(const nlohmann::json& entry, const char* key, std::size_t dim,
                               const char* which, std::size_t pos) {
    const auto it = entry.find(key);
    std::ostringstream where;
    where << "algebra file: '" << which << "' entry " << pos;
    if (it == entry.end()) throw ParseError(where.str() + ": missing key '" + key + "'");
    if (!it->is_number_integer() || it->is_number_float())
        throw ParseError(where.str() + ": key '" + key + "' must be an integer");
    const auto v = it->get<long long>();
    if (v < 1 || static_cast<unsigned long long>(v) > dim)
        throw ParseError(where.str() + ": index " + key + "=" + std::to_string(v) +
                         " out of range 1.." + std::to_string(dim));
    return static_cast<std::size_t>(v) - 1;
}

inline void read_entries(Algebra& alg, const nlohmann::json& doc, bool left, const char* which) {
    const auto it = doc.find(which);
    if (it == doc.end()) return;
    if (!it->is_array())
        throw ParseError(std::string("algebra file: '") + which + "' must be an array");
    const std::size_t n = alg.dim();
    std::vector<char> seen(n * n * n, 0);
    std::size_t pos = 0;
    for (const nlohmann::json& entry : *it) {
        ++pos;
        std::ostringstream where;
        where << "algebra file: '" << which << "' entry " << pos;
        if (!entry.is_object()) throw ParseError(where.str() + ": must be an object");
        for (const auto& [key, value] : entry.items()) {
            (void)value;
            if (key != "i" && key != "j" && key != "k" && key != "c")
                throw ParseError(where.str() + ": unknown key '" + key + "'");
        }
        const std::size_t i = parse_index(entry, "i", n, which, pos);
        const std::size_t j = parse_index(entry, "j", n, which, pos);
        const std::size_t k = parse_index(entry, "k", n, which, pos);
        const auto c = entry.find("c");
        if (c == entry.end()) throw ParseError(where.str() + ": missing key 'c'");
        if (!c->is_string())
            throw ParseError(where.str() + ": key 'c' must be a rational in a string");
        Rational value;
        try {
            value = parse_rational(c->get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where.str() + ": " + e.what());
        }
        const std::size_t flat = (i * n + j) * n + k;
        if (seen[flat]) {
            std::ostringstream dup;
            dup << "algebra file: duplicate (" << i + 1 << ", " << j + 1 << ", " << k + 1
                << ") in '" << which << "'";
            throw ParseError(dup.str());
        }
        seen[flat] = 1;
        if (left)
            alg.set_left(i, j, k, value);
        else
            alg.set_right(i, j, k, value);
    }
}

}  // namespace detail

inline Algebra algebra_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("algebra file: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("algebra file: top level must be an object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "dim" && key != "left" && key != "right")
            throw ParseError("algebra file: unknown key '" + key + "'");
    }
    const auto dim_it = doc.find("dim");
    if (dim_it == doc.end()) throw ParseError("algebra file: missing key 'dim'");
    if (!dim_it->is_number_integer() || dim_it->is_number_float())
        throw ParseError("algebra file: 'dim' must be an integer");
    const auto dim_value = dim_it->get<long long>();
    if (dim_value < 1 || dim_value > 64)
        throw ParseError("algebra file: 'dim' must be between 1 and 64");
    Algebra alg(static_cast<std::size_t>(dim_value));
    detail::read_entries(alg, doc, true, "left");
    detail::read_entries(alg, doc, false, "right");
    return alg;
}

inline std::string algebra_to_json(const Algebra& alg) {
    const std::size_t n = alg.dim();
    nlohmann::ordered_json doc;
    doc["dim"] = n;
    for (const char* which : {"left", "right"}) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const Rational& c = which[0] == 'l' ? alg.left(i, j, k) : alg.right(i, j, k);
                    if (c == 0) continue;
                    nlohmann::ordered_json entry;
                    entry["i"] = i + 1;
                    entry["j"] = j + 1;
                    entry["k"] = k + 1;
                    entry["c"] = format_rational(c);
                    arr.push_back(std::move(entry));
                }
        doc[which] = std::move(arr);
    }
    return doc.dump(2) + "\n";
}

inline Algebra load_algebra_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open algebra file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return algebra_from_json(buf.str());
}

}  // namespace lsdial
