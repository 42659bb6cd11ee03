#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "congr/error.hpp"
#include "congr/field.hpp"
#include "congr/matrix.hpp"

namespace congr {

/// Reports and documents use order-preserving JSON so serialized output is
/// byte-stable across runs.
using Json = nlohmann::ordered_json;

inline Json field_to_json(const FieldDescriptor& f) {
    Json j;
    if (f.is_rational()) {
        j["kind"] = "rational";
    } else {
        j["kind"] = "prime";
        j["p"] = f.prime_modulus();
    }
    return j;
}

inline FieldDescriptor field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("field descriptor must be an object with a \"kind\" string");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "rational") return FieldDescriptor::rational();
    if (kind == "prime") {
        // is_number_integer() covers both signed and unsigned storage; in-code
        // literals land as signed, parsed documents as unsigned.
        if (!j.contains("p") || !j["p"].is_number_integer())
            throw ParseError("prime field descriptor needs a positive integer \"p\"");
        if (j["p"].is_number_unsigned()) {
            const std::uint64_t p = j["p"].get<std::uint64_t>();
            if (p >= (1ull << 31)) throw UnsupportedFieldError("prime modulus too large");
            return FieldDescriptor::prime(static_cast<std::uint32_t>(p));
        }
        const std::int64_t p = j["p"].get<std::int64_t>();
        if (p <= 0)
            throw ParseError("prime field descriptor needs a positive integer \"p\"");
        if (p >= (std::int64_t{1} << 31))
            throw UnsupportedFieldError("prime modulus too large");
        return FieldDescriptor::prime(static_cast<std::uint32_t>(p));
    }
    throw ParseError("unknown field kind: '" + kind + "'");
}

/// Matrix document: {"field": {...}, "rows": [["<scalar>", ...], ...]} with
/// scalars in the canonical text grammar. Round-trips losslessly.
inline Json matrix_to_json(const Matrix& m) {
    Json j;
    j["field"] = field_to_json(m.field());
    Json rows = Json::array();
    for (int i = 1; i <= m.dim(); ++i) {
        Json row = Json::array();
        for (int k = 1; k <= m.dim(); ++k) row.push_back(m.at(i, k).str());
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

inline Matrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("rows"))
        throw ParseError("matrix document needs \"field\" and \"rows\"");
    const FieldDescriptor f = field_from_json(j["field"]);
    const Json& rows = j["rows"];
    if (!rows.is_array() || rows.empty())
        throw ParseError("\"rows\" must be a non-empty array");
    const int n = static_cast<int>(rows.size());
    std::vector<Scalar> e;
    e.reserve(static_cast<std::size_t>(n) * n);
    for (const Json& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("matrix rows must form a square");
        for (const Json& cell : row) {
            if (!cell.is_string())
                throw ParseError("matrix entries must be scalar strings");
            e.push_back(parse_scalar(f, cell.get<std::string>()));
        }
    }
    return Matrix(f, n, std::move(e));
}

inline Matrix matrix_from_json_text(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed JSON: ") + ex.what());
    }
    return matrix_from_json(j);
}

} // namespace congr
