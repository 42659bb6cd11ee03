#include <catch2/catch_amalgamated.hpp>

#include <congr/matrix_json.hpp>
#include <congr/rng.hpp>

#include <vector>

using congr::FieldDescriptor;
using congr::Json;
using congr::Matrix;
using congr::Scalar;

TEST_CASE("the worked document parses into the expected matrix", "[json]") {
    const char* doc = R"({
        "field": {"kind": "rational"},
        "rows": [["1", "-3/2"], ["0", "2"]]
    })";
    const Matrix m = congr::matrix_from_json_text(doc);
    REQUIRE(m.dim() == 2);
    REQUIRE(m.field().is_rational());
    REQUIRE(m.at(1, 2).str() == "-3/2");
    REQUIRE(m.at(2, 2).str() == "2");

    const char* prime_doc = R"({
        "field": {"kind": "prime", "p": 7},
        "rows": [["12"]]
    })";
    const Matrix g = congr::matrix_from_json_text(prime_doc);
    REQUIRE(g.field().prime_modulus() == 7);
    REQUIRE(g.at(1, 1).residue_value() == 5);
}

TEST_CASE("matrix documents round-trip", "[json]") {
    congr::Rng rng(3);
    for (const auto& f : {FieldDescriptor::rational(), FieldDescriptor::prime(13)}) {
        for (int n = 1; n <= 4; ++n) {
            std::vector<Scalar> e;
            for (int k = 0; k < n * n; ++k)
                e.push_back(f.is_rational()
                                ? Scalar::of_rational(rng.int_in(-9, 9), rng.int_in(1, 9))
                                : Scalar::of_residue(f, rng.below(13)));
            const Matrix m(f, n, std::move(e));
            REQUIRE(congr::matrix_from_json(congr::matrix_to_json(m)) == m);
            // Serialization is stable: same matrix, same bytes.
            REQUIRE(congr::matrix_to_json(m).dump() == congr::matrix_to_json(m).dump());
        }
    }
}

TEST_CASE("field descriptors round-trip through JSON", "[json]") {
    for (const auto& f : {FieldDescriptor::rational(), FieldDescriptor::prime(2),
                          FieldDescriptor::prime(104729)}) {
        REQUIRE(congr::field_from_json(congr::field_to_json(f)) == f);
    }
    REQUIRE_THROWS_AS(congr::field_from_json(Json{{"kind", "prime"}, {"p", 6}}),
                      congr::UnsupportedFieldError);
    REQUIRE_THROWS_AS(congr::field_from_json(Json{{"kind", "real"}}), congr::ParseError);
    REQUIRE_THROWS_AS(congr::field_from_json(Json{{"p", 5}}), congr::ParseError);
}

TEST_CASE("malformed documents are rejected with a parse error", "[json]") {
    const auto reject = [](const char* text) {
        REQUIRE_THROWS_AS(congr::matrix_from_json_text(text), congr::ParseError);
    };

    reject("not json at all");
    reject("[1, 2, 3]");                                       // not an object
    reject(R"({"rows": [["1"]]})");                            // missing field
    reject(R"({"field": {"kind": "rational"}})");              // missing rows
    reject(R"({"field": {"kind": "rational"}, "rows": []})");  // empty
    reject(R"({"field": {"kind": "rational"}, "rows": [["1", "2"], ["3"]]})"); // ragged
    reject(R"({"field": {"kind": "rational"}, "rows": [["1", "2"]]})");        // not square
    reject(R"({"field": {"kind": "rational"}, "rows": [[1]]})");               // non-string cell
    reject(R"({"field": {"kind": "rational"}, "rows": [["1/0"]]})");           // bad scalar
    reject(R"({"field": {"kind": "rational"}, "rows": [["x"]]})");

    // Bad field sub-objects surface the field error, not a generic one.
    REQUIRE_THROWS_AS(
        congr::matrix_from_json_text(R"({"field": {"kind": "prime", "p": 9}, "rows": [["1"]]})"),
        congr::UnsupportedFieldError);
}

TEST_CASE("oversized documents hit the dimension cap", "[json]") {
    Json rows = Json::array();
    for (int i = 0; i < 65; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 65; ++j) row.push_back("0");
        rows.push_back(row);
    }
    const Json doc{{"field", Json{{"kind", "rational"}}}, {"rows", rows}};
    REQUIRE_THROWS_AS(congr::matrix_from_json(doc), congr::CapExceededError);
}
