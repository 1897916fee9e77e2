#include <catch_amalgamated.hpp>

#include "oracles.hpp"

#include <ffpd/json_io.hpp>

#include <random>

using namespace ffpd;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an ffpd::Error");
    return ErrorKind::ParseError;
}

nlohmann::json J(const char* text) { return nlohmann::json::parse(text); }

} // namespace

TEST_CASE("matrix JSON writer emits field then rows", "[json]") {
    auto f7 = Field::make(7);
    CHECK(mat_to_json(Mat::from_ints(f7, {{2, 4}, {4, 2}})).dump() == R"j({"field":"GF(7)","rows":[[2,4],[4,2]]})j");
    auto f9 = Field::make(3, 2);
    Mat m(f9, 1, 2);
    m.raw(0, 1) = 5; // 2 + 1*x
    CHECK(mat_to_json(m).dump() == R"j({"field":"GF(3^2);modulus=1,0,1","rows":[[[0,0],[2,1]]]})j");
}

TEST_CASE("matrix JSON reader", "[json]") {
    auto m = mat_from_json(J(R"j({"rows": [[1, -1], [8, 0]], "field": "GF(7)"})j"));
    CHECK(m == Mat::from_ints(Field::make(7), {{1, 6}, {1, 0}}));
    auto e = mat_from_json(J(R"j({"field": "GF(3^2)", "rows": [["[1,1]", [0, 2]]]})j"));
    CHECK(e.raw(0, 0) == 4);
    CHECK(e.raw(0, 1) == 6);

    CHECK(kind_of([] { mat_from_json(J(R"j({"rows": [[1]]})j")); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { mat_from_json(J(R"j({"field": "GF(7)", "rows": [[1, 2], [3]]})j")); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { mat_from_json(J(R"j({"field": "GF(7)", "rows": []})j")); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { mat_from_json(J(R"j({"field": "GF(6)", "rows": [[1]]})j")); }) == ErrorKind::NotPrime);
    CHECK(kind_of([] { mat_from_json(J(R"j({"field": "GF(7)", "rows": [[1.5]]})j")); }) == ErrorKind::ParseError);
}

TEST_CASE("matrices round-trip through JSON", "[json][property]") {
    std::mt19937_64 rng(4);
    for (auto f : {Field::make(2), Field::make(7), Field::make(3, 2), Field::make(2, 5), Field::make(5, 1, std::vector<std::int64_t>{0, 1})}) {
        std::uniform_int_distribution<Value> d(0, f.q() - 1);
        for (int t = 0; t < 100; ++t) {
            Mat m(f, 1 + t % 4, 1 + (t / 4) % 4);
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) m.raw(i, j) = d(rng);
            const auto text = mat_to_json(m).dump();
            const auto back = mat_from_json(parse_json_text(text));
            REQUIRE(back == m);
            REQUIRE(back.field() == m.field());
            REQUIRE(mat_to_json(back).dump() == text);
        }
    }
}

TEST_CASE("graph JSON in both forms", "[json]") {
    auto bic = graph_from_json(J(R"j({"field": "GF(2)", "n": 3, "blue": [1], "edges": [[1, 3]]})j"));
    CHECK(bic.weights() == Mat::from_ints(Field::make(2), {{1, 0, 1}, {0, 0, 0}, {1, 0, 0}}));
    CHECK(graph_from_json(J(R"j({"n": 1, "blue": [1]})j")).weights() == Mat::from_ints(Field::make(2), {{1}}));
    auto w = graph_from_json(J(R"j({"field": "GF(3)", "n": 2, "weights": [[1, 2], [2, 1]]})j"));
    CHECK(graph_to_json(w).dump() == R"j({"field":"GF(3)","n":2,"weights":[[1,2],[2,1]]})j");
    CHECK(graph_from_json(parse_json_text(graph_to_json(w).dump())) == w);

    CHECK(kind_of([] { graph_from_json(J(R"j({"field": "GF(3)", "n": 2, "blue": [1]})j")); }) == ErrorKind::FieldMismatch);
    CHECK(kind_of([] { graph_from_json(J(R"j({"n": 2, "blue": [3]})j")); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([] { graph_from_json(J(R"j({"n": 2, "edges": [[1, 1]]})j")); }) == ErrorKind::SelfLoopEdge);
    CHECK(kind_of([] { graph_from_json(J(R"j({"n": 0})j")); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { graph_from_json(J(R"j({"field": "GF(3)", "n": 3, "weights": [[1, 2], [2, 1]]})j")); }) ==
          ErrorKind::ParseError);
    CHECK(kind_of([] { graph_from_json(J(R"j({"field": "GF(3)", "weights": [[1, 2], [1, 1]]})j")); }) == ErrorKind::NotSymmetric);
    CHECK(kind_of([] { graph_from_json(J(R"j({"field": "GF(3)", "weights": [[1, 2]]})j")); }) == ErrorKind::NotSquare);
    CHECK(kind_of([] { graph_from_json(J("[1]")); }) == ErrorKind::ParseError);
}

TEST_CASE("text helpers", "[json]") {
    CHECK(format_grid(Mat::from_ints(Field::make(11), {{1, 10}, {3, 4}})) == " 1 10\n 3  4\n");
    CHECK(format_vertices(std::vector<std::size_t>{0, 2, 4}) == "1,3,5");
    CHECK(format_vertices(std::vector<std::size_t>{}).empty());
    CHECK(kind_of([] { parse_json_text("{"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { load_json_file("/nonexistent/file.json"); }) == ErrorKind::ParseError);
    CHECK(elem_to_json(Field::make(7).from_int(3)).dump() == "3");
    CHECK(elem_to_json(Field::make(2, 3).at(6)).dump() == "[0,1,1]");
}
