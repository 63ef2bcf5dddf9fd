#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "affprox/generate.hpp"
#include "affprox/instance.hpp"

using namespace affprox;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string golden(const std::string& name) {
    return slurp(std::string(AFFPROX_INSTANCE_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("golden instances parse and validate") {
    const Instance square = parse_instance(golden("square_projection.json"));
    CHECK(square.dim_c == 2);
    CHECK(square.dim_d == 1);
    CHECK(square.domain.generators.size() == 4);
    REQUIRE(square.codomain.has_value());
    CHECK(square.codomain->generators.size() == 2);
    CHECK(square.functional.coeffs == std::vector<Rational>{Rational(0), Rational(1)});

    const Instance segment = parse_instance(golden("identity_segment.json"));
    CHECK_FALSE(segment.codomain.has_value());
    CHECK(polytope_equal(segment.effective_codomain(), segment.domain));

    const Instance triangle = parse_instance(golden("triangle.json"));
    CHECK(triangle.dim_d == 1);
    REQUIRE(triangle.codomain.has_value());
}

TEST_CASE("explicit non-surjective codomain is rejected with a witness") {
    std::string text = golden("square_projection.json");
    const std::string needle = "[[\"0\"], [\"1\"]]";
    const std::size_t at = text.find(needle);
    REQUIRE(at != std::string::npos);
    text.replace(at, needle.size(), "[[\"0\"], [\"2\"]]");

    try {
        parse_instance(text);
        FAIL("expected a surjectivity failure");
    } catch (const ValidationError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("non-surjective") != std::string::npos);
        CHECK(msg.find("generator 1") != std::string::npos);
        CHECK(msg.find("(2)") != std::string::npos);
    }
}

TEST_CASE("malformed rationals are parse errors naming the token") {
    std::string text = golden("identity_segment.json");
    const std::string needle = "\"coeffs\": [\"1\"]";
    const std::size_t at = text.find(needle);
    REQUIRE(at != std::string::npos);
    text.replace(at, needle.size(), "\"coeffs\": [\"1/0\"]");

    try {
        parse_instance(text);
        FAIL("expected a parse failure");
    } catch (const ParseError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("f.coeffs[0]") != std::string::npos);
        CHECK(msg.find("1/0") != std::string::npos);
    }
}

TEST_CASE("structural problems are reported with field paths") {
    CHECK_THROWS_AS(parse_instance("not json"), ParseError);
    CHECK_THROWS_AS(parse_instance("[1,2]"), ParseError);
    CHECK_THROWS_AS(parse_instance("{\"dim_C\": 1}"), ParseError);

    // ragged vertex list
    CHECK_THROWS_AS(
        parse_instance(R"({"dim_C": 2, "dim_D": 1,
            "C_vertices": [["0","0"],["1"]],
            "map": {"matrix": [["1","0"]], "offset": ["0"]},
            "f": {"coeffs": ["0","1"], "constant": "0"}})"),
        ValidationError);

    // zero dimension
    CHECK_THROWS_AS(
        parse_instance(R"({"dim_C": 0, "dim_D": 1, "C_vertices": [[]],
            "map": {"matrix": [[]], "offset": ["0"]},
            "f": {"coeffs": [], "constant": "0"}})"),
        ValidationError);

    // matrix shape mismatch
    CHECK_THROWS_AS(
        parse_instance(R"({"dim_C": 2, "dim_D": 1,
            "C_vertices": [["0","0"]],
            "map": {"matrix": [["1","0"],["0","1"]], "offset": ["0"]},
            "f": {"coeffs": ["0","1"], "constant": "0"}})"),
        ValidationError);

    // floating point is not accepted anywhere
    CHECK_THROWS_AS(
        parse_instance(R"({"dim_C": 1, "dim_D": 1, "C_vertices": [[0.5]],
            "map": {"matrix": [["1"]], "offset": ["0"]},
            "f": {"coeffs": ["1"], "constant": "0"}})"),
        ParseError);
}

TEST_CASE("serialization round-trips exactly and is byte-stable") {
    for (const char* name :
         {"square_projection.json", "identity_segment.json", "triangle.json"}) {
        const std::string original = golden(name);
        const Instance inst = parse_instance(original);
        const std::string normalized = serialize_instance(inst);
        CHECK(parse_instance(normalized) == inst);
        CHECK(serialize_instance(parse_instance(normalized)) == normalized);
    }
}

TEST_CASE("integer tokens are accepted and normalized to strings") {
    const Instance inst = parse_instance(
        R"({"dim_C": 1, "dim_D": 1, "C_vertices": [[0], [2]],
            "map": {"matrix": [[1]], "offset": [0]},
            "f": {"coeffs": [-3], "constant": 1}})");
    CHECK(inst.domain.generators[1] == Point({Rational(2)}));
    const std::string normalized = serialize_instance(inst);
    CHECK(normalized.find("\"-3\"") != std::string::npos);
    CHECK(parse_instance(normalized) == inst);
}

TEST_CASE("generator is deterministic and validates parameters") {
    const Instance a = generate_instance(1, 3, 2, 6);
    const Instance b = generate_instance(1, 3, 2, 6);
    CHECK(a == b);
    CHECK(serialize_instance(a) == serialize_instance(b));

    const Instance c = generate_instance(2, 3, 2, 6);
    CHECK_FALSE(a == c);

    CHECK_FALSE(a.codomain.has_value());
    CHECK(check_surjective(a.map, a.domain, a.effective_codomain()).surjective);

    CHECK_THROWS_AS(generate_instance(1, 2, 3, 6), ValidationError);
    CHECK_THROWS_AS(generate_instance(1, 3, 1, 3), ValidationError);
    CHECK_THROWS_AS(generate_instance(1, 0, 0, 5), ValidationError);
}

TEST_CASE("generated data stays within the documented range") {
    for (std::uint64_t seed : {3u, 17u, 99u}) {
        const Instance inst = generate_instance(seed, 4, 2, 9);
        for (const Point& g : inst.domain.generators) {
            for (const Rational& v : g.coords) {
                CHECK(v >= -5);
                CHECK(v <= 5);
                CHECK(denominator(v) == 1);
            }
        }
    }
}

TEST_CASE("solution reports carry the exact payload") {
    const Instance inst = parse_instance(golden("square_projection.json"));
    const BestApproximation sol =
        best_approximation(inst.domain, inst.map, inst.functional);
    const std::string report = serialize_report(SolutionReport{sol, 1234});
    CHECK(report.find("\"status\": \"ok\"") != std::string::npos);
    CHECK(report.find("\"d\": \"1/2\"") != std::string::npos);
    CHECK(report.find("\"c\": \"1\"") != std::string::npos);
    CHECK(report.find("\"gap_witness\"") != std::string::npos);
    CHECK(report.find("\"residuals\"") != std::string::npos);
    CHECK(report.find("\"elapsed_us\": 1234") != std::string::npos);
}

TEST_CASE("exit code mapping follows the contract") {
    CHECK(cli_exit_code(ParseError("bad token")) == 3);
    CHECK(cli_exit_code(ValidationError("bad instance")) == 2);
    CHECK(cli_exit_code(DimensionError("bad shape")) == 2);
    CHECK(cli_exit_code(EmptyFiberError("outside image")) == 2);
    CHECK(cli_exit_code(InternalError("identity failed")) == 4);
}
