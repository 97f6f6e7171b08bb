#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "ziegler/catalog.hpp"

using namespace ziegler;

namespace {

const Field Q = Field::rational();
const Field Q2 = Field::quadratic(2);

std::size_t parse_error_position(const std::string& src, Field f = Q) {
    try {
        parse_poly(src, f);
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("no parse error for " << src);
    return 0;
}

const char* curve_doc = R"({
  "name": "two lines and a conic",
  "field": {"kind": "rational"},
  "components": [
    {"label": "C", "kind": "conic", "poly": "-x^2 + y*z"},
    {"label": "L1", "kind": "line", "poly": "3*x + y + 2*z"},
    {"label": "L2", "kind": "line", "poly": "-3*x + y + 2*z"}
  ]
})";

std::string schema_path(const std::string& text) {
    try {
        parse_curve_file(text);
    } catch (const SchemaError& e) {
        return e.path();
    }
    return "<no error>";
}

}  // namespace

TEST_CASE("parsing conic and line equations") {
    Poly c = parse_poly("-x^2 + y*z", Q);
    CHECK(c.size() == 2);
    CHECK(c.homogeneous_degree() == 2);
    CHECK(c.to_string() == "-x^2 + y*z");

    Poly d = parse_poly("-9/8*x^2 + y*z", Q);
    CHECK(d.lead().coef == FieldElement(Rational(-9, 8)));

    Poly m = parse_poly("2*r*x + y + 2*z", Q2);
    CHECK(m.lead().coef == FieldElement::from_parts(Q2, Rational(0), Rational(2)));
    CHECK(m.to_string() == "2*r*x + y + 2*z");

    CHECK(parse_poly("  ( x + y ) ^ 2 ", Q) == parse_poly("x^2 + 2*x*y + y^2", Q));
    CHECK(parse_poly("(12*r - 18)*x^2", Q2).lead().coef == FieldElement::from_parts(Q2, Rational(-18), Rational(12)));
    CHECK(parse_poly("-(x - y)", Q) == parse_poly("y - x", Q));
    CHECK(parse_poly("2^3*x", Q) == parse_poly("8*x", Q));
}

TEST_CASE("parse errors carry positions") {
    CHECK(parse_error_position("x + r", Q) == 4);
    CHECK(parse_error_position("1/0*x") == 2);
    CHECK(parse_error_position("2x") == 1);      // juxtaposition is not multiplication
    CHECK(parse_error_position("x + ") == 4);
    CHECK(parse_error_position("(x + y") == 6);
    CHECK(parse_error_position("x * -y") == 4);  // unary minus only at the head
    CHECK(parse_error_position("x^") == 2);
    CHECK(parse_error_position("x^999") == 2);
    CHECK(parse_error_position("x / 2") == 2);
    CHECK(parse_error_position("w") == 0);
}

TEST_CASE("malformed inputs never escape as anything but ParseError") {
    const char alphabet[] = "xyzr0123/+-*^() ";
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, sizeof(alphabet) - 2);
    std::uniform_int_distribution<int> len(0, 14);
    int rejected = 0;
    for (int i = 0; i < 3000; ++i) {
        std::string s;
        for (int k = len(rng); k > 0; --k) s += alphabet[pick(rng)];
        try {
            Poly p = parse_poly(s, i % 2 ? Q2 : Q);
            // anything accepted must round-trip
            CHECK(parse_poly(render(p), p.field()) == p);
        } catch (const ParseError& e) {
            CHECK(e.position() <= s.size());
            ++rejected;
        }
    }
    CHECK(rejected > 1000);
}

TEST_CASE("render and parse agree on every catalog polynomial") {
    for (const auto& e : catalog_entries()) {
        for (const auto& c : e.curve.components) {
            CHECK(parse_poly(render(c.poly), e.curve.field) == c.poly);
        }
    }
}

TEST_CASE("curve files") {
    Curve c = parse_curve_file(curve_doc);
    CHECK(c.name == "two lines and a conic");
    CHECK(c.components.size() == 3);
    CHECK(c.degree() == 4);
    CHECK(c.components[0].kind == ComponentKind::conic);

    Curve again = parse_curve_file(write_curve_file(c));
    CHECK(again.name == c.name);
    CHECK(again.field == c.field);
    REQUIRE(again.components.size() == c.components.size());
    for (std::size_t i = 0; i < c.components.size(); ++i) {
        CHECK(again.components[i].poly == c.components[i].poly);
        CHECK(again.components[i].label == c.components[i].label);
    }

    const auto dir = std::filesystem::temp_directory_path() / "ziegler-textio-test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "c.json") << curve_doc;
    }
    CHECK(read_curve_file(dir / "c.json").degree() == 4);
    CHECK_THROWS_AS(read_curve_file(dir / "missing.json"), Error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("curve file schema errors name the offending field") {
    CHECK(schema_path(R"({"name": "a", "components": []})") == "field");
    CHECK(schema_path(R"({"field": {"kind": "rational"}, "components": []})") == "name");
    CHECK(schema_path(R"({"name": "a", "field": {"kind": "rational"}, "components": []})") == "components");
    CHECK(schema_path(R"({"name": "a", "field": {"kind": "quadratic", "d": 4},
        "components": [{"label": "L", "kind": "line", "poly": "x"}]})") == "field.d");
    CHECK(schema_path(R"({"name": "a", "field": {"kind": "real"},
        "components": [{"label": "L", "kind": "line", "poly": "x"}]})") == "field.kind");
    CHECK(schema_path(R"({"name": "a", "field": {"kind": "rational"},
        "components": [{"label": "L", "kind": "line", "poly": "x^2 + y*z"}]})") == "components[0].poly");
    CHECK(schema_path(R"({"name": "a", "field": {"kind": "rational"},
        "components": [{"label": "L", "kind": "line", "poly": "x"}, {"label": "Q", "kind": "conic", "poly": "x^2 + y"}]})") ==
          "components[1].poly");
    CHECK(schema_path(R"({"name": "a", "field": {"kind": "rational"},
        "components": [{"label": "L", "kind": "line", "poly": "r*x"}]})") == "components[0].poly");
    CHECK(schema_path(R"({"name": "a", "field": {"kind": "rational"},
        "components": [{"label": "L", "kind": "segment", "poly": "x"}]})") == "components[0].kind");
    CHECK(schema_path(R"({"name": "a", "field": {"kind": "rational"},
        "components": [{"kind": "line", "poly": "x"}]})") == "components[0].label");
    CHECK(schema_path("{not json") == "$");
}

TEST_CASE("machine-readable reports") {
    Curve c = parse_curve_file(curve_doc);
    MilnorResolution m = milnor_resolution(c);
    auto doc = nlohmann::json::parse(write_resolution_report(c, m, ReportFormat::json));
    CHECK(doc["format_version"] == 1);
    CHECK(doc["command"] == "resolve");
    CHECK(betti_from_json(doc["betti"]) == m.betti);
    CHECK(doc["tjurina"] == m.tjurina);
    CHECK(doc["regularity"] == m.regularity);
    CHECK(doc["curve"]["degree"] == 4);

    SingularReport r = singular_report(c);
    auto sdoc = nlohmann::json::parse(write_singular_report(c, r, ReportFormat::json));
    CHECK(sdoc["format_version"] == 1);
    CHECK(sdoc["reduced"] == true);
    CHECK(sdoc["tjurina"] == *r.tjurina);
    CHECK(sdoc["saturated_piece_dims"].size() == 3);

    ZieglerVerdict v = ziegler_verdict(m.betti, m.betti, true);
    auto cdoc = nlohmann::json::parse(write_comparison_report(c, c, m.betti, m.betti, v, ReportFormat::json));
    CHECK(cdoc["verdict"] == "Inconclusive");
    CHECK(cdoc["first_difference"].is_null());

    CHECK_THROWS_AS(betti_from_json(nlohmann::json::parse("[[1, 2]]")), SchemaError);
}
