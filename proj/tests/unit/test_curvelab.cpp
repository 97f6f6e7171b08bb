#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "support/oracles.hpp"
#include "ziegler/catalog.hpp"

using namespace ziegler;

namespace {

const Field Q = Field::rational();

Curve curve(const std::string& name, std::vector<std::pair<ComponentKind, const char*>> parts, Field f = Q) {
    Curve c;
    c.name = name;
    c.field = f;
    int i = 0;
    for (const auto& [kind, src] : parts) c.components.push_back({"P" + std::to_string(i++), kind, parse_poly(src, f)});
    return c;
}

const Curve& entry(const char* key) {
    const CatalogEntry* e = find_entry(key);
    REQUIRE(e != nullptr);
    return e->curve;
}

const BettiTable first_shape = {{{0, 0}, 1}, {{1, 6}, 3}, {{2, 9}, 1}, {{2, 10}, 1}, {{2, 11}, 1}, {{3, 12}, 1}};
const BettiTable second_shape = {{{0, 0}, 1}, {{1, 6}, 3}, {{2, 10}, 4}, {{3, 11}, 2}};

}  // namespace

TEST_CASE("curve polynomials") {
    CHECK(curve_polynomial(entry("deg7-B2,1")).homogeneous_degree() == 7);
    CHECK(entry("deg7-B2,1").components.size() == 5);
    CHECK(curve_polynomial(entry("deg8-B1")).homogeneous_degree() == 8);
    Curve line = curve("x", {{ComponentKind::line, "x"}});
    CHECK(curve_polynomial(line) == parse_poly("x", Q));
    CHECK(curve_polynomial(curve("two", {{ComponentKind::line, "x"}, {ComponentKind::line, "y"}})) ==
          parse_poly("x*y", Q));
}

TEST_CASE("curve validation") {
    CHECK_THROWS_AS(validate_curve(curve("bad", {{ComponentKind::line, "x^2"}})), SchemaError);
    CHECK_THROWS_AS(validate_curve(curve("bad", {{ComponentKind::conic, "x^2 + y"}})), SchemaError);
    CHECK_THROWS_AS(validate_curve(curve("bad", {{ComponentKind::sextic_irreducible, "x^5*y"}, {ComponentKind::line, "0"}})),
                    SchemaError);
    CHECK_NOTHROW(validate_curve(curve("ok", {{ComponentKind::curve, "x^3 + y^3 + z^3"}})));
    CHECK(component_kind_from_string("sextic-irreducible") == ComponentKind::sextic_irreducible);
    CHECK_FALSE(component_kind_from_string("cubic").has_value());
}

TEST_CASE("Jacobian ideals") {
    auto fermat = jacobian_ideal(parse_poly("x^3 + y^3 + z^3", Q)).polys();
    CHECK(fermat.size() == 3);
    for (auto s : {"x^2", "y^2", "z^2"}) CHECK(std::count(fermat.begin(), fermat.end(), parse_poly(s, Q)) == 1);

    GroebnerBasis xyz = jacobian_ideal(parse_poly("x*y*z", Q));
    CHECK(same_basis(xyz, buchberger({parse_poly("y*z", Q), parse_poly("x*z", Q), parse_poly("x*y", Q)})));

    Poly f = curve_polynomial(entry("sextic-B1"));
    GroebnerBasis J = jacobian_ideal(f);
    CHECK(normal_form(f, J).is_zero());
    int lowest = 100;
    for (const auto& g : J.polys()) lowest = std::min(lowest, g.homogeneous_degree());
    CHECK(lowest == 5);

    CHECK_THROWS(jacobian_ideal(parse_poly("x + y", Q)));
}

TEST_CASE("Euler membership for every catalog curve") {
    for (const auto& e : catalog_entries()) {
        Poly f = curve_polynomial(e.curve);
        CHECK(normal_form(f, jacobian_ideal(f)).is_zero());
    }
}

TEST_CASE("AR generator degrees") {
    CHECK(ar_generator_degrees(first_shape, 7) == std::vector<int>{3, 4, 5});
    CHECK(ar_generator_degrees(second_shape, 7) == std::vector<int>{4, 4, 4, 4});
    Curve quintic = curve("fermat", {{ComponentKind::curve, "x^5 + y^5 + z^5"}});
    MilnorResolution m = milnor_resolution(quintic);
    CHECK(ar_generator_degrees(m.betti, 5) == std::vector<int>{4, 4, 4});
    CHECK(m.tjurina == 0);
    for (const auto& e : catalog_entries()) {
        if (!e.expected_betti) continue;
        long beta2 = 0;
        for (const auto& [k, v] : e.expected_betti->entries()) {
            if (k.first == 2) beta2 += v;
        }
        CHECK(long(ar_generator_degrees(*e.expected_betti, e.curve.degree()).size()) == beta2);
    }
}

TEST_CASE("non-reduced curves are rejected with their Hilbert profile") {
    Curve doubled = curve("double line", {{ComponentKind::line, "x"}, {ComponentKind::line, "x"},
                                          {ComponentKind::conic, "y*z - x^2"}});
    try {
        milnor_resolution(doubled);
        FAIL("expected NotReduced");
    } catch (const NotReduced& e) {
        const auto& p = e.profile();
        REQUIRE(p.size() >= 3);
        CHECK(p.back().second > p[p.size() - 2].second);
    }
    SingularReport r = singular_report(doubled);
    CHECK_FALSE(r.reduced_ok);
    CHECK_FALSE(r.tjurina.has_value());
}

TEST_CASE("singular reports of the sextic pair") {
    for (const char* key : {"sextic-B1", "sextic-B2"}) {
        const Curve& c = entry(key);
        SingularReport r = singular_report(c);
        CHECK(r.reduced_ok);
        CHECK(r.tjurina == 12);
        CHECK(r.saturation_rounds <= 10);
        CHECK(r.saturated_profile.back().second == 12);
        // saturated pieces against the shifted-multiplication oracle
        const Poly f = curve_polynomial(c);
        const std::vector<Poly> jac = {partial(f, Var::x), partial(f, Var::y), partial(f, Var::z)};
        for (int k = 1; k <= 3; ++k) {
            CHECK(r.saturated_piece_dims.at(k) == oracle::saturated_piece_dim(Q, jac, k, r.regularity + 1));
        }
    }
    // the cubic through the cusps lies in the saturated Jacobian ideal of the Zariski sextic
    SingularReport b1 = singular_report(entry("sextic-B1"));
    SingularReport b2 = singular_report(entry("sextic-B2"));
    CHECK(b1.saturated_piece_dims.at(3) == 1);
    CHECK(b2.saturated_piece_dims.at(3) == 0);
    CHECK(b1.hilbert_profile.size() == std::size_t(b1.regularity + 4));
}

TEST_CASE("Tjurina numbers from singularity census") {
    CHECK(expected_tjurina({{"node", 7}, {"tacnode", 6}, {"triple", 2}}) == 33);
    CHECK(expected_tjurina({{"cusp", 6}}) == 12);
    CHECK(expected_tjurina({}) == 0);
    CHECK_THROWS_AS(expected_tjurina({{"swallowtail", 1}}), std::invalid_argument);
    CHECK(singular_report(entry("deg8-B1")).tjurina == 33);
}

TEST_CASE("Betti comparison and verdicts") {
    const BettiTable& b1 = *find_entry("sextic-B1")->expected_betti;
    const BettiTable& b2 = *find_entry("sextic-B2")->expected_betti;
    CHECK(compare_betti(b1, b1).equal);
    BettiComparison d = compare_betti(b1, b2);
    CHECK_FALSE(d.equal);
    CHECK(d.first_difference == BettiTable::Key{2, 8});
    CHECK(d.left == 1);
    CHECK(d.right == 0);
    CHECK(compare_betti(b2, b1).first_difference == d.first_difference);

    CHECK(ziegler_verdict(first_shape, second_shape, true).verdict == Verdict::StrongZiegler);
    CHECK(ziegler_verdict(first_shape, first_shape, true).verdict == Verdict::Inconclusive);
    CHECK(ziegler_verdict(first_shape, second_shape, false).verdict == Verdict::NotComparable);
    CHECK(ziegler_verdict(entry("deg7-B4,1"), entry("deg7-B4,3"), true).verdict == Verdict::Inconclusive);
    CHECK(ziegler_verdict(entry("deg7-B1,1"), entry("deg7-B1,2"), true).verdict == Verdict::StrongZiegler);
    CHECK(ziegler_verdict(entry("deg8-B2"), entry("deg8-B3"), true).verdict == Verdict::Inconclusive);
}

TEST_CASE("Betti tables ignore scaling and component order") {
    for (const char* key : {"deg7-B5,1", "deg7-B1,2", "deg8-B1"}) {
        Curve c = entry(key);
        const BettiTable want = milnor_resolution(c).betti;
        Curve scaled = c;
        scaled.components[0].poly = c.components[0].poly.scaled(FieldElement::from_rational(c.field, Rational(-7, 3)));
        CHECK(milnor_resolution(scaled).betti == want);
        Curve permuted = c;
        std::reverse(permuted.components.begin(), permuted.components.end());
        CHECK(milnor_resolution(permuted).betti == want);
    }
}

TEST_CASE("checked analysis and the profile guard band") {
    AnalysisOptions opts;
    opts.check = true;
    opts.max_degree = 20;
    MilnorResolution m = milnor_resolution(entry("deg7-B3,1"), opts);
    CHECK(m.profile.size() == 21);
    CHECK(m.betti == first_shape);
    opts.max_degree = 0;  // never shorter than regularity + 2
    CHECK(milnor_resolution(entry("deg7-B3,1"), opts).profile.size() == std::size_t(m.regularity + 3));
}

TEST_CASE("Jacobian basis cache") {
    const auto dir = std::filesystem::temp_directory_path() / "ziegler-cache-test";
    std::filesystem::remove_all(dir);
    ::setenv("ZIEGLER_CACHE_DIR", dir.c_str(), 1);
    AnalysisOptions opts;
    opts.cache = true;
    Poly f = curve_polynomial(entry("deg7-B5,2"));
    GroebnerBasis first = jacobian_ideal(f, opts);
    CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) == 1);
    clear_jacobian_cache();
    opts.check = true;
    GroebnerBasis reloaded = jacobian_ideal(f, opts);
    CHECK(same_basis(first, reloaded));
    CHECK(same_basis(first, jacobian_ideal(f)));
    ::unsetenv("ZIEGLER_CACHE_DIR");
    clear_jacobian_cache();
    std::filesystem::remove_all(dir);
}

TEST_CASE("asserted combinatorics are checked against tau and component degrees") {
    const Curve& a = entry("deg7-B4,1");
    const Curve& b = entry("deg7-B4,2");
    ZieglerVerdict ok = ziegler_verdict(a, milnor_resolution(a), b, milnor_resolution(b), true);
    CHECK(ok.assertion_violations.empty());
    CHECK(ok.verdict == Verdict::Inconclusive);

    const Curve& s = entry("sextic-B1");
    ZieglerVerdict bad = ziegler_verdict(s, milnor_resolution(s), a, milnor_resolution(a), true);
    CHECK(bad.assertion_violations.size() == 2);
    CHECK(bad.verdict == Verdict::StrongZiegler);
    CHECK(ziegler_verdict(s, milnor_resolution(s), a, milnor_resolution(a), false).assertion_violations.empty());
}
