#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "ziegler/textio.hpp"

using namespace ziegler;

namespace {

const Field Q = Field::rational();

Poly P(const char* s, Field f = Q) { return parse_poly(s, f); }

}  // namespace

TEST_CASE("grevlex order on monomials") {
    // x > y > z, and among equal degrees the smaller power of z wins
    CHECK(grevlex_cmp(Monomial(1, 0, 0), Monomial(0, 1, 0)) > 0);
    CHECK(grevlex_cmp(Monomial(0, 1, 0), Monomial(0, 0, 1)) > 0);
    CHECK(grevlex_cmp(Monomial(1, 0, 1), Monomial(0, 2, 0)) < 0);
    CHECK(grevlex_cmp(Monomial(0, 0, 2), Monomial(1, 0, 0)) > 0);
    CHECK(Monomial(2, 1, 1).to_string() == "x^2*y*z");
    CHECK(Monomial::one().to_string() == "1");
    CHECK(monomial_count(0) == 1);
    CHECK(monomial_count(5) == 21);
    CHECK(monomial_count(-1) == 0);
}

TEST_CASE("polynomial arithmetic") {
    Poly a = P("x + y");
    Poly b = P("x - y");
    CHECK(a * b == P("x^2 - y^2"));
    CHECK(pow(a, 2) == P("x^2 + 2*x*y + y^2"));
    CHECK((a - a).is_zero());
    CHECK(P("3*x^2*y - 2*y*z^2").lead().mono == Monomial(2, 1, 0));
    CHECK(P("x^2 + y*z").is_homogeneous());
    CHECK_FALSE(P("x^2 + y").is_homogeneous());
    CHECK_THROWS_AS(P("x^2 + y").homogeneous_degree(), NotHomogeneous);
    CHECK_THROWS_AS(Poly(Q).homogeneous_degree(), NotHomogeneous);
    CHECK_THROWS_AS(P("x") + P("x", Field::quadratic(2)), FieldMismatch);
}

TEST_CASE("partial derivatives") {
    Poly f = P("x^3 + y^3 + z^3");
    CHECK(partial(f, Var::x) == P("3*x^2"));
    Poly g = P("x^2*y*z + y^4");
    CHECK(partial(g, Var::y) == P("x^2*z + 4*y^3"));
    CHECK(partial(P("x"), Var::z).is_zero());
}

TEST_CASE("Euler identity x f_x + y f_y + z f_z = d f on random forms") {
    std::mt19937 rng(11);
    for (Field f : {Q, Field::quadratic(2)}) {
        for (int d = 1; d <= 6; ++d) {
            Poly p = oracle::random_form(rng, f, d);
            Poly x = Poly::variable(f, Var::x), y = Poly::variable(f, Var::y), z = Poly::variable(f, Var::z);
            Poly lhs = x * partial(p, Var::x) + y * partial(p, Var::y) + z * partial(p, Var::z);
            CHECK(lhs == p.scaled(FieldElement::from_rational(f, Rational(d))));
        }
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(3);
    for (int i = 0; i < 40; ++i) {
        Poly a = oracle::random_form(rng, Q, 2), b = oracle::random_form(rng, Q, 3), c = oracle::random_form(rng, Q, 3);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        Poly s = b;
        s.submul_term(FieldElement(Rational(5, 3)), Monomial(1, 0, 2), c);
        CHECK(s == b - c.mul_term(Monomial(1, 0, 2), FieldElement(Rational(5, 3))));
        // terms strictly descending
        for (std::size_t k = 1; k < (a * b).size(); ++k) {
            CHECK(grevlex_cmp((a * b).terms()[k - 1].mono, (a * b).terms()[k].mono) > 0);
        }
    }
}
