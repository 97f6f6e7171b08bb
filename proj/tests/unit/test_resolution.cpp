#include <doctest.h>

#include <algorithm>
#include <random>

#include "support/oracles.hpp"
#include "ziegler/resolution.hpp"
#include "ziegler/textio.hpp"

using namespace ziegler;

namespace {

const Field Q = Field::rational();

Poly P(const char* s) { return parse_poly(s, Q); }

GroebnerBasis ideal(std::initializer_list<const char*> srcs) {
    std::vector<Poly> gens;
    for (auto s : srcs) gens.push_back(P(s));
    return buchberger(gens);
}

GroebnerBasis jacobian(const Poly& f) {
    return buchberger({partial(f, Var::x), partial(f, Var::y), partial(f, Var::z)});
}

const BettiTable koszul = {{{0, 0}, 1}, {{1, 1}, 3}, {{2, 2}, 3}, {{3, 3}, 1}};

void check_exact(const FreeResolution& R, const GroebnerBasis& J, int upto) {
    CHECK(is_complex(R));
    CHECK(is_graded(R));
    CHECK(R.length() <= 3);
    for (int t = 0; t <= upto; ++t) CHECK(resolution_hilbert_function(R, t) == hilbert_function(J, t));
}

}  // namespace

TEST_CASE("Koszul complex of the maximal ideal") {
    GroebnerBasis m = ideal({"x", "y", "z"});
    FreeResolution frame = free_resolution(m);
    FreeResolution R = minimize(frame);
    CHECK(betti_table(R) == koszul);
    CHECK(R.twists == frame.twists);
    CHECK(regularity(koszul) == 0);
    CHECK(koszul.chain_string() == "0 → S(-3) → S(-2)^3 → S(-1)^3 → S(0)");
    CHECK_THROWS_AS(betti_table(frame), NotMinimal);
}

TEST_CASE("Fermat curves have Koszul-shaped Milnor algebras") {
    for (int n = 3; n <= 6; ++n) {
        Poly f = pow(P("x"), n) + pow(P("y"), n) + pow(P("z"), n);
        GroebnerBasis J = jacobian(f);
        FreeResolution R = minimize(free_resolution(J));
        BettiTable want = {{{0, 0}, 1}, {{1, n - 1}, 3}, {{2, 2 * n - 2}, 3}, {{3, 3 * n - 3}, 1}};
        CHECK(betti_table(R) == want);
        check_exact(R, J, regularity(want) + 3);
    }
}

TEST_CASE("a split unit summand is cancelled") {
    // Koszul complex of (x, y, z) with S(-2) -> S(-2) glued in: the new basis vector
    // of F_1 maps to x*y and the new vector of F_2 maps to it minus y * e_x.
    GroebnerBasis m = ideal({"x", "y", "z"});
    FreeResolution R = free_resolution(m);
    R.twists[1].push_back(2);
    R.twists[2].push_back(2);
    PolyMatrix d1(Q, 1, 4), d2(Q, 4, R.differentials[1].cols() + 1);
    for (std::size_t c = 0; c < 3; ++c) d1.at(0, c) = R.differentials[0].at(0, c);
    d1.at(0, 3) = P("x*y");
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c + 1 < d2.cols(); ++c) d2.at(r, c) = R.differentials[1].at(r, c);
    }
    std::size_t ex = 0;
    while (!(d1.at(0, ex) == P("x"))) ++ex;
    d2.at(3, d2.cols() - 1) = P("1");
    d2.at(ex, d2.cols() - 1) = P("-y");
    PolyMatrix d3(Q, d2.cols(), R.differentials[2].cols());
    for (std::size_t r = 0; r + 1 < d2.cols(); ++r) {
        for (std::size_t c = 0; c < d3.cols(); ++c) d3.at(r, c) = R.differentials[2].at(r, c);
    }
    R.differentials = {d1, d2, d3};
    REQUIRE(is_complex(R));
    REQUIRE(has_unit_entries(R));

    FreeResolution M = minimize(R);
    CHECK_FALSE(has_unit_entries(M));
    CHECK(is_complex(M));
    CHECK(betti_table(M) == koszul);
}

TEST_CASE("Zariski sextic resolutions") {
    Poly b1 = parse_poly("(x^2 + y^2 + z^2)^3 + (x^3 + y^3 + z^3)^2", Q);
    GroebnerBasis J = jacobian(b1);
    FreeResolution frame = free_resolution(J);
    CHECK(is_complex(frame));
    FreeResolution R = minimize(frame);
    BettiTable B = betti_table(R);
    CHECK(B.chain_string() == "0 → S(-11) ⊕ S(-12) → S(-8) ⊕ S(-10)^3 → S(-5)^3 → S(0)");
    CHECK(regularity(B) == 9);
    check_exact(R, J, 12);
    CHECK_FALSE(has_unit_entries(R));
}

TEST_CASE("Betti numerators") {
    BettiTable deg8 = {{{0, 0}, 1}, {{1, 7}, 3}, {{2, 11}, 1}, {{2, 12}, 2}, {{3, 14}, 1}};
    BettiNumerator N = betti_numerator(deg8);
    CHECK(N.value_at_one == 0);
    CHECK(N.derivative_at_one == 0);
    CHECK(N.half_second_derivative_at_one == 33);
    CHECK(N.coefficients == std::map<int, long>{{0, 1}, {7, -3}, {11, 1}, {12, 2}, {14, -1}});

    BettiTable sextic = {{{0, 0}, 1}, {{1, 5}, 3}, {{2, 8}, 1}, {{2, 10}, 3}, {{3, 11}, 1}, {{3, 12}, 1}};
    CHECK(betti_numerator(sextic).half_second_derivative_at_one == 12);

    BettiTable first = {{{0, 0}, 1}, {{1, 6}, 3}, {{2, 9}, 1}, {{2, 10}, 1}, {{2, 11}, 1}, {{3, 12}, 1}};
    BettiTable second = {{{0, 0}, 1}, {{1, 6}, 3}, {{2, 10}, 4}, {{3, 11}, 2}};
    CHECK(betti_numerator(first).half_second_derivative_at_one == 25);
    CHECK(betti_numerator(second).half_second_derivative_at_one == 25);

    BettiTable deg8b2 = {{{0, 0}, 1}, {{1, 7}, 3}, {{2, 12}, 5}, {{3, 13}, 3}};
    CHECK(regularity(deg8b2) == 10);
    // Hilbert function from the table equals the numerator's stabilized value
    CHECK(betti_hilbert_function(deg8b2, 20) == betti_numerator(deg8b2).half_second_derivative_at_one);
}

TEST_CASE("diagram rendering") {
    BettiTable B = {{{0, 0}, 1}, {{1, 2}, 2}, {{2, 3}, 1}};
    CHECK(B.diagram() ==
          "        0 1 2\n"
          "total:  1 2 1\n"
          "     0: 1 . .\n"
          "     1: . 2 1\n");
    CHECK(B.module_string(1) == "S(-2)^2");
    CHECK(B.module_string(5) == "0");
}

TEST_CASE("random ideals: exactness, minimality and order independence") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> count(2, 5), deg(1, 4);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Poly> gens;
        for (int i = count(rng); i > 0; --i) gens.push_back(oracle::random_form(rng, Q, deg(rng), 0.5));
        GroebnerBasis J = buchberger(gens);
        FreeResolution frame = free_resolution(J);
        CHECK(is_complex(frame));
        FreeResolution R = minimize(frame);
        BettiTable B = betti_table(R);
        CHECK(B.at(0, 0) == 1);
        CHECK_FALSE(has_unit_entries(R));
        check_exact(R, J, regularity(B) + 3);
        for (int t = 0; t <= regularity(B) + 3; ++t) CHECK(betti_hilbert_function(B, t) == oracle::quotient_dim(Q, gens, t));

        long alternating = 0;
        for (int i = 0; i <= B.length(); ++i) alternating += (i % 2 ? -1 : 1) * B.total(i);
        CHECK(alternating == 0);

        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(betti_table(minimize(free_resolution(buchberger(gens)))) == B);
    }
}
