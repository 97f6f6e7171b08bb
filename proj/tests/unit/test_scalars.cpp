#include <doctest.h>

#include <random>

#include "ziegler/scalars.hpp"

using namespace ziegler;

namespace {

FieldElement q2(long a, long b) {
    return FieldElement::from_parts(Field::quadratic(2), Rational(a), Rational(b));
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
    CHECK(make_rational(6, -4) == Rational(-3, 2));
    CHECK(make_rational(0, 5) == Rational(0));
    CHECK_THROWS_AS(make_rational(1, 0), DivisionByZero);
}

TEST_CASE("field descriptors") {
    CHECK(Field::rational().is_rational());
    CHECK(Field::quadratic(2).d() == 2);
    CHECK(Field::quadratic(2).to_string() == "QQ(sqrt(2))");
    CHECK(Field::rational().to_string() == "QQ");
    CHECK_THROWS(Field::quadratic(4));
    CHECK_THROWS(Field::quadratic(1));
    CHECK_THROWS(Field::quadratic(-3));
    CHECK(Field::quadratic(2) != Field::rational());
}

TEST_CASE("quadratic extension arithmetic") {
    QuadExt u{Rational(1), Rational(1), 2};
    QuadExt v{Rational(1), Rational(-1), 2};
    CHECK(quad_mul(u, v) == QuadExt{Rational(-1), Rational(0), 2});
    CHECK(u.norm() == -1);
    CHECK(quad_mul(u, quad_inv(u)) == QuadExt{Rational(1), Rational(0), 2});
    CHECK_THROWS_AS(quad_inv(QuadExt{Rational(0), Rational(0), 2}), DivisionByZero);
    CHECK_THROWS_AS(quad_add(u, QuadExt{Rational(1), Rational(1), 3}), FieldMismatch);
}

TEST_CASE("field elements refuse to mix fields") {
    FieldElement a = FieldElement::one(Field::rational());
    FieldElement b = FieldElement::one(Field::quadratic(2));
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK_THROWS_AS(FieldElement::zero(Field::rational()).inverse(), DivisionByZero);
    // scaling by a rational is always fine
    CHECK((b * Rational(3, 2)).real() == Rational(3, 2));
}

TEST_CASE("field element rendering") {
    CHECK(FieldElement(Rational(3, 2)).to_string() == "3/2");
    CHECK(FieldElement(Rational(-7)).to_string() == "-7");
    CHECK(q2(0, 1).to_string() == "r");
    CHECK(q2(0, 2).to_string() == "2*r");
    CHECK(q2(1, 2).to_string() == "(1 + 2*r)");
    CHECK(q2(1, -1).to_string() == "(1 - r)");
}

TEST_CASE("field axioms hold on random elements of Q(sqrt 2)") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    auto rnd = [&] {
        return FieldElement::from_parts(Field::quadratic(2), make_rational(d(rng), 1 + std::abs(d(rng))),
                                        make_rational(d(rng), 1 + std::abs(d(rng))));
    };
    for (int i = 0; i < 200; ++i) {
        FieldElement a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        FieldElement s = c;
        s.submul(a, b);
        CHECK(s == c - a * b);
    }
}
