#include "ziegler/scalars.hpp"

#include <cassert>

namespace ziegler {

Rational make_rational(const Integer& n, const Integer& m) {
    if (sgn(m) == 0) throw DivisionByZero();
    Rational q(n, m);
    q.canonicalize();
    return q;
}

namespace {

bool square_free(long d) {
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

void require_same(const QuadExt& u, const QuadExt& v) {
    if (u.d != v.d) throw FieldMismatch();
}

}  // namespace

Field Field::quadratic(long d) {
    if (d <= 1 || !square_free(d)) {
        throw Error("quadratic field parameter must be a square-free integer > 1, got " +
                    std::to_string(d));
    }
    return Field(d);
}

std::string Field::to_string() const {
    return is_rational() ? std::string("QQ") : "QQ(sqrt(" + std::to_string(d_) + "))";
}

QuadExt quad_add(const QuadExt& u, const QuadExt& v) {
    require_same(u, v);
    return {u.a + v.a, u.b + v.b, u.d};
}

QuadExt quad_sub(const QuadExt& u, const QuadExt& v) {
    require_same(u, v);
    return {u.a - v.a, u.b - v.b, u.d};
}

QuadExt quad_mul(const QuadExt& u, const QuadExt& v) {
    require_same(u, v);
    return {u.a * v.a + u.d * u.b * v.b, u.a * v.b + v.a * u.b, u.d};
}

QuadExt quad_inv(const QuadExt& u) {
    if (u.is_zero()) throw DivisionByZero();
    Rational n = u.norm();
    // a^2 = d b^2 has no rational solution for square-free d > 1
    assert(sgn(n) != 0);
    return {u.a / n, -u.b / n, u.d};
}

FieldElement::FieldElement(QuadExt q) : value_(std::move(q)) {
    Field::quadratic(std::get<QuadExt>(value_).d);
}

FieldElement FieldElement::from_rational(Field f, Rational q) {
    if (f.is_rational()) return FieldElement(std::move(q));
    FieldElement e;
    e.value_ = QuadExt{std::move(q), Rational(0), f.d()};
    return e;
}

FieldElement FieldElement::from_parts(Field f, Rational a, Rational b) {
    if (f.is_rational()) {
        if (sgn(b) != 0) throw FieldMismatch();
        return FieldElement(std::move(a));
    }
    FieldElement e;
    e.value_ = QuadExt{std::move(a), std::move(b), f.d()};
    return e;
}

Field FieldElement::field() const {
    if (auto* q = std::get_if<QuadExt>(&value_)) return Field::quadratic(q->d);
    return Field::rational();
}

bool FieldElement::is_zero() const {
    if (auto* r = std::get_if<Rational>(&value_)) return sgn(*r) == 0;
    return std::get<QuadExt>(value_).is_zero();
}

bool FieldElement::is_one() const {
    if (auto* r = std::get_if<Rational>(&value_)) return *r == 1;
    const auto& q = std::get<QuadExt>(value_);
    return q.a == 1 && sgn(q.b) == 0;
}

bool FieldElement::is_rational_value() const {
    if (std::holds_alternative<Rational>(value_)) return true;
    return sgn(std::get<QuadExt>(value_).b) == 0;
}

const Rational& FieldElement::real() const {
    if (auto* r = std::get_if<Rational>(&value_)) return *r;
    return std::get<QuadExt>(value_).a;
}

Rational FieldElement::surd() const {
    if (auto* q = std::get_if<QuadExt>(&value_)) return q->b;
    return Rational(0);
}

FieldElement FieldElement::inverse() const {
    if (auto* r = std::get_if<Rational>(&value_)) {
        if (sgn(*r) == 0) throw DivisionByZero();
        Rational inv = 1 / *r;
        return FieldElement(std::move(inv));
    }
    return FieldElement(quad_inv(std::get<QuadExt>(value_)));
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    if (value_.index() != o.value_.index()) throw FieldMismatch();
    if (auto* r = std::get_if<Rational>(&value_)) {
        *r += std::get<Rational>(o.value_);
    } else {
        auto& u = std::get<QuadExt>(value_);
        const auto& v = std::get<QuadExt>(o.value_);
        if (u.d != v.d) throw FieldMismatch();
        u.a += v.a;
        u.b += v.b;
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    if (value_.index() != o.value_.index()) throw FieldMismatch();
    if (auto* r = std::get_if<Rational>(&value_)) {
        *r -= std::get<Rational>(o.value_);
    } else {
        auto& u = std::get<QuadExt>(value_);
        const auto& v = std::get<QuadExt>(o.value_);
        if (u.d != v.d) throw FieldMismatch();
        u.a -= v.a;
        u.b -= v.b;
    }
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    if (value_.index() != o.value_.index()) throw FieldMismatch();
    if (auto* r = std::get_if<Rational>(&value_)) {
        *r *= std::get<Rational>(o.value_);
    } else {
        auto& u = std::get<QuadExt>(value_);
        u = quad_mul(u, std::get<QuadExt>(o.value_));
    }
    return *this;
}

FieldElement& FieldElement::operator*=(const Rational& q) {
    if (auto* r = std::get_if<Rational>(&value_)) {
        *r *= q;
    } else {
        auto& u = std::get<QuadExt>(value_);
        u.a *= q;
        u.b *= q;
    }
    return *this;
}

void FieldElement::negate() {
    if (auto* r = std::get_if<Rational>(&value_)) {
        mpq_neg(r->get_mpq_t(), r->get_mpq_t());
    } else {
        auto& u = std::get<QuadExt>(value_);
        mpq_neg(u.a.get_mpq_t(), u.a.get_mpq_t());
        mpq_neg(u.b.get_mpq_t(), u.b.get_mpq_t());
    }
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    r.negate();
    return r;
}

void FieldElement::submul(const FieldElement& a, const FieldElement& b) {
    if (value_.index() != a.value_.index() || value_.index() != b.value_.index()) {
        throw FieldMismatch();
    }
    if (auto* r = std::get_if<Rational>(&value_)) {
        thread_local Rational tmp;
        mpq_mul(tmp.get_mpq_t(), std::get<Rational>(a.value_).get_mpq_t(),
                std::get<Rational>(b.value_).get_mpq_t());
        mpq_sub(r->get_mpq_t(), r->get_mpq_t(), tmp.get_mpq_t());
    } else {
        auto& u = std::get<QuadExt>(value_);
        QuadExt p = quad_mul(std::get<QuadExt>(a.value_), std::get<QuadExt>(b.value_));
        if (u.d != p.d) throw FieldMismatch();
        u.a -= p.a;
        u.b -= p.b;
    }
}

std::string FieldElement::to_string() const {
    if (auto* r = std::get_if<Rational>(&value_)) return r->get_str();
    const auto& q = std::get<QuadExt>(value_);
    if (sgn(q.b) == 0) return q.a.get_str();
    std::string surd = q.b == 1 ? std::string("r") : q.b == -1 ? std::string("-r") : q.b.get_str() + "*r";
    if (sgn(q.a) == 0) return surd;
    std::string s = "(" + q.a.get_str();
    if (sgn(q.b) < 0) {
        Rational nb = -q.b;
        s += " - " + (nb == 1 ? std::string("r") : nb.get_str() + "*r");
    } else {
        s += " + " + surd;
    }
    return s + ")";
}

}  // namespace ziegler
