#pragma once

// Exact coefficient arithmetic: the rationals and real quadratic fields Q(sqrt d).

#include <gmpxx.h>

#include <string>
#include <variant>

#include "ziegler/errors.hpp"

namespace ziegler {

using Integer = mpz_class;
using Rational = mpq_class;

/// n/m in lowest terms with a positive denominator.
Rational make_rational(const Integer& n, const Integer& m);

/// Coefficient field descriptor. `d == 0` is Q, otherwise Q(sqrt d) with d square-free and > 1.
class Field {
public:
    Field() = default;

    static Field rational() { return Field{}; }
    static Field quadratic(long d);

    bool is_rational() const noexcept { return d_ == 0; }
    long d() const noexcept { return d_; }

    friend bool operator==(Field, Field) = default;

    std::string to_string() const;

private:
    explicit Field(long d) : d_(d) {}
    long d_ = 0;
};

/// a + b*sqrt(d).
struct QuadExt {
    Rational a;
    Rational b;
    long d = 2;

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    QuadExt conjugate() const { return {a, -b, d}; }
    Rational norm() const { return a * a - d * b * b; }

    friend bool operator==(const QuadExt& u, const QuadExt& v) {
        return u.d == v.d && u.a == v.a && u.b == v.b;
    }
};

QuadExt quad_add(const QuadExt& u, const QuadExt& v);
QuadExt quad_sub(const QuadExt& u, const QuadExt& v);
QuadExt quad_mul(const QuadExt& u, const QuadExt& v);
QuadExt quad_inv(const QuadExt& u);

/// Element of a coefficient field: a Rational for Q, a QuadExt for Q(sqrt d).
///
/// Binary operations require both operands to live in the same field and throw
/// FieldMismatch otherwise. Scaling by a plain Rational is always allowed since
/// Q sits inside every field we support.
class FieldElement {
public:
    FieldElement() : value_(Rational(0)) {}
    explicit FieldElement(Rational q) : value_(std::move(q)) {}
    explicit FieldElement(QuadExt q);

    static FieldElement zero(Field f) { return from_rational(f, Rational(0)); }
    static FieldElement one(Field f) { return from_rational(f, Rational(1)); }
    static FieldElement from_rational(Field f, Rational q);
    static FieldElement from_parts(Field f, Rational a, Rational b);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;
    /// True when the element is a rational number, whatever field it lives in.
    bool is_rational_value() const;

    /// Rational part a of a + b*sqrt(d).
    const Rational& real() const;
    /// Coefficient b of sqrt(d); zero over Q.
    Rational surd() const;

    FieldElement inverse() const;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }
    FieldElement& operator*=(const Rational& q);
    FieldElement operator-() const;
    void negate();

    /// *this -= a * b, without building the product as a separate FieldElement.
    void submul(const FieldElement& a, const FieldElement& b);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend FieldElement operator*(FieldElement a, const Rational& q) { return a *= q; }
    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.value_ == b.value_; }

    /// Text in the expression grammar, e.g. "-3/2", "r", "(1 + 2*r)".
    std::string to_string() const;

private:
    std::variant<Rational, QuadExt> value_;
};

}  // namespace ziegler
