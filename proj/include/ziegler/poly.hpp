#pragma once

#include <string>
#include <vector>

#include "ziegler/monomial.hpp"
#include "ziegler/scalars.hpp"

namespace ziegler {

struct Term {
    Monomial mono;
    FieldElement coef;
};

/// Sparse polynomial in Q[x,y,z] or Q(sqrt d)[x,y,z].
///
/// Terms are kept strictly descending in grevlex with no zero coefficients, so
/// the zero polynomial is the empty term list and equality is structural.
class Poly {
public:
    explicit Poly(Field f = Field::rational()) : field_(f) {}

    static Poly constant(Field f, const FieldElement& c);
    static Poly constant(Field f, const Rational& q) { return constant(f, FieldElement::from_rational(f, q)); }
    static Poly variable(Field f, Var v);
    static Poly monomial(Field f, const Monomial& m, const FieldElement& c);
    /// Sorts, merges duplicate monomials and drops zero coefficients.
    static Poly from_terms(Field f, std::vector<Term> terms);

    Field field() const noexcept { return field_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    const Term& lead() const { return terms_.front(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_homogeneous() const;
    /// Common degree of all terms; throws NotHomogeneous on mixed degrees or the zero polynomial.
    int homogeneous_degree() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator-() const;

    Poly scaled(const FieldElement& c) const;
    Poly mul_term(const Monomial& m, const FieldElement& c) const;
    /// *this -= c * m * g.
    void submul_term(const FieldElement& c, const Monomial& m, const Poly& g);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.field_ != b.field_ || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
        }
        return true;
    }

    /// Rendering in the curve-file expression grammar ("-9/8*x^2 + y*z").
    std::string to_string() const;

private:
    void require_field(const Poly& o) const {
        if (field_ != o.field_) throw FieldMismatch();
    }

    Field field_;
    std::vector<Term> terms_;
};

Poly pow(const Poly& p, unsigned n);

/// Formal partial derivative.
Poly partial(const Poly& f, Var v);

}  // namespace ziegler
