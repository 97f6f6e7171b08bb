#include "ziegler/poly.hpp"

#include <algorithm>
#include <map>

namespace ziegler {

std::string Monomial::to_string() const {
    if (is_one()) return "1";
    static constexpr const char* names[] = {"x", "y", "z"};
    std::string s;
    for (int i = 0; i < 3; ++i) {
        if (e_[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += names[i];
        if (e_[i] > 1) s += '^' + std::to_string(e_[i]);
    }
    return s;
}

Poly Poly::constant(Field f, const FieldElement& c) {
    return monomial(f, Monomial::one(), c);
}

Poly Poly::variable(Field f, Var v) {
    return monomial(f, Monomial::of(v), FieldElement::one(f));
}

Poly Poly::monomial(Field f, const Monomial& m, const FieldElement& c) {
    if (c.field() != f) throw FieldMismatch();
    Poly p(f);
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

Poly Poly::from_terms(Field f, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return a.mono.grevlex_key() > b.mono.grevlex_key();
    });
    Poly p(f);
    for (auto& t : terms) {
        if (t.coef.field() != f) throw FieldMismatch();
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coef += t.coef;
            if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
        } else if (!t.coef.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Poly::is_homogeneous() const {
    for (const auto& t : terms_) {
        if (t.mono.degree() != terms_.front().mono.degree()) return false;
    }
    return true;
}

int Poly::homogeneous_degree() const {
    if (terms_.empty()) throw NotHomogeneous("zero polynomial has no degree");
    if (!is_homogeneous()) throw NotHomogeneous();
    return static_cast<int>(terms_.front().mono.degree());
}

namespace {

// out = a + sign * (c * m * b), merging two descending term lists.
void merge_into(std::vector<Term>& out, const std::vector<Term>& a, const std::vector<Term>& b,
                const FieldElement* c, const Monomial& m, bool subtract) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    auto scaled = [&](const Term& t) {
        Term r{t.mono * m, t.coef};
        if (c) r.coef *= *c;
        if (subtract) r.coef.negate();
        return r;
    };
    while (i < a.size() && j < b.size()) {
        const Monomial bm = b[j].mono * m;
        auto ka = a[i].mono.grevlex_key(), kb = bm.grevlex_key();
        if (ka > kb) {
            out.push_back(a[i++]);
        } else if (ka < kb) {
            out.push_back(scaled(b[j++]));
        } else {
            Term t = a[i++];
            if (c) {
                if (subtract) t.coef.submul(*c, b[j].coef);
                else t.coef += *c * b[j].coef;
            } else if (subtract) {
                t.coef -= b[j].coef;
            } else {
                t.coef += b[j].coef;
            }
            ++j;
            if (!t.coef.is_zero()) out.push_back(std::move(t));
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(scaled(b[j]));
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
    require_field(o);
    std::vector<Term> out;
    merge_into(out, terms_, o.terms_, nullptr, Monomial::one(), false);
    terms_ = std::move(out);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_field(o);
    std::vector<Term> out;
    merge_into(out, terms_, o.terms_, nullptr, Monomial::one(), true);
    terms_ = std::move(out);
    return *this;
}

void Poly::submul_term(const FieldElement& c, const Monomial& m, const Poly& g) {
    require_field(g);
    if (c.is_zero() || g.is_zero()) return;
    std::vector<Term> out;
    merge_into(out, terms_, g.terms_, &c, m, true);
    terms_ = std::move(out);
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coef.negate();
    return r;
}

Poly Poly::scaled(const FieldElement& c) const {
    return mul_term(Monomial::one(), c);
}

Poly Poly::mul_term(const Monomial& m, const FieldElement& c) const {
    if (c.field() != field_) throw FieldMismatch();
    Poly r(field_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.require_field(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    // accumulate by monomial; a std::map keyed on the grevlex key keeps the result sorted
    std::map<std::uint64_t, Term, std::greater<>> acc;
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) {
            Monomial m = s.mono * t.mono;
            auto [it, fresh] = acc.try_emplace(m.grevlex_key(), Term{m, s.coef * t.coef});
            if (!fresh) it->second.coef += s.coef * t.coef;
        }
    }
    Poly r(a.field_);
    r.terms_.reserve(acc.size());
    for (auto& [k, t] : acc) {
        if (!t.coef.is_zero()) r.terms_.push_back(std::move(t));
    }
    return r;
}

Poly pow(const Poly& p, unsigned n) {
    Poly r = Poly::constant(p.field(), Rational(1));
    for (unsigned i = 0; i < n; ++i) r *= p;
    return r;
}

Poly partial(const Poly& f, Var v) {
    std::vector<Term> out;
    const int idx = static_cast<int>(v);
    for (const auto& t : f.terms()) {
        unsigned e = t.mono[idx];
        if (e == 0) continue;
        unsigned ex[3] = {t.mono[0], t.mono[1], t.mono[2]};
        --ex[idx];
        out.push_back({Monomial(ex[0], ex[1], ex[2]), t.coef * Rational(e)});
    }
    // lowering one exponent does not preserve grevlex order in general
    return Poly::from_terms(f.field(), std::move(out));
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        FieldElement c = t.coef;
        bool negative = sgn(c.real()) < 0 || (sgn(c.real()) == 0 && sgn(c.surd()) < 0);
        if (negative) c.negate();
        if (first) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        first = false;
        if (t.mono.is_one()) {
            s += c.to_string();
        } else if (c.is_one()) {
            s += t.mono.to_string();
        } else {
            s += c.to_string() + "*" + t.mono.to_string();
        }
    }
    return s;
}

}  // namespace ziegler
