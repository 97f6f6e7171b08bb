#pragma once

// Buchberger engine for homogeneous submodules of twisted free modules over k[x,y,z].
//
// Ideals are the rank-one case. Module terms are ordered by a FreeModule, which
// covers the three orders the library needs:
//   * grevlex-TOP: compare monomials, break ties by position (smaller position wins);
//   * Schreyer orders: compare m * shift_i, break ties by a fixed rank;
//   * a two-block position-over-term split used to compute syzygies of arbitrary lists.

#include <cstdint>
#include <memory>
#include <vector>

#include "ziegler/poly.hpp"

namespace ziegler {

struct ModTerm {
    Monomial mono;
    std::uint32_t pos = 0;
    FieldElement coef;
};

/// Ambient module F = S(-a_0) + ... + S(-a_{r-1}) together with its term order.
class FreeModule {
public:
    /// grevlex-TOP order.
    static FreeModule top(Field f, std::vector<int> twists);
    /// Schreyer order induced by the given lead monomials, ties broken by position.
    static FreeModule schreyer(Field f, std::vector<int> twists, std::vector<Monomial> shifts);
    /// Positions [0, split) all rank above positions [split, rank) whatever the monomials.
    static FreeModule blocks(Field f, std::vector<int> twists, std::size_t split);

    Field field() const noexcept { return field_; }
    std::size_t rank() const noexcept { return twists_.size(); }
    const std::vector<int>& twists() const noexcept { return twists_; }
    const std::vector<Monomial>& shifts() const noexcept { return shifts_; }
    bool is_ideal() const noexcept { return twists_.size() == 1 && twists_[0] == 0; }

    int degree(const Monomial& m, std::uint32_t pos) const { return int(m.degree()) + twists_[pos]; }

    /// Three-way comparison of the terms m_a e_{pa} and m_b e_{pb}.
    int compare(const Monomial& ma, std::uint32_t pa, const Monomial& mb, std::uint32_t pb) const {
        if (pa < split_ && pb >= split_) return 1;
        if (pb < split_ && pa >= split_) return -1;
        auto ka = (ma * shifts_[pa]).grevlex_key();
        auto kb = (mb * shifts_[pb]).grevlex_key();
        if (ka != kb) return ka > kb ? 1 : -1;
        if (pa == pb) return 0;
        return pa < pb ? 1 : -1;
    }

private:
    Field field_;
    std::vector<int> twists_;
    std::vector<Monomial> shifts_;
    std::size_t split_ = 0;
};

/// Sparse module element: terms strictly descending in the order of its FreeModule.
class Vec {
public:
    Vec() = default;

    /// Sorts and combines; zero coefficients are dropped.
    static Vec from_terms(const FreeModule& M, std::vector<ModTerm> terms);
    static Vec from_poly(const Poly& p);

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<ModTerm>& terms() const noexcept { return terms_; }
    const ModTerm& lead() const { return terms_.front(); }

    /// Degree of the lead term in M (all terms share it for homogeneous elements).
    int degree(const FreeModule& M) const { return M.degree(lead().mono, lead().pos); }
    bool is_homogeneous(const FreeModule& M) const;

    /// *this -= c * m * g.
    void submul(const FreeModule& M, const FieldElement& c, const Monomial& m, const Vec& g);
    void add(const FreeModule& M, const Vec& g);
    Vec scaled(const FieldElement& c) const;
    void make_monic();

    /// Component at `pos` as a polynomial.
    Poly component(Field f, std::uint32_t pos) const;
    /// Rank-one element back to a polynomial.
    Poly to_poly(Field f) const { return component(f, 0); }

    friend bool operator==(const Vec& a, const Vec& b);

private:
    std::vector<ModTerm> terms_;
};

/// Homogeneous element of a twisted free module, as a tuple of polynomials.
struct GradedModuleElement {
    std::vector<Poly> components;
    std::vector<int> twists;

    bool is_homogeneous() const;
};

Vec to_vec(const GradedModuleElement& e, const FreeModule& M);
GradedModuleElement to_element(const Vec& v, const FreeModule& M);

struct GroebnerBasis {
    std::shared_ptr<const FreeModule> module;
    std::vector<Vec> elements;
    bool reduced = false;

    std::size_t size() const noexcept { return elements.size(); }
    Field field() const { return module->field(); }
    /// Elements as polynomials; rank-one bases only.
    std::vector<Poly> polys() const;
};

/// Counters filled in by buchberger() when asked.
struct BuchbergerStats {
    std::size_t pairs_considered = 0;
    std::size_t pairs_reduced = 0;
    std::size_t zero_reductions = 0;
};

/// Fully reduced remainder of f on division by G.
Vec normal_form(const FreeModule& M, const Vec& f, const std::vector<Vec>& G);
Poly normal_form(const Poly& f, const GroebnerBasis& G);

/// S-vector of g1 and g2; zero when the lead terms sit in different positions.
Vec s_pair(const FreeModule& M, const Vec& g1, const Vec& g2);
Poly s_pair(const Poly& g1, const Poly& g2);

/// Reduced Groebner basis of the submodule generated by `gens` (homogeneous).
/// Uses the normal selection strategy with the Gebauer-Moeller pair criteria.
GroebnerBasis buchberger(std::shared_ptr<const FreeModule> M, std::vector<Vec> gens,
                         BuchbergerStats* stats = nullptr);
GroebnerBasis buchberger(const std::vector<Poly>& gens, BuchbergerStats* stats = nullptr);

/// True when every S-pair of G reduces to zero.
bool is_groebner(const GroebnerBasis& G);

/// Syzygy module of a Groebner basis via Schreyer's construction.
///
/// `source` is the module with one basis vector per element of G, twisted by its
/// degree and ordered by the Schreyer order that G induces; `generators` is a
/// Groebner basis of the syzygies in that order. Only S-pairs corresponding to
/// minimal generators of the lead-term colon ideals are used.
struct SyzygyModule {
    std::shared_ptr<const FreeModule> source;
    std::vector<Vec> generators;
};
SyzygyModule syzygies(const GroebnerBasis& G);

/// Generators of the syzygies of an arbitrary homogeneous list, as elements of
/// the free module with one generator per input (twisted by its degree).
std::vector<GradedModuleElement> syzygies_of(const FreeModule& M, const std::vector<Vec>& gens);

GroebnerBasis ideal_quotient(const GroebnerBasis& J, const Poly& f);
GroebnerBasis ideal_intersection(const GroebnerBasis& I, const GroebnerBasis& K);

/// J : (x,y,z)^infinity. Throws if the ascending chain has not stabilized after
/// `max_iterations` rounds; the number of rounds used is written to `iterations`.
GroebnerBasis saturate_irrelevant(const GroebnerBasis& J, int max_iterations = 10,
                                  int* iterations = nullptr);

/// dim_k (F/U)_t where U is the submodule with Groebner basis G.
long hilbert_function(const GroebnerBasis& G, int t);

/// Same reduced basis (compares element lists exactly).
bool same_basis(const GroebnerBasis& a, const GroebnerBasis& b);

}  // namespace ziegler
