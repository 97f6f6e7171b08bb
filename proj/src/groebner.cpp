#include "ziegler/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace ziegler {

FreeModule FreeModule::top(Field f, std::vector<int> twists) {
    FreeModule M;
    M.field_ = f;
    M.shifts_.assign(twists.size(), Monomial::one());
    M.twists_ = std::move(twists);
    return M;
}

FreeModule FreeModule::schreyer(Field f, std::vector<int> twists, std::vector<Monomial> shifts) {
    if (twists.size() != shifts.size()) throw std::invalid_argument("schreyer: twists/shifts size mismatch");
    FreeModule M;
    M.field_ = f;
    M.twists_ = std::move(twists);
    M.shifts_ = std::move(shifts);
    return M;
}

FreeModule FreeModule::blocks(Field f, std::vector<int> twists, std::size_t split) {
    FreeModule M = top(f, std::move(twists));
    M.split_ = split;
    return M;
}

// ---------------------------------------------------------------------------
// Vec

namespace {

// out = a[from..] - c * m * b
void merge_submul(const FreeModule& M, std::vector<ModTerm>& out, const std::vector<ModTerm>& a,
                  std::size_t from, const std::vector<ModTerm>& b, const FieldElement& c,
                  const Monomial& m) {
    out.clear();
    out.reserve(a.size() - from + b.size());
    std::size_t i = from, j = 0;
    while (i < a.size() && j < b.size()) {
        const Monomial bm = b[j].mono * m;
        int cmp = M.compare(a[i].mono, a[i].pos, bm, b[j].pos);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            ModTerm t{bm, b[j].pos, b[j].coef * c};
            t.coef.negate();
            out.push_back(std::move(t));
            ++j;
        } else {
            ModTerm t = a[i++];
            t.coef.submul(c, b[j++].coef);
            if (!t.coef.is_zero()) out.push_back(std::move(t));
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
        ModTerm t{b[j].mono * m, b[j].pos, b[j].coef * c};
        t.coef.negate();
        out.push_back(std::move(t));
    }
}

}  // namespace

Vec Vec::from_terms(const FreeModule& M, std::vector<ModTerm> terms) {
    std::sort(terms.begin(), terms.end(), [&](const ModTerm& a, const ModTerm& b) {
        return M.compare(a.mono, a.pos, b.mono, b.pos) > 0;
    });
    Vec v;
    for (auto& t : terms) {
        if (t.pos >= M.rank()) throw std::out_of_range("module position out of range");
        if (!v.terms_.empty() && v.terms_.back().pos == t.pos && v.terms_.back().mono == t.mono) {
            v.terms_.back().coef += t.coef;
            if (v.terms_.back().coef.is_zero()) v.terms_.pop_back();
        } else if (!t.coef.is_zero()) {
            v.terms_.push_back(std::move(t));
        }
    }
    return v;
}

Vec Vec::from_poly(const Poly& p) {
    Vec v;
    v.terms_.reserve(p.size());
    for (const auto& t : p.terms()) v.terms_.push_back({t.mono, 0, t.coef});
    return v;
}

bool Vec::is_homogeneous(const FreeModule& M) const {
    if (terms_.empty()) return true;
    const int d = degree(M);
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const ModTerm& t) { return M.degree(t.mono, t.pos) == d; });
}

void Vec::submul(const FreeModule& M, const FieldElement& c, const Monomial& m, const Vec& g) {
    if (c.is_zero() || g.is_zero()) return;
    std::vector<ModTerm> out;
    merge_submul(M, out, terms_, 0, g.terms_, c, m);
    terms_ = std::move(out);
}

void Vec::add(const FreeModule& M, const Vec& g) {
    FieldElement minus_one = -FieldElement::one(M.field());
    submul(M, minus_one, Monomial::one(), g);
}

Vec Vec::scaled(const FieldElement& c) const {
    Vec r;
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

void Vec::make_monic() {
    if (terms_.empty() || terms_.front().coef.is_one()) return;
    FieldElement inv = terms_.front().coef.inverse();
    for (auto& t : terms_) t.coef *= inv;
}

Poly Vec::component(Field f, std::uint32_t pos) const {
    std::vector<Term> ts;
    for (const auto& t : terms_) {
        if (t.pos == pos) ts.push_back({t.mono, t.coef});
    }
    return Poly::from_terms(f, std::move(ts));
}

bool operator==(const Vec& a, const Vec& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const auto& s = a.terms_[i];
        const auto& t = b.terms_[i];
        if (s.pos != t.pos || !(s.mono == t.mono) || !(s.coef == t.coef)) return false;
    }
    return true;
}

bool GradedModuleElement::is_homogeneous() const {
    std::optional<int> deg;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const Poly& p = components[i];
        if (p.is_zero()) continue;
        if (!p.is_homogeneous()) return false;
        int d = int(p.lead().mono.degree()) + twists.at(i);
        if (deg && *deg != d) return false;
        deg = d;
    }
    return true;
}

Vec to_vec(const GradedModuleElement& e, const FreeModule& M) {
    if (e.components.size() != M.rank()) throw std::invalid_argument("element rank does not match module");
    std::vector<ModTerm> ts;
    for (std::size_t i = 0; i < e.components.size(); ++i) {
        if (e.components[i].field() != M.field()) throw FieldMismatch();
        for (const auto& t : e.components[i].terms()) ts.push_back({t.mono, std::uint32_t(i), t.coef});
    }
    return Vec::from_terms(M, std::move(ts));
}

GradedModuleElement to_element(const Vec& v, const FreeModule& M) {
    GradedModuleElement e;
    e.twists = M.twists();
    for (std::uint32_t i = 0; i < M.rank(); ++i) e.components.push_back(v.component(M.field(), i));
    return e;
}

std::vector<Poly> GroebnerBasis::polys() const {
    if (module->rank() != 1) throw std::logic_error("polys() on a module basis");
    std::vector<Poly> out;
    out.reserve(elements.size());
    for (const auto& v : elements) out.push_back(v.to_poly(field()));
    return out;
}

// ---------------------------------------------------------------------------
// Division

namespace {

// Lead-term index of a basis, for divisor lookup.
class LeadIndex {
public:
    explicit LeadIndex(const std::vector<Vec>& G) {
        leads_.reserve(G.size());
        for (const auto& g : G) leads_.push_back({g.lead().mono, g.lead().pos});
    }
    int find(const Monomial& m, std::uint32_t pos, int skip = -1) const {
        for (std::size_t k = 0; k < leads_.size(); ++k) {
            if (int(k) != skip && leads_[k].second == pos && leads_[k].first.divides(m)) return int(k);
        }
        return -1;
    }

private:
    std::vector<std::pair<Monomial, std::uint32_t>> leads_;
};

Vec normal_form_indexed(const FreeModule& M, const Vec& f, const std::vector<Vec>& G,
                        const LeadIndex& index, int skip = -1) {
    std::vector<ModTerm> rem;
    std::vector<ModTerm> p = f.terms();
    std::vector<ModTerm> scratch;
    std::size_t head = 0;
    while (head < p.size()) {
        const ModTerm& t = p[head];
        int k = index.find(t.mono, t.pos, skip);
        if (k < 0) {
            rem.push_back(t);
            ++head;
            continue;
        }
        const ModTerm& lead = G[k].lead();
        FieldElement c = lead.coef.is_one() ? t.coef : t.coef / lead.coef;
        Monomial u = t.mono / lead.mono;
        merge_submul(M, scratch, p, head, G[k].terms(), c, u);
        std::swap(p, scratch);
        head = 0;
    }
    return Vec::from_terms(M, std::move(rem));
}

}  // namespace

Vec normal_form(const FreeModule& M, const Vec& f, const std::vector<Vec>& G) {
    return normal_form_indexed(M, f, G, LeadIndex(G));
}

Poly normal_form(const Poly& f, const GroebnerBasis& G) {
    if (f.field() != G.field()) throw FieldMismatch();
    return normal_form(*G.module, Vec::from_poly(f), G.elements).to_poly(G.field());
}

Vec s_pair(const FreeModule& M, const Vec& g1, const Vec& g2) {
    const ModTerm& a = g1.lead();
    const ModTerm& b = g2.lead();
    if (a.pos != b.pos) return {};
    Monomial l = lcm(a.mono, b.mono);
    Vec s;
    s.submul(M, -a.coef.inverse(), l / a.mono, g1);
    s.submul(M, b.coef.inverse(), l / b.mono, g2);
    return s;
}

Poly s_pair(const Poly& g1, const Poly& g2) {
    if (g1.field() != g2.field()) throw FieldMismatch();
    FreeModule M = FreeModule::top(g1.field(), {0});
    return s_pair(M, Vec::from_poly(g1), Vec::from_poly(g2)).to_poly(g1.field());
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

struct Pair {
    std::uint32_t i, j;
    Monomial lcm;
    std::uint32_t pos;
    int degree;
};

bool pair_before(const FreeModule& M, const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    int c = M.compare(a.lcm, a.pos, b.lcm, b.pos);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
}

// Gebauer-Moeller update after appending basis element h.
void update_pairs(const FreeModule& M, std::vector<Pair>& B, const std::vector<Vec>& G, std::uint32_t h) {
    const bool ideal = M.rank() == 1;
    const ModTerm& lh = G[h].lead();
    std::vector<Pair> C;
    for (std::uint32_t g = 0; g < h; ++g) {
        const ModTerm& lg = G[g].lead();
        if (lg.pos != lh.pos) continue;
        Monomial l = lcm(lg.mono, lh.mono);
        C.push_back({g, h, l, lh.pos, M.degree(l, lh.pos)});
    }
    auto coprime = [&](const Pair& p) { return ideal && gcd(G[p.i].lead().mono, lh.mono).is_one(); };

    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
        const Pair& p = C[a];
        bool keep = coprime(p);
        if (!keep) {
            bool dominated = false;
            for (std::size_t b = a + 1; b < C.size() && !dominated; ++b) dominated = C[b].lcm.divides(p.lcm);
            for (std::size_t b = 0; b < D.size() && !dominated; ++b) dominated = D[b].lcm.divides(p.lcm);
            keep = !dominated;
        }
        if (keep) D.push_back(p);
    }

    std::erase_if(B, [&](const Pair& p) {
        if (p.pos != lh.pos || !lh.mono.divides(p.lcm)) return false;
        Monomial li = lcm(G[p.i].lead().mono, lh.mono);
        Monomial lj = lcm(G[p.j].lead().mono, lh.mono);
        return !(li == p.lcm) && !(lj == p.lcm);
    });
    for (const auto& p : D) {
        if (!coprime(p)) B.push_back(p);
    }
}

void require_homogeneous(const FreeModule& M, const Vec& v) {
    if (!v.is_homogeneous(M)) throw NotHomogeneous("generator is not homogeneous");
    for (const auto& t : v.terms()) {
        if (t.coef.field() != M.field()) throw FieldMismatch();
    }
}

}  // namespace

GroebnerBasis buchberger(std::shared_ptr<const FreeModule> Mp, std::vector<Vec> gens, BuchbergerStats* stats) {
    const FreeModule& M = *Mp;
    std::erase_if(gens, [](const Vec& v) { return v.is_zero(); });
    for (const auto& v : gens) require_homogeneous(M, v);
    std::stable_sort(gens.begin(), gens.end(),
                     [&](const Vec& a, const Vec& b) { return a.degree(M) < b.degree(M); });

    BuchbergerStats local;
    BuchbergerStats& st = stats ? *stats : local;

    std::vector<Vec> G;
    std::vector<Pair> B;
    std::size_t next_input = 0;
    while (next_input < gens.size() || !B.empty()) {
        auto best = std::min_element(B.begin(), B.end(),
                                     [&](const Pair& a, const Pair& b) { return pair_before(M, a, b); });
        Vec v;
        const bool take_input =
            next_input < gens.size() && (B.empty() || gens[next_input].degree(M) <= best->degree);
        if (take_input) {
            v = std::move(gens[next_input++]);
        } else {
            Pair p = *best;
            B.erase(best);
            ++st.pairs_considered;
            v = s_pair(M, G[p.i], G[p.j]);
        }
        v = normal_form(M, v, G);
        if (v.is_zero()) {
            if (!take_input) ++st.zero_reductions;
            continue;
        }
        if (!take_input) ++st.pairs_reduced;
        v.make_monic();
        G.push_back(std::move(v));
        update_pairs(M, B, G, std::uint32_t(G.size() - 1));
    }

    // drop redundant elements, then reduce tails
    std::vector<Vec> minimal;
    for (std::size_t a = 0; a < G.size(); ++a) {
        const ModTerm& la = G[a].lead();
        bool redundant = false;
        for (std::size_t b = 0; b < G.size() && !redundant; ++b) {
            if (a == b) continue;
            const ModTerm& lb = G[b].lead();
            if (lb.pos != la.pos || !lb.mono.divides(la.mono)) continue;
            redundant = !(lb.mono == la.mono) || b < a;
        }
        if (!redundant) minimal.push_back(G[a]);
    }
    LeadIndex index(minimal);
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        std::vector<ModTerm> ts = minimal[a].terms();
        ModTerm lead = ts.front();
        ts.erase(ts.begin());
        Vec tail = normal_form_indexed(M, Vec::from_terms(M, std::move(ts)), minimal, index, int(a));
        std::vector<ModTerm> out{lead};
        out.insert(out.end(), tail.terms().begin(), tail.terms().end());
        minimal[a] = Vec::from_terms(M, std::move(out));
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Vec& a, const Vec& b) {
        return M.compare(a.lead().mono, a.lead().pos, b.lead().mono, b.lead().pos) < 0;
    });
    return GroebnerBasis{std::move(Mp), std::move(minimal), true};
}

GroebnerBasis buchberger(const std::vector<Poly>& gens, BuchbergerStats* stats) {
    Field f = gens.empty() ? Field::rational() : gens.front().field();
    auto M = std::make_shared<const FreeModule>(FreeModule::top(f, {0}));
    std::vector<Vec> vs;
    for (const auto& p : gens) {
        if (p.field() != f) throw FieldMismatch();
        vs.push_back(Vec::from_poly(p));
    }
    return buchberger(std::move(M), std::move(vs), stats);
}

bool is_groebner(const GroebnerBasis& G) {
    const FreeModule& M = *G.module;
    LeadIndex index(G.elements);
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            Vec s = s_pair(M, G.elements[i], G.elements[j]);
            if (s.is_zero()) continue;
            if (!normal_form_indexed(M, s, G.elements, index).is_zero()) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Syzygies

SyzygyModule syzygies(const GroebnerBasis& G) {
    const FreeModule& M = *G.module;
    const std::size_t k = G.size();
    std::vector<int> twists(k);
    std::vector<Monomial> shifts(k);
    for (std::size_t i = 0; i < k; ++i) {
        const ModTerm& l = G.elements[i].lead();
        if (i > 0 && l.pos < G.elements[i - 1].lead().pos) {
            throw std::invalid_argument("syzygies: basis must be sorted by lead position");
        }
        twists[i] = G.elements[i].degree(M);
        shifts[i] = l.mono * M.shifts()[l.pos];
    }
    auto source = std::make_shared<const FreeModule>(FreeModule::schreyer(M.field(), twists, shifts));
    const FreeModule& F = *source;
    LeadIndex index(G.elements);

    std::vector<Vec> out;
    for (std::uint32_t i = 0; i < k; ++i) {
        const ModTerm& li = G.elements[i].lead();
        // minimal generators of (lead_j : j > i, same position) : lead_i
        struct Candidate {
            Monomial quot;
            std::uint32_t j;
        };
        std::vector<Candidate> cands;
        for (std::uint32_t j = i + 1; j < k; ++j) {
            const ModTerm& lj = G.elements[j].lead();
            if (lj.pos != li.pos) continue;
            cands.push_back({lj.mono / gcd(li.mono, lj.mono), j});
        }
        std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
            return a.quot.grevlex_key() < b.quot.grevlex_key();
        });
        std::vector<Candidate> mins;
        for (const auto& c : cands) {
            bool covered = std::any_of(mins.begin(), mins.end(),
                                       [&](const Candidate& m) { return m.quot.divides(c.quot); });
            if (!covered) mins.push_back(c);
        }

        for (const auto& [ci, j] : mins) {
            const Vec& gi = G.elements[i];
            const Vec& gj = G.elements[j];
            const ModTerm& lj = gj.lead();
            const Monomial l = ci * li.mono;
            const Monomial cj = l / lj.mono;
            FieldElement ai = li.coef.inverse();
            FieldElement aj = lj.coef.inverse();

            Vec s;
            s.submul(M, -ai, ci, gi);
            s.submul(M, aj, cj, gj);

            std::vector<ModTerm> terms{{ci, i, ai}, {cj, j, -aj}};
            while (!s.is_zero()) {
                const ModTerm t = s.lead();
                int q = index.find(t.mono, t.pos);
                if (q < 0) throw std::logic_error("Schreyer reduction did not reach zero; input is not a Groebner basis");
                const ModTerm& lq = G.elements[q].lead();
                FieldElement c = t.coef / lq.coef;
                Monomial u = t.mono / lq.mono;
                s.submul(M, c, u, G.elements[q]);
                terms.push_back({u, std::uint32_t(q), -c});
            }
            Vec syz = Vec::from_terms(F, std::move(terms));
            assert(syz.lead().pos == i && syz.lead().mono == ci);
            syz.make_monic();
            out.push_back(std::move(syz));
        }
    }
    return SyzygyModule{std::move(source), std::move(out)};
}

std::vector<GradedModuleElement> syzygies_of(const FreeModule& M, const std::vector<Vec>& gens) {
    for (const auto& s : M.shifts()) {
        if (!s.is_one()) throw std::invalid_argument("syzygies_of: ambient module must carry a TOP order");
    }
    const std::size_t n = M.rank();
    std::vector<int> twists = M.twists();
    for (const auto& h : gens) {
        if (h.is_zero()) throw std::invalid_argument("syzygies_of: zero generator");
        require_homogeneous(M, h);
        twists.push_back(h.degree(M));
    }
    auto A = std::make_shared<const FreeModule>(FreeModule::blocks(M.field(), twists, n));
    std::vector<Vec> aug;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<ModTerm> ts = gens[i].terms();
        ts.push_back({Monomial::one(), std::uint32_t(n + i), FieldElement::one(M.field())});
        aug.push_back(Vec::from_terms(*A, std::move(ts)));
    }
    GroebnerBasis gb = buchberger(A, std::move(aug));

    std::vector<GradedModuleElement> out;
    for (const auto& v : gb.elements) {
        if (v.lead().pos < n) continue;
        GradedModuleElement e;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            e.components.push_back(v.component(M.field(), std::uint32_t(n + i)));
            e.twists.push_back(twists[n + i]);
        }
        out.push_back(std::move(e));
    }
    return out;
}

GroebnerBasis ideal_quotient(const GroebnerBasis& J, const Poly& f) {
    if (!J.module->is_ideal()) throw std::invalid_argument("ideal_quotient expects an ideal");
    if (f.is_zero()) throw std::invalid_argument("ideal_quotient by zero");
    if (f.field() != J.field()) throw FieldMismatch();
    if (J.elements.empty()) return J;  // 0 : f = 0
    std::vector<Vec> gens{Vec::from_poly(f)};
    gens.insert(gens.end(), J.elements.begin(), J.elements.end());
    std::vector<Poly> firsts;
    for (const auto& s : syzygies_of(*J.module, gens)) firsts.push_back(s.components.front());
    GroebnerBasis out = buchberger(firsts);
    out.module = J.module;
    return out;
}

GroebnerBasis ideal_intersection(const GroebnerBasis& I, const GroebnerBasis& K) {
    if (!I.module->is_ideal() || !K.module->is_ideal()) throw std::invalid_argument("ideal_intersection expects ideals");
    if (I.field() != K.field()) throw FieldMismatch();
    if (I.elements.empty()) return I;
    if (K.elements.empty()) return K;
    std::vector<Vec> gens = I.elements;
    gens.insert(gens.end(), K.elements.begin(), K.elements.end());
    std::vector<Poly> meet;
    const std::size_t a = I.size();
    for (const auto& s : syzygies_of(*I.module, gens)) {
        Poly h(I.field());
        for (std::size_t i = 0; i < a; ++i) h += s.components[i] * I.elements[i].to_poly(I.field());
        if (!h.is_zero()) meet.push_back(std::move(h));
    }
    GroebnerBasis out = buchberger(meet);
    out.module = I.module;
    return out;
}

GroebnerBasis saturate_irrelevant(const GroebnerBasis& J, int max_iterations, int* iterations) {
    const Field f = J.field();
    GroebnerBasis cur = J;
    for (int it = 1; it <= max_iterations; ++it) {
        GroebnerBasis q = ideal_intersection(
            ideal_intersection(ideal_quotient(cur, Poly::variable(f, Var::x)),
                               ideal_quotient(cur, Poly::variable(f, Var::y))),
            ideal_quotient(cur, Poly::variable(f, Var::z)));
        if (same_basis(q, cur)) {
            if (iterations) *iterations = it;
            return cur;
        }
        cur = std::move(q);
    }
    throw Error("saturation did not stabilize within " + std::to_string(max_iterations) + " iterations");
}

long hilbert_function(const GroebnerBasis& G, int t) {
    const FreeModule& M = *G.module;
    long count = 0;
    for (std::uint32_t p = 0; p < M.rank(); ++p) {
        const int s = t - M.twists()[p];
        if (s < 0) continue;
        std::vector<Monomial> leads;
        for (const auto& g : G.elements) {
            if (g.lead().pos == p) leads.push_back(g.lead().mono);
        }
        for (int a = s; a >= 0; --a) {
            for (int b = s - a; b >= 0; --b) {
                Monomial m(a, b, s - a - b);
                if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); })) {
                    ++count;
                }
            }
        }
    }
    return count;
}

bool same_basis(const GroebnerBasis& a, const GroebnerBasis& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a.elements[i] == b.elements[i])) return false;
    }
    return true;
}

}  // namespace ziegler
