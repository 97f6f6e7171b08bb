#include "ziegler/resolution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ziegler {

// ---------------------------------------------------------------------------
// PolyMatrix

void PolyMatrix::erase_row(std::size_t r) {
    for (auto& col : cols_) col.erase(col.begin() + std::ptrdiff_t(r));
    --rows_;
}

void PolyMatrix::erase_col(std::size_t c) {
    cols_.erase(cols_.begin() + std::ptrdiff_t(c));
}

bool PolyMatrix::is_zero() const {
    for (const auto& col : cols_) {
        for (const auto& p : col) {
            if (!p.is_zero()) return false;
        }
    }
    return true;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    PolyMatrix out(a.field_, a.rows(), b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Poly& bk = b.at(k, c);
            if (bk.is_zero()) continue;
            for (std::size_t r = 0; r < a.rows(); ++r) {
                const Poly& ar = a.at(r, k);
                if (!ar.is_zero()) out.at(r, c) += ar * bk;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// BettiTable

BettiTable::BettiTable(std::initializer_list<std::pair<const Key, long>> entries) {
    for (const auto& [k, v] : entries) add(k.first, k.second, v);
}

void BettiTable::add(int i, int j, long n) {
    if (n == 0) return;
    long& v = entries_[{i, j}];
    v += n;
    if (v == 0) entries_.erase({i, j});
}

long BettiTable::at(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

int BettiTable::length() const {
    int len = 0;
    for (const auto& [k, v] : entries_) len = std::max(len, k.first);
    return len;
}

long BettiTable::total(int i) const {
    long t = 0;
    for (const auto& [k, v] : entries_) {
        if (k.first == i) t += v;
    }
    return t;
}

namespace {

std::string twist_string(int j) {
    if (j == 0) return "S(0)";
    return j > 0 ? "S(-" + std::to_string(j) + ")" : "S(" + std::to_string(-j) + ")";
}

}  // namespace

std::string BettiTable::module_string(int i) const {
    std::string s;
    for (const auto& [k, v] : entries_) {
        if (k.first != i) continue;
        if (!s.empty()) s += " ⊕ ";
        s += twist_string(k.second);
        if (v > 1) s += "^" + std::to_string(v);
    }
    return s.empty() ? "0" : s;
}

std::string BettiTable::chain_string() const {
    std::string s = "0";
    for (int i = length(); i >= 0; --i) s += " → " + module_string(i);
    return s;
}

std::string BettiTable::diagram() const {
    if (entries_.empty()) return "(empty)\n";
    const int len = length();
    int lo = entries_.begin()->first.second - entries_.begin()->first.first, hi = lo;
    for (const auto& [k, v] : entries_) {
        lo = std::min(lo, k.second - k.first);
        hi = std::max(hi, k.second - k.first);
    }
    auto cell = [](long v) { return v == 0 ? std::string(".") : std::to_string(v); };
    std::size_t w = 1;
    for (const auto& [k, v] : entries_) w = std::max(w, cell(v).size());
    for (int i = 0; i <= len; ++i) w = std::max(w, std::to_string(total(i)).size());
    auto pad = [&](const std::string& s) { return std::string(w + 1 - s.size(), ' ') + s; };

    std::ostringstream os;
    const std::string head_label = "       ";
    os << head_label;
    for (int i = 0; i <= len; ++i) os << pad(std::to_string(i));
    os << "\ntotal:";
    os << " ";
    for (int i = 0; i <= len; ++i) os << pad(std::to_string(total(i)));
    os << '\n';
    for (int r = lo; r <= hi; ++r) {
        std::string label = std::to_string(r) + ":";
        os << std::string(head_label.size() - label.size(), ' ') << label;
        for (int i = 0; i <= len; ++i) os << pad(cell(at(i, i + r)));
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Construction

namespace {

PolyMatrix columns_to_matrix(const FreeModule& M, const std::vector<Vec>& cols) {
    PolyMatrix d(M.field(), M.rank(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (const auto& t : cols[c].terms()) {
            d.at(t.pos, c) += Poly::monomial(M.field(), t.mono, t.coef);
        }
    }
    return d;
}

// Order within each lead position by decreasing exponent of `v`. Ordering the
// frame this way at step i removes the i-th variable from every later lead
// term, which caps the frame at length three.
void sort_for_frame(const FreeModule& M, std::vector<Vec>& G, Var v) {
    std::stable_sort(G.begin(), G.end(), [&](const Vec& a, const Vec& b) {
        const ModTerm& la = a.lead();
        const ModTerm& lb = b.lead();
        if (la.pos != lb.pos) return la.pos < lb.pos;
        if (la.mono.exponent(v) != lb.mono.exponent(v)) return la.mono.exponent(v) > lb.mono.exponent(v);
        return M.compare(la.mono, la.pos, lb.mono, lb.pos) > 0;
    });
}

}  // namespace

FreeResolution free_resolution(const GroebnerBasis& J) {
    FreeResolution R;
    R.field = J.field();
    R.twists.push_back(J.module->twists());

    std::shared_ptr<const FreeModule> M = J.module;
    std::vector<Vec> G = J.elements;
    static constexpr Var frame_vars[] = {Var::x, Var::y, Var::z};
    for (std::size_t level = 1; !G.empty(); ++level) {
        if (level > 4) throw std::logic_error("Schreyer frame longer than the number of variables");
        sort_for_frame(*M, G, frame_vars[std::min<std::size_t>(level - 1, 2)]);
        std::vector<int> degrees;
        degrees.reserve(G.size());
        for (const auto& g : G) degrees.push_back(g.degree(*M));
        R.twists.push_back(std::move(degrees));
        R.differentials.push_back(columns_to_matrix(*M, G));

        SyzygyModule syz = syzygies(GroebnerBasis{M, std::move(G), false});
        M = std::move(syz.source);
        G = std::move(syz.generators);
    }
    return R;
}

FreeResolution minimize(FreeResolution R) {
    auto find_pivot = [&](std::size_t i, std::size_t& row, std::size_t& col) {
        const PolyMatrix& d = R.differentials[i - 1];
        const auto& src = R.twists[i];
        const auto& dst = R.twists[i - 1];
        for (std::size_t r = 0; r < d.rows(); ++r) {
            for (std::size_t c = 0; c < d.cols(); ++c) {
                if (src[c] == dst[r] && !d.at(r, c).is_zero()) {
                    row = r;
                    col = c;
                    return true;
                }
            }
        }
        return false;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 1; i <= R.length(); ++i) {
            std::size_t r = 0, c = 0;
            while (find_pivot(i, r, c)) {
                changed = true;
                PolyMatrix& d = R.differentials[i - 1];
                const Poly& pivot = d.at(r, c);
                if (!pivot.is_constant()) throw std::logic_error("degree-zero entry is not a scalar");
                const FieldElement inv = pivot.lead().coef.inverse();
                // column operations clear row r outside column c
                for (std::size_t k = 0; k < d.cols(); ++k) {
                    if (k == c || d.at(r, k).is_zero()) continue;
                    const Poly q = d.at(r, k).scaled(inv);
                    for (std::size_t s = 0; s < d.rows(); ++s) {
                        if (s == r || d.at(s, c).is_zero()) continue;
                        d.at(s, k) -= d.at(s, c) * q;
                    }
                }
                d.erase_row(r);
                d.erase_col(c);
                if (i < R.length()) R.differentials[i].erase_row(c);
                if (i > 1) R.differentials[i - 2].erase_col(r);
                R.twists[i].erase(R.twists[i].begin() + std::ptrdiff_t(c));
                R.twists[i - 1].erase(R.twists[i - 1].begin() + std::ptrdiff_t(r));
            }
        }
    }
    while (!R.differentials.empty() && R.twists.back().empty()) {
        R.differentials.pop_back();
        R.twists.pop_back();
    }
    R.minimal = true;
    return R;
}

BettiTable betti_table(const FreeResolution& R) {
    if (!R.minimal) throw NotMinimal();
    BettiTable B;
    for (std::size_t i = 0; i < R.twists.size(); ++i) {
        for (int a : R.twists[i]) B.add(int(i), a);
    }
    return B;
}

bool is_complex(const FreeResolution& R) {
    for (std::size_t i = 2; i <= R.length(); ++i) {
        if (!(R.d(i - 1) * R.d(i)).is_zero()) return false;
    }
    return true;
}

bool is_graded(const FreeResolution& R) {
    for (std::size_t i = 1; i <= R.length(); ++i) {
        const PolyMatrix& d = R.d(i);
        if (d.rows() != R.twists[i - 1].size() || d.cols() != R.twists[i].size()) return false;
        for (std::size_t r = 0; r < d.rows(); ++r) {
            for (std::size_t c = 0; c < d.cols(); ++c) {
                const Poly& p = d.at(r, c);
                if (p.is_zero()) continue;
                if (!p.is_homogeneous() || int(p.lead().mono.degree()) != R.twists[i][c] - R.twists[i - 1][r]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool has_unit_entries(const FreeResolution& R) {
    for (const auto& d : R.differentials) {
        for (std::size_t r = 0; r < d.rows(); ++r) {
            for (std::size_t c = 0; c < d.cols(); ++c) {
                const Poly& p = d.at(r, c);
                if (!p.is_zero() && p.is_constant()) return true;
            }
        }
    }
    return false;
}

long resolution_hilbert_function(const FreeResolution& R, int t) {
    long h = 0;
    for (std::size_t i = 0; i < R.twists.size(); ++i) {
        for (int a : R.twists[i]) h += (i % 2 ? -1 : 1) * monomial_count(t - a);
    }
    return h;
}

long betti_hilbert_function(const BettiTable& B, int t) {
    long h = 0;
    for (const auto& [k, v] : B.entries()) h += (k.first % 2 ? -1 : 1) * v * monomial_count(t - k.second);
    return h;
}

BettiNumerator betti_numerator(const BettiTable& B) {
    BettiNumerator N;
    for (const auto& [k, v] : B.entries()) {
        long c = (k.first % 2 ? -1 : 1) * v;
        N.coefficients[k.second] += c;
    }
    std::erase_if(N.coefficients, [](const auto& kv) { return kv.second == 0; });
    for (const auto& [j, c] : N.coefficients) {
        N.value_at_one += c;
        N.derivative_at_one += long(j) * c;
        N.half_second_derivative_at_one += long(j) * (j - 1) / 2 * c;
    }
    return N;
}

int regularity(const BettiTable& B) {
    if (B.empty()) throw std::invalid_argument("regularity of an empty table");
    int reg = B.entries().begin()->first.second - B.entries().begin()->first.first;
    for (const auto& [k, v] : B.entries()) reg = std::max(reg, k.second - k.first);
    return reg;
}

}  // namespace ziegler
