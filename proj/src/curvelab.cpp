#include "ziegler/curvelab.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include "ziegler/textio.hpp"

namespace ziegler {

// ---------------------------------------------------------------------------
// Curves

std::string to_string(ComponentKind k) {
    switch (k) {
        case ComponentKind::line: return "line";
        case ComponentKind::conic: return "conic";
        case ComponentKind::sextic_irreducible: return "sextic-irreducible";
        case ComponentKind::curve: return "curve";
    }
    return "curve";
}

std::optional<ComponentKind> component_kind_from_string(const std::string& s) {
    for (auto k : {ComponentKind::line, ComponentKind::conic, ComponentKind::sextic_irreducible,
                   ComponentKind::curve}) {
        if (to_string(k) == s) return k;
    }
    return std::nullopt;
}

std::optional<int> kind_degree(ComponentKind k) {
    switch (k) {
        case ComponentKind::line: return 1;
        case ComponentKind::conic: return 2;
        case ComponentKind::sextic_irreducible: return 6;
        case ComponentKind::curve: return std::nullopt;
    }
    return std::nullopt;
}

int Curve::degree() const {
    int d = 0;
    for (const auto& c : components) d += c.poly.homogeneous_degree();
    return d;
}

void validate_curve(const Curve& c) {
    if (c.components.empty()) throw SchemaError("components", "at least one component is required");
    for (std::size_t i = 0; i < c.components.size(); ++i) {
        const Component& comp = c.components[i];
        const std::string path = "components[" + std::to_string(i) + "].poly";
        if (comp.poly.field() != c.field) throw SchemaError(path, "field mismatch");
        if (comp.poly.is_zero()) throw SchemaError(path, "zero polynomial");
        if (!comp.poly.is_homogeneous()) throw SchemaError(path, "not homogeneous");
        const int deg = comp.poly.homogeneous_degree();
        if (deg < 1) throw SchemaError(path, "constant component");
        if (auto want = kind_degree(comp.kind); want && *want != deg) {
            throw SchemaError(path, "kind " + to_string(comp.kind) + " requires degree " + std::to_string(*want) +
                                        ", got " + std::to_string(deg));
        }
    }
}

NotReduced::NotReduced(std::vector<std::pair<int, long>> profile)
    : Error([&] {
          std::string s = "curve is not reduced: Hilbert function does not stabilize (";
          for (std::size_t i = 0; i < profile.size(); ++i) s += (i ? " " : "") + std::to_string(profile[i].second);
          return s + ")";
      }()),
      profile_(std::move(profile)) {}

Poly curve_polynomial(const Curve& c) {
    Poly f = Poly::constant(c.field, Rational(1));
    for (const auto& comp : c.components) f *= comp.poly;
    return f;
}

// ---------------------------------------------------------------------------
// Jacobian ideals and the memo cache

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

struct JacobianCache {
    std::mutex mu;
    std::map<std::string, GroebnerBasis> entries;
};

JacobianCache& jacobian_cache() {
    static JacobianCache c;
    return c;
}

std::optional<std::filesystem::path> cache_dir() {
    const char* dir = std::getenv("ZIEGLER_CACHE_DIR");
    if (!dir || !*dir) return std::nullopt;
    return std::filesystem::path(dir);
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const std::string& key) {
    std::ostringstream name;
    name << "jacobian-" << std::hex << fnv1a(key) << ".json";
    return dir / name.str();
}

GroebnerBasis basis_from_polys(Field f, const std::vector<Poly>& polys) {
    GroebnerBasis G;
    G.module = std::make_shared<const FreeModule>(FreeModule::top(f, {0}));
    for (const auto& p : polys) G.elements.push_back(Vec::from_poly(p));
    G.reduced = true;
    return G;
}

std::optional<GroebnerBasis> load_cached(const std::filesystem::path& file, const std::string& key, Field f) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    try {
        nlohmann::json doc = nlohmann::json::parse(in);
        if (doc.at("key").get<std::string>() != key) return std::nullopt;
        std::vector<Poly> polys;
        for (const auto& s : doc.at("basis")) polys.push_back(parse_poly(s.get<std::string>(), f));
        return basis_from_polys(f, polys);
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable entries are recomputed
    }
}

void store_cached(const std::filesystem::path& file, const std::string& key, const GroebnerBasis& G) {
    nlohmann::json doc;
    doc["key"] = key;
    doc["basis"] = nlohmann::json::array();
    for (const auto& p : G.polys()) doc["basis"].push_back(render(p));
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    const auto tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << doc.dump() << "\n";
    }
    std::filesystem::rename(tmp, file, ec);
}

void check_basis(const GroebnerBasis& J, const std::vector<Poly>& gens) {
    if (!is_groebner(J)) throw std::logic_error("check failed: Jacobian basis is not a Groebner basis");
    for (const auto& g : gens) {
        if (!normal_form(g, J).is_zero()) throw std::logic_error("check failed: generator not in its Groebner basis");
    }
}

}  // namespace

GroebnerBasis jacobian_ideal(const Poly& f, const AnalysisOptions& opts) {
    if (f.homogeneous_degree() < 2) throw Error("Jacobian ideal needs a curve of degree at least 2");
    const std::vector<Poly> gens = {partial(f, Var::x), partial(f, Var::y), partial(f, Var::z)};
    if (!opts.cache) {
        GroebnerBasis J = buchberger(gens);
        if (opts.check) check_basis(J, gens);
        return J;
    }

    std::string key = f.field().to_string();
    for (const auto& g : gens) key += ";" + render(g);
    auto& cache = jacobian_cache();
    {
        std::lock_guard lock(cache.mu);
        if (auto it = cache.entries.find(key); it != cache.entries.end()) return it->second;
    }
    std::optional<GroebnerBasis> J;
    const auto dir = cache_dir();
    if (dir) J = load_cached(cache_file(*dir, key), key, f.field());
    if (!J) {
        J = buchberger(gens);
        if (dir) store_cached(cache_file(*dir, key), key, *J);
    }
    if (opts.check) check_basis(*J, gens);
    std::lock_guard lock(cache.mu);
    return cache.entries.emplace(key, std::move(*J)).first->second;
}

void clear_jacobian_cache() {
    auto& cache = jacobian_cache();
    std::lock_guard lock(cache.mu);
    cache.entries.clear();
}

HilbertProfile hilbert_profile(const GroebnerBasis& J, int upto) {
    HilbertProfile p;
    for (int t = 0; t <= upto; ++t) p.emplace_back(t, hilbert_function(J, t));
    return p;
}

// ---------------------------------------------------------------------------
// Milnor algebra

namespace {

struct Analysis {
    GroebnerBasis J;
    FreeResolution minimal;
    BettiTable betti;
    int regularity = 0;
    HilbertProfile profile;
    bool stable = false;
};

Analysis analyze(const Curve& c, const AnalysisOptions& opts) {
    validate_curve(c);
    Analysis a;
    a.J = jacobian_ideal(curve_polynomial(c), opts);
    FreeResolution frame = free_resolution(a.J);
    if (opts.check && !is_complex(frame)) throw std::logic_error("check failed: Schreyer frame is not a complex");
    a.minimal = minimize(std::move(frame));
    if (opts.check) {
        if (!is_complex(a.minimal)) throw std::logic_error("check failed: minimized resolution is not a complex");
        if (!is_graded(a.minimal)) throw std::logic_error("check failed: minimized resolution is not graded");
        if (has_unit_entries(a.minimal)) throw std::logic_error("check failed: unit entry left after minimization");
    }
    a.betti = betti_table(a.minimal);
    a.regularity = regularity(a.betti);
    const int upto = std::max(opts.max_degree.value_or(a.regularity + 3), a.regularity + 2);
    a.profile = hilbert_profile(a.J, upto);
    if (opts.check) {
        for (const auto& [t, v] : a.profile) {
            if (resolution_hilbert_function(a.minimal, t) != v) {
                throw std::logic_error("check failed: Hilbert function disagrees with the resolution at t = " +
                                       std::to_string(t));
            }
        }
    }
    a.stable = true;
    for (const auto& [t, v] : a.profile) {
        if (t > a.regularity && v != a.profile.back().second) a.stable = false;
    }
    return a;
}

}  // namespace

MilnorResolution milnor_resolution(const Curve& c, const AnalysisOptions& opts) {
    Analysis a = analyze(c, opts);
    if (!a.stable) throw NotReduced(a.profile);
    MilnorResolution m;
    m.resolution = std::move(a.minimal);
    m.betti = std::move(a.betti);
    m.regularity = a.regularity;
    m.tjurina = a.profile.back().second;
    m.profile = std::move(a.profile);
    return m;
}

std::vector<int> ar_generator_degrees(const BettiTable& B, int d) {
    std::vector<int> out;
    for (const auto& [k, v] : B.entries()) {
        if (k.first != 2) continue;
        out.insert(out.end(), static_cast<std::size_t>(v), k.second - (d - 1));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SingularReport singular_report(const Curve& c, const AnalysisOptions& opts) {
    Analysis a = analyze(c, opts);
    SingularReport r;
    r.regularity = a.regularity;
    r.hilbert_profile = a.profile;
    r.reduced_ok = a.stable;
    if (a.stable) r.tjurina = a.profile.back().second;
    try {
        GroebnerBasis sat = saturate_irrelevant(a.J, 10, &r.saturation_rounds);
        for (int k = 1; k <= 3; ++k) r.saturated_piece_dims[k] = monomial_count(k) - hilbert_function(sat, k);
        for (const auto& [t, v] : a.profile) r.saturated_profile.emplace_back(t, hilbert_function(sat, t));
    } catch (const Error&) {
        r.saturated_piece_dims.clear();
        r.saturated_profile.clear();
    }
    return r;
}

// ---------------------------------------------------------------------------
// Comparison

BettiComparison compare_betti(const BettiTable& a, const BettiTable& b) {
    std::set<BettiTable::Key> keys;
    for (const auto& [k, v] : a.entries()) keys.insert(k);
    for (const auto& [k, v] : b.entries()) keys.insert(k);
    BettiComparison out;
    for (const auto& k : keys) {
        if (a.at(k.first, k.second) != b.at(k.first, k.second)) {
            out.equal = false;
            out.first_difference = k;
            out.left = a.at(k.first, k.second);
            out.right = b.at(k.first, k.second);
            break;
        }
    }
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::StrongZiegler: return "StrongZiegler";
        case Verdict::Inconclusive: return "Inconclusive";
        case Verdict::NotComparable: return "NotComparable";
    }
    return "NotComparable";
}

ZieglerVerdict ziegler_verdict(const BettiTable& a, const BettiTable& b, bool combinatorics_asserted) {
    ZieglerVerdict v;
    v.combinatorics_asserted = combinatorics_asserted;
    v.comparison = compare_betti(a, b);
    v.betti_equal = v.comparison.equal;
    if (!combinatorics_asserted) v.verdict = Verdict::NotComparable;
    else v.verdict = v.betti_equal ? Verdict::Inconclusive : Verdict::StrongZiegler;
    return v;
}

ZieglerVerdict ziegler_verdict(const Curve& a, const Curve& b, bool combinatorics_asserted,
                               const AnalysisOptions& opts) {
    return ziegler_verdict(a, milnor_resolution(a, opts), b, milnor_resolution(b, opts), combinatorics_asserted);
}

ZieglerVerdict ziegler_verdict(const Curve& a, const MilnorResolution& ma, const Curve& b,
                               const MilnorResolution& mb, bool combinatorics_asserted) {
    ZieglerVerdict v = ziegler_verdict(ma.betti, mb.betti, combinatorics_asserted);
    if (!combinatorics_asserted) return v;
    if (ma.tjurina != mb.tjurina) {
        v.assertion_violations.push_back("tjurina numbers differ: " + std::to_string(ma.tjurina) + " vs " +
                                         std::to_string(mb.tjurina));
    }
    auto degrees = [](const Curve& c) {
        std::vector<int> out;
        for (const auto& comp : c.components) out.push_back(comp.poly.homogeneous_degree());
        std::sort(out.begin(), out.end());
        return out;
    };
    auto joined = [](const std::vector<int>& ds) {
        std::string s;
        for (int d : ds) s += (s.empty() ? "" : " ") + std::to_string(d);
        return s;
    };
    const auto da = degrees(a), db = degrees(b);
    if (da != db) v.assertion_violations.push_back("component degrees differ: " + joined(da) + " vs " + joined(db));
    return v;
}

long expected_tjurina(const std::map<std::string, long>& counts) {
    static const std::map<std::string, long> weight = {
        {"node", 1}, {"A1", 1}, {"cusp", 2}, {"A2", 2}, {"tacnode", 3}, {"A3", 3},
        {"triple", 4}, {"ordinary-triple", 4}, {"D4", 4},
    };
    long total = 0;
    for (const auto& [kind, n] : counts) {
        auto it = weight.find(kind);
        if (it == weight.end()) throw std::invalid_argument("unknown singularity kind '" + kind + "'");
        if (n < 0) throw std::invalid_argument("negative count for '" + kind + "'");
        total += it->second * n;
    }
    return total;
}

}  // namespace ziegler
