#include "ziegler/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

namespace ziegler {

namespace {

struct ComponentSrc {
    const char* label;
    ComponentKind kind;
    const char* poly;
};

constexpr auto line = ComponentKind::line;
constexpr auto conic = ComponentKind::conic;

// Sextics
const ComponentSrc zariski_sextic = {"B", ComponentKind::sextic_irreducible,
                                     "(x^2 + y^2 + z^2)^3 + (x^3 + y^3 + z^3)^2"};
const ComponentSrc oka_sextic = {
    "B", ComponentKind::sextic_irreducible,
    "x^6 - x^4*y^2 + 1/3*x^2*y^4 - 1/27*y^6 + 2*x^3*y^2*z - 2*x^4*z^2 - 5/3*x^2*y^2*z^2"
    " - 2/9*y^4*z^2 + 4/3*x^2*z^4 + 5/9*y^2*z^4 - 8/27*z^6"};

// Two conics and three lines over Q(sqrt 2)
const ComponentSrc c123_C = {"C", conic, "-x^2 + y*z"};
const ComponentSrc c123_L1 = {"L1", line, "3*x + y + 2*z"};
const ComponentSrc c123_L2 = {"L2", line, "-3*x + y + 2*z"};
const ComponentSrc c123_D = {"D", conic, "(12*r - 18)*x^2 + (-36*r + 51)*x*z + y*z + (24*r - 34)*z^2"};
const ComponentSrc c123_M1 = {"M1", line, "2*r*x + y + 2*z"};
const ComponentSrc c123_M2 = {"M2", line, "-2*r*x + y + 2*z"};

const ComponentSrc c124_D = {"D", conic, "-9/8*x^2 + y*z"};
const ComponentSrc c124_M1 = {"M1", line, "-x + y - 2*z"};
const ComponentSrc c124_M2 = {"M2", line, "y - z"};

const ComponentSrc c212_C1 = {"C1", conic, "x^2 + x*y + y^2 - 27/4*z^2"};
const ComponentSrc c212_C2 = {"C2", conic, "676*x^2 + 764*x*y + 676*y^2 - 4563*z^2"};
const ComponentSrc c212_M0 = {"M0", line, "y"};
const ComponentSrc c212_M1 = {"M1", line, "15*x + 8*y - 39*z"};
const ComponentSrc c212_M2 = {"M2", line, "15*x + 8*y + 39*z"};
const ComponentSrc c212_M3 = {"M3", line, "8*x + 15*y - 39*z"};

const ComponentSrc c223_C1 = {"C1", conic, "-x^2 + y*z"};
const ComponentSrc c223_C2 = {"C2", conic, "-10*x*y + y^2 + 25*y*z - 36*z^2"};
const ComponentSrc c223_D = {"D", conic, "-5/4*x^2 + 2*x*z + y*z - 3*z^2"};
const ComponentSrc c223_M1 = {"M1", line, "-32/5*x + y + 256/25*z"};
const ComponentSrc c223_M2 = {"M2", line, "y"};
const ComponentSrc c223_M3 = {"M3", line, "-10*x + y + 25*z"};
const ComponentSrc c223_M4 = {"M4", line, "-18/5*x + y + 81/25*z"};

const ComponentSrc c224_C1 = {"C1", conic, "-x^2 + y*z + 2*z^2"};
const ComponentSrc c224_C2 = {"C2", conic, "x^2 + y^2 - 2*y*z - 4*z^2"};
const ComponentSrc c224_D = {"D", conic, "-1/2*x^2 + y*z + 2*z^2"};
const ComponentSrc c224_M1 = {"M1", line, "-x + y"};
const ComponentSrc c224_M2 = {"M2", line, "-3*x + y + 4*z"};

const BettiTable sextic_b1_betti = {{{0, 0}, 1}, {{1, 5}, 3}, {{2, 8}, 1}, {{2, 10}, 3}, {{3, 11}, 1}, {{3, 12}, 1}};
const BettiTable sextic_b2_betti = {{{0, 0}, 1}, {{1, 5}, 3}, {{2, 9}, 2}, {{2, 10}, 3}, {{3, 11}, 3}};
const BettiTable deg7_first_betti = {{{0, 0}, 1}, {{1, 6}, 3}, {{2, 9}, 1}, {{2, 10}, 1}, {{2, 11}, 1}, {{3, 12}, 1}};
const BettiTable deg7_second_betti = {{{0, 0}, 1}, {{1, 6}, 3}, {{2, 10}, 4}, {{3, 11}, 2}};
const BettiTable deg7_b51_betti = {{{0, 0}, 1}, {{1, 6}, 3}, {{2, 9}, 1}, {{2, 10}, 1}, {{2, 12}, 1}, {{3, 13}, 1}};
const BettiTable deg7_b52_betti = {{{0, 0}, 1}, {{1, 6}, 3}, {{2, 10}, 3}, {{2, 11}, 1}, {{3, 11}, 1}, {{3, 12}, 1}};
const BettiTable deg7_b4_betti = {{{0, 0}, 1}, {{1, 6}, 3}, {{2, 10}, 3}, {{3, 12}, 1}};
const BettiTable deg8_b1_betti = {{{0, 0}, 1}, {{1, 7}, 3}, {{2, 11}, 1}, {{2, 12}, 2}, {{3, 14}, 1}};
const BettiTable deg8_b23_betti = {{{0, 0}, 1}, {{1, 7}, 3}, {{2, 12}, 5}, {{3, 13}, 3}};

const std::map<std::string, long> six_cusps = {{"cusp", 6}};
const std::map<std::string, long> deg8_census = {{"node", 7}, {"tacnode", 6}, {"triple", 2}};

CatalogEntry make(std::string key, Field field, std::vector<ComponentSrc> parts, std::string label,
                  std::string group, BettiTable expected, std::map<std::string, long> singularities = {}) {
    CatalogEntry e;
    e.key = key;
    e.curve.name = std::move(key);
    e.curve.field = field;
    for (const auto& p : parts) e.curve.components.push_back({p.label, p.kind, parse_poly(p.poly, field)});
    validate_curve(e.curve);
    e.combinatorics_label = std::move(label);
    e.group = std::move(group);
    e.expected_betti = std::move(expected);
    e.singularities = std::move(singularities);
    return e;
}

std::vector<CatalogEntry> build_catalog() {
    const Field Q = Field::rational();
    const Field Q2 = Field::quadratic(2);
    std::vector<CatalogEntry> out;
    out.push_back(make("sextic-B1", Q, {zariski_sextic}, "sextic-6-cusps", "sextic", sextic_b1_betti, six_cusps));
    out.push_back(make("sextic-B2", Q, {oka_sextic}, "sextic-6-cusps", "sextic", sextic_b2_betti, six_cusps));

    out.push_back(make("deg7-B1,1", Q2, {c123_C, c123_L1, c123_L2, c123_D, c123_M1}, "Cmb123", "deg7-B1",
                       deg7_first_betti));
    out.push_back(make("deg7-B1,2", Q2, {c123_C, c123_L1, c123_L2, c123_D, c123_M2}, "Cmb123", "deg7-B1",
                       deg7_second_betti));
    out.push_back(make("deg7-B2,1", Q, {c123_C, c123_L1, c123_L2, c124_D, c124_M1}, "Cmb124", "deg7-B2",
                       deg7_first_betti));
    out.push_back(make("deg7-B2,2", Q, {c123_C, c123_L1, c123_L2, c124_D, c124_M2}, "Cmb124", "deg7-B2",
                       deg7_second_betti));
    out.push_back(make("deg7-B3,1", Q, {c212_C1, c212_C2, c212_M0, c212_M1, c212_M2}, "Cmb212", "deg7-B3",
                       deg7_first_betti));
    out.push_back(make("deg7-B3,2", Q, {c212_C1, c212_C2, c212_M0, c212_M1, c212_M3}, "Cmb212", "deg7-B3",
                       deg7_second_betti));
    const ComponentSrc m4[] = {c223_M1, c223_M2, c223_M3, c223_M4};
    for (int i = 0; i < 4; ++i) {
        out.push_back(make("deg7-B4," + std::to_string(i + 1), Q, {c223_C1, c223_C2, c223_D, m4[i]}, "Cmb223",
                           "deg7-B4", deg7_b4_betti));
    }
    out.push_back(make("deg7-B5,1", Q, {c224_C1, c224_C2, c224_D, c224_M1}, "Cmb224", "deg7-B5", deg7_b51_betti));
    out.push_back(make("deg7-B5,2", Q, {c224_C1, c224_C2, c224_D, c224_M2}, "Cmb224", "deg7-B5", deg7_b52_betti));

    out.push_back(make("deg8-B1", Q, {c223_C1, c223_C2, c223_D, c223_M1, c223_M2}, "cmb223-plus-bitangent", "deg8",
                       deg8_b1_betti, deg8_census));
    out.push_back(make("deg8-B2", Q, {c223_C1, c223_C2, c223_D, c223_M1, c223_M3}, "cmb223-plus-bitangent", "deg8",
                       deg8_b23_betti, deg8_census));
    out.push_back(make("deg8-B3", Q, {c223_C1, c223_C2, c223_D, c223_M3, c223_M4}, "cmb223-plus-bitangent", "deg8",
                       deg8_b23_betti, deg8_census));
    return out;
}

std::string fixed(double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << s;
    return os.str();
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry* find_entry(std::string_view key) {
    for (const auto& e : catalog_entries()) {
        if (e.key == key) return &e;
    }
    return nullptr;
}

bool same_combinatorics(const CatalogEntry& a, const CatalogEntry& b) {
    return a.combinatorics_label == b.combinatorics_label;
}

VerifyReport verify(const CatalogEntry& entry, const AnalysisOptions& opts) {
    VerifyReport r;
    r.key = entry.key;
    r.expected = entry.expected_betti;
    const auto start = std::chrono::steady_clock::now();
    try {
        MilnorResolution m = milnor_resolution(entry.curve, opts);
        r.reduced = true;
        r.tjurina = m.tjurina;
        r.computed = m.betti;
        r.pass = true;
        if (r.expected) {
            BettiComparison cmp = compare_betti(m.betti, *r.expected);
            if (!cmp.equal) {
                r.difference = cmp;
                r.pass = false;
            }
        }
    } catch (const NotReduced& e) {
        r.error = e.what();
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<VerifyReport> verify_all(const std::vector<CatalogEntry>& entries, const AnalysisOptions& opts,
                                     unsigned threads) {
    std::vector<VerifyReport> out(entries.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(entries.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < entries.size();) out[i] = verify(entries[i], opts);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

std::string write_verify_report(const std::vector<VerifyReport>& reports, ReportFormat fmt) {
    const long passed = std::count_if(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.pass; });
    if (fmt == ReportFormat::json) {
        nlohmann::json doc = {{"format_version", report_format_version}, {"command", "verify"}};
        doc["entries"] = nlohmann::json::array();
        for (const auto& r : reports) {
            nlohmann::json e = {{"key", r.key}, {"status", r.pass ? "PASS" : "FAIL"}, {"reduced", r.reduced}};
            e["tjurina"] = r.tjurina ? nlohmann::json(*r.tjurina) : nlohmann::json(nullptr);
            e["betti"] = r.computed ? betti_to_json(*r.computed) : nlohmann::json(nullptr);
            e["expected_betti"] = r.expected ? betti_to_json(*r.expected) : nlohmann::json(nullptr);
            if (r.difference) {
                e["first_difference"] = {{"i", r.difference->first_difference->first},
                                         {"j", r.difference->first_difference->second},
                                         {"computed", r.difference->left},
                                         {"expected", r.difference->right}};
            }
            if (!r.error.empty()) e["error"] = r.error;
            e["seconds"] = r.seconds;
            doc["entries"].push_back(std::move(e));
        }
        doc["passed"] = passed;
        doc["total"] = reports.size();
        return doc.dump(2) + "\n";
    }
    std::size_t width = 3;
    for (const auto& r : reports) width = std::max(width, r.key.size());
    std::ostringstream os;
    for (const auto& r : reports) {
        os << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(int(width)) << r.key << std::right;
        os << "  tau=" << (r.tjurina ? std::to_string(*r.tjurina) : std::string("-"));
        if (r.computed) os << "  " << r.computed->chain_string();
        if (r.difference) {
            const auto [i, j] = *r.difference->first_difference;
            os << "  [differs at (" << i << ", " << j << "): " << r.difference->left << " vs expected "
               << r.difference->right << "]";
        }
        if (!r.error.empty()) os << "  [" << r.error << "]";
        os << "  (" << fixed(r.seconds) << " s)\n";
    }
    os << passed << "/" << reports.size() << " PASS\n";
    return os.str();
}

std::vector<std::filesystem::path> export_catalog(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> paths;
    for (const auto& e : catalog_entries()) {
        auto path = dir / (e.key + ".json");
        std::ofstream out(path);
        if (!out) throw Error("cannot write " + path.string());
        out << write_curve_file(e.curve);
        paths.push_back(std::move(path));
    }
    return paths;
}

}  // namespace ziegler
