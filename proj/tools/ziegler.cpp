// ziegler: Milnor algebra resolutions and strong Ziegler pairs from the command line.

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "ziegler/catalog.hpp"

namespace {

using namespace ziegler;

enum Exit : int {
    ok = 0,
    verify_failed = 1,
    bad_input = 2,
    not_reduced = 3,
    unknown_key = 4,
    usage = 64,
    internal = 70,
    distinct = 10,
    inconclusive = 11,
};

const char* exit_codes_help =
    "Exit codes:\n"
    "  0   success; for compare, equal Betti tables without asserted combinatorics\n"
    "  1   catalog verify-all: at least one FAIL row\n"
    "  2   unreadable input, parse or schema error (including inhomogeneous polynomials)\n"
    "  3   curve is not reduced (Hilbert function does not stabilize)\n"
    "  4   unknown catalog key\n"
    "  10  compare: Betti tables are distinct (StrongZiegler when combinatorics are asserted)\n"
    "  11  compare: combinatorics asserted and Betti tables equal (Inconclusive)\n"
    "  64  command-line usage error\n"
    "  70  internal error (for example a failed --check verification)\n"
    "\n"
    "CURVE arguments are curve files (JSON) or catalog keys such as deg7-B5,1.\n"
    "ZIEGLER_CACHE_DIR, if set, stores Jacobian Groebner bases between runs (with --cache).\n";

struct UnknownKey : Error {
    explicit UnknownKey(const std::string& key) : Error("unknown catalog key '" + key + "'") {}
};

struct Config {
    bool json = false;
    bool check = false;
    bool cache = false;
    std::optional<int> max_degree;

    AnalysisOptions options() const { return {check, cache, max_degree}; }
    ReportFormat format() const { return json ? ReportFormat::json : ReportFormat::text; }
};

bool looks_like_path(const std::string& arg) {
    return arg.find('/') != std::string::npos || std::filesystem::path(arg).has_extension();
}

Curve load_curve(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) return read_curve_file(arg);
    if (const CatalogEntry* e = find_entry(arg)) return e->curve;
    if (looks_like_path(arg)) throw Error("cannot read " + arg);
    throw UnknownKey(arg);
}

int cmd_resolve(const Config& cfg, const std::string& arg) {
    const Curve c = load_curve(arg);
    std::cout << write_resolution_report(c, milnor_resolution(c, cfg.options()), cfg.format());
    return ok;
}

int cmd_compare(const Config& cfg, const std::string& a, const std::string& b, bool asserted) {
    const Curve ca = load_curve(a);
    const Curve cb = load_curve(b);
    const MilnorResolution ma = milnor_resolution(ca, cfg.options());
    const MilnorResolution mb = milnor_resolution(cb, cfg.options());
    const ZieglerVerdict v = ziegler_verdict(ca, ma, cb, mb, asserted);
    std::cout << write_comparison_report(ca, cb, ma.betti, mb.betti, v, cfg.format());
    if (!v.betti_equal) return distinct;
    return asserted ? inconclusive : ok;
}

int cmd_singular(const Config& cfg, const std::string& arg) {
    const Curve c = load_curve(arg);
    const SingularReport r = singular_report(c, cfg.options());
    std::cout << write_singular_report(c, r, cfg.format());
    return r.reduced_ok ? ok : not_reduced;
}

int cmd_catalog_list(const Config& cfg) {
    if (cfg.json) {
        nlohmann::json doc = {{"format_version", report_format_version}, {"command", "catalog-list"}};
        doc["entries"] = nlohmann::json::array();
        for (const auto& e : catalog_entries()) {
            doc["entries"].push_back({{"key", e.key},
                                      {"combinatorics", e.combinatorics_label},
                                      {"group", e.group},
                                      {"degree", e.curve.degree()},
                                      {"field", e.curve.field.to_string()},
                                      {"components", e.curve.components.size()}});
        }
        std::cout << doc.dump(2) << "\n";
        return ok;
    }
    std::cout << std::left << std::setw(12) << "key" << std::setw(24) << "combinatorics" << std::setw(10) << "group"
              << std::setw(8) << "degree"
              << "field\n";
    for (const auto& e : catalog_entries()) {
        std::cout << std::setw(12) << e.key << std::setw(24) << e.combinatorics_label << std::setw(10) << e.group
                  << std::setw(8) << e.curve.degree() << e.curve.field.to_string() << "\n";
    }
    return ok;
}

int cmd_catalog_verify(const Config& cfg, unsigned threads) {
    const auto reports = verify_all(catalog_entries(), cfg.options(), threads);
    std::cout << write_verify_report(reports, cfg.format());
    for (const auto& r : reports) {
        if (!r.pass) return verify_failed;
    }
    return ok;
}

int cmd_catalog_export(const Config& cfg, const std::string& dir) {
    const auto paths = export_catalog(dir);
    if (cfg.json) {
        nlohmann::json doc = {{"format_version", report_format_version}, {"command", "catalog-export"}};
        doc["files"] = nlohmann::json::array();
        for (const auto& p : paths) doc["files"].push_back(p.string());
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& p : paths) std::cout << p.string() << "\n";
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal free resolutions of Milnor algebras of plane curves and strong Ziegler pairs", "ziegler"};
    app.footer(exit_codes_help);
    app.require_subcommand(1, 1);
    app.fallthrough();

    Config cfg;
    app.add_flag("--json", cfg.json, "Machine-readable output (format_version 1)");
    app.add_flag("--check", cfg.check, "Re-verify Groebner bases, d*d = 0 and the Hilbert identity");
    app.add_flag("--cache", cfg.cache, "Memoize Jacobian Groebner bases");
    app.add_option("--max-degree", cfg.max_degree, "Last degree of the Hilbert profile (default regularity + 3)")
        ->check(CLI::NonNegativeNumber);

    std::string curve_a, curve_b;
    bool asserted = false;
    std::string key;
    std::string export_dir = "data/catalog";
    unsigned threads = 0;

    auto* resolve = app.add_subcommand("resolve", "Minimal resolution and Betti table of S/J");
    resolve->add_option("curve", curve_a, "Curve file or catalog key")->required();

    auto* compare = app.add_subcommand("compare", "Compare Betti tables and decide the strong Ziegler verdict");
    compare->add_option("first", curve_a, "Curve file or catalog key")->required();
    compare->add_option("second", curve_b, "Curve file or catalog key")->required();
    compare->add_flag("--assert-combinatorics", asserted, "Treat the two curves as combinatorially equivalent");

    auto* singular = app.add_subcommand("singular", "Tjurina number, Hilbert profile and saturated pieces");
    singular->add_option("curve", curve_a, "Curve file or catalog key")->required();

    auto* catalog = app.add_subcommand("catalog", "Built-in curves");
    catalog->require_subcommand(1, 1);
    auto* list = catalog->add_subcommand("list", "List catalog entries");
    auto* cresolve = catalog->add_subcommand("resolve", "Resolve a catalog entry");
    cresolve->add_option("key", key, "Catalog key")->required();
    auto* verify_all_cmd = catalog->add_subcommand("verify-all", "Recompute every entry against its expected table");
    verify_all_cmd->add_option("-j,--threads", threads, "Worker threads (default: hardware concurrency)");
    auto* exp = catalog->add_subcommand("export", "Write every entry as a curve file");
    exp->add_option("dir", export_dir, "Target directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*resolve) return cmd_resolve(cfg, curve_a);
        if (*compare) return cmd_compare(cfg, curve_a, curve_b, asserted);
        if (*singular) return cmd_singular(cfg, curve_a);
        if (*list) return cmd_catalog_list(cfg);
        if (*cresolve) {
            if (!find_entry(key)) throw UnknownKey(key);
            return cmd_resolve(cfg, key);
        }
        if (*verify_all_cmd) return cmd_catalog_verify(cfg, threads);
        if (*exp) return cmd_catalog_export(cfg, export_dir);
    } catch (const UnknownKey& e) {
        std::cerr << "ziegler: " << e.what() << "\n";
        return unknown_key;
    } catch (const NotReduced& e) {
        std::cerr << "ziegler: " << e.what() << "\n";
        return not_reduced;
    } catch (const SchemaError& e) {
        std::cerr << "ziegler: " << e.what() << "\n";
        return bad_input;
    } catch (const ParseError& e) {
        std::cerr << "ziegler: " << e.what() << "\n";
        return bad_input;
    } catch (const Error& e) {
        std::cerr << "ziegler: " << e.what() << "\n";
        return bad_input;
    } catch (const std::exception& e) {
        std::cerr << "ziegler: internal error: " << e.what() << "\n";
        return internal;
    }
    return usage;
}
