#pragma once

// Built-in registry of the sextic pair and the conic-line arrangements of
// degrees 7 and 8, with the Betti tables they are expected to produce.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ziegler/textio.hpp"

namespace ziegler {

struct CatalogEntry {
    std::string key;
    Curve curve;
    /// Entries with the same label have the same combinatorics.
    std::string combinatorics_label;
    std::optional<BettiTable> expected_betti;
    /// Ties the members of one Zariski tuple together.
    std::string group;
    /// Singularity census (kind -> count) where one is known.
    std::map<std::string, long> singularities;
};

/// All entries in catalog order. Built on first use.
const std::vector<CatalogEntry>& catalog_entries();

/// nullptr for unknown keys.
const CatalogEntry* find_entry(std::string_view key);

/// Asserted-equal combinatorics of two catalog curves.
bool same_combinatorics(const CatalogEntry& a, const CatalogEntry& b);

struct VerifyReport {
    std::string key;
    bool pass = false;
    bool reduced = false;
    std::optional<long> tjurina;
    std::optional<BettiTable> computed;
    std::optional<BettiTable> expected;
    /// Set when both tables exist and differ.
    std::optional<BettiComparison> difference;
    /// Non-empty when the computation itself failed.
    std::string error;
    double seconds = 0;
};

/// Recomputes the Betti table; PASS iff it equals the expected one (when present)
/// and the curve is reduced. Never throws for mathematical failures.
VerifyReport verify(const CatalogEntry& entry, const AnalysisOptions& opts = {});

/// Runs verify() over `entries` on up to `threads` workers; results keep input order.
std::vector<VerifyReport> verify_all(const std::vector<CatalogEntry>& entries, const AnalysisOptions& opts = {},
                                     unsigned threads = 0);

std::string write_verify_report(const std::vector<VerifyReport>& reports, ReportFormat fmt);

/// Writes one curve file per entry as <dir>/<key>.json and returns the paths.
std::vector<std::filesystem::path> export_catalog(const std::filesystem::path& dir);

}  // namespace ziegler
