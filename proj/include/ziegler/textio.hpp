#pragma once

// Expression parser, curve files and report serialization.
//
// Expression grammar (whitespace is ignored, multiplication is always explicit):
//   expr     := ['-'] term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := primary ('^' nat)*
//   primary  := rational | 'x' | 'y' | 'z' | 'r' | '(' expr ')'
//   rational := int ['/' int]
// 'r' stands for sqrt(d) and is only accepted over Q(sqrt d).

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

#include "ziegler/curvelab.hpp"

namespace ziegler {

/// Throws ParseError carrying the byte offset of the problem.
Poly parse_poly(std::string_view src, Field field);

/// Inverse of parse_poly up to term order.
std::string render(const Poly& p);

/// Curve file layout:
///   {"name": "...", "field": {"kind": "rational"} | {"kind": "quadratic", "d": 2},
///    "components": [{"label": "C", "kind": "conic", "poly": "-x^2 + y*z"}, ...]}
/// Throws SchemaError naming the offending path.
Curve curve_from_json(const nlohmann::json& doc);
Curve parse_curve_file(std::string_view text);
Curve read_curve_file(const std::filesystem::path& path);

nlohmann::json curve_to_json(const Curve& c);
std::string write_curve_file(const Curve& c);

enum class ReportFormat { text, json };

inline constexpr int report_format_version = 1;

/// [[i, j, beta], ...] in (i, j) order.
nlohmann::json betti_to_json(const BettiTable& B);
BettiTable betti_from_json(const nlohmann::json& triples);

nlohmann::json resolution_report_json(const Curve& c, const MilnorResolution& m);
nlohmann::json singular_report_json(const Curve& c, const SingularReport& r);
nlohmann::json comparison_report_json(const Curve& a, const Curve& b, const BettiTable& ta,
                                      const BettiTable& tb, const ZieglerVerdict& v);

std::string write_resolution_report(const Curve& c, const MilnorResolution& m, ReportFormat fmt);
std::string write_singular_report(const Curve& c, const SingularReport& r, ReportFormat fmt);
std::string write_comparison_report(const Curve& a, const Curve& b, const BettiTable& ta,
                                    const BettiTable& tb, const ZieglerVerdict& v, ReportFormat fmt);

}  // namespace ziegler
