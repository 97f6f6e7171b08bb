#include "ziegler/textio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ziegler {

using nlohmann::json;

namespace {

constexpr unsigned max_exponent = 255;
constexpr unsigned max_degree = 1000;

class Parser {
public:
    Parser(std::string_view src, Field f) : s_(src), f_(f) {}

    Poly parse() {
        Poly p = expr();
        skip();
        if (i_ < s_.size()) fail(std::string("unexpected character '") + s_[i_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool at(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }

    bool at_digit() {
        skip();
        return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
    }

    Integer integer() {
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        return Integer(std::string(s_.substr(start, i_ - start)));
    }

    Poly expr() {
        bool negate = false;
        if (at('-')) {
            negate = true;
            ++i_;
        }
        Poly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (at('+')) {
                ++i_;
                acc += term();
            } else if (at('-')) {
                ++i_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        while (at('*')) {
            ++i_;
            acc *= factor();
        }
        return acc;
    }

    Poly factor() {
        Poly base = primary();
        while (at('^')) {
            ++i_;
            if (!at_digit()) fail("expected exponent");
            std::size_t start = i_;
            Integer n = integer();
            if (n > max_exponent) {
                i_ = start;
                fail("exponent too large");
            }
            const unsigned e = static_cast<unsigned>(n.get_ui());
            if (!base.is_zero() && base.lead().mono.degree() * e > max_degree) {
                i_ = start;
                fail("degree too large");
            }
            base = pow(base, e);
        }
        return base;
    }

    Poly primary() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = integer();
            Integer den = 1;
            if (at('/')) {
                ++i_;
                if (!at_digit()) fail("expected denominator");
                std::size_t start = i_;
                den = integer();
                if (den == 0) {
                    i_ = start;
                    fail("zero denominator");
                }
            }
            return Poly::constant(f_, make_rational(num, den));
        }
        switch (c) {
            case 'x': ++i_; return Poly::variable(f_, Var::x);
            case 'y': ++i_; return Poly::variable(f_, Var::y);
            case 'z': ++i_; return Poly::variable(f_, Var::z);
            case 'r':
                if (f_.is_rational()) fail("'r' requires a quadratic field");
                ++i_;
                return Poly::constant(f_, FieldElement::from_parts(f_, Rational(0), Rational(1)));
            case '(': {
                ++i_;
                Poly inner = expr();
                if (!at(')')) fail("expected ')'");
                ++i_;
                return inner;
            }
            default:
                fail(std::string("unexpected character '") + c + "'");
        }
    }

    std::string_view s_;
    Field f_;
    std::size_t i_ = 0;
};

std::string index_path(const char* array, std::size_t i, const char* key = nullptr) {
    std::string p = std::string(array) + "[" + std::to_string(i) + "]";
    if (key) p += std::string(".") + key;
    return p;
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(path.empty() ? key : path + "." + key, "missing");
    return *it;
}

std::string require_string(const json& obj, const std::string& key, const std::string& path) {
    const json& v = require(obj, key, path);
    if (!v.is_string()) throw SchemaError(path.empty() ? key : path + "." + key, "expected a string");
    return v.get<std::string>();
}

Field field_from_json(const json& f) {
    if (!f.is_object()) throw SchemaError("field", "expected an object");
    const std::string kind = require_string(f, "kind", "field");
    if (kind == "rational") return Field::rational();
    if (kind != "quadratic") throw SchemaError("field.kind", "unknown field kind '" + kind + "'");
    const json& d = require(f, "d", "field");
    if (!d.is_number_integer()) throw SchemaError("field.d", "expected an integer");
    try {
        return Field::quadratic(d.get<long>());
    } catch (const Error& e) {
        throw SchemaError("field.d", e.what());
    }
}

json field_to_json(Field f) {
    if (f.is_rational()) return {{"kind", "rational"}};
    return {{"kind", "quadratic"}, {"d", f.d()}};
}

json profile_to_json(const HilbertProfile& p) {
    json out = json::array();
    for (const auto& [t, v] : p) out.push_back({t, v});
    return out;
}

std::string profile_text(const HilbertProfile& p) {
    std::string s;
    for (const auto& [t, v] : p) {
        if (!s.empty()) s += ' ';
        s += std::to_string(v);
    }
    return s;
}

json header(const char* command) {
    return {{"format_version", report_format_version}, {"command", command}};
}

json curve_summary(const Curve& c) {
    return {{"name", c.name}, {"degree", c.degree()}, {"field", c.field.to_string()}};
}

std::string curve_line(const Curve& c) {
    return c.name + " (degree " + std::to_string(c.degree()) + ", " + c.field.to_string() + ")";
}

std::string indent(const std::string& block, const std::string& pad) {
    std::istringstream in(block);
    std::string line, out;
    while (std::getline(in, line)) out += pad + line + "\n";
    return out;
}

}  // namespace

Poly parse_poly(std::string_view src, Field field) {
    return Parser(src, field).parse();
}

std::string render(const Poly& p) {
    return p.to_string();
}

Curve curve_from_json(const json& doc) {
    if (!doc.is_object()) throw SchemaError("$", "expected an object");
    Curve c;
    c.name = require_string(doc, "name", "");
    c.field = field_from_json(require(doc, "field", ""));
    const json& comps = require(doc, "components", "");
    if (!comps.is_array()) throw SchemaError("components", "expected an array");
    if (comps.empty()) throw SchemaError("components", "at least one component is required");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const json& e = comps[i];
        const std::string path = index_path("components", i);
        if (!e.is_object()) throw SchemaError(path, "expected an object");
        Component comp;
        comp.label = require_string(e, "label", path);
        const std::string kind = require_string(e, "kind", path);
        auto k = component_kind_from_string(kind);
        if (!k) throw SchemaError(path + ".kind", "unknown component kind '" + kind + "'");
        comp.kind = *k;
        const std::string src = require_string(e, "poly", path);
        try {
            comp.poly = parse_poly(src, c.field);
        } catch (const ParseError& err) {
            throw SchemaError(path + ".poly", err.what());
        }
        c.components.push_back(std::move(comp));
    }
    validate_curve(c);
    return c;
}

Curve parse_curve_file(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("$", std::string("invalid JSON: ") + e.what());
    }
    return curve_from_json(doc);
}

Curve read_curve_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_curve_file(buf.str());
}

json curve_to_json(const Curve& c) {
    json comps = json::array();
    for (const auto& comp : c.components) {
        comps.push_back({{"label", comp.label}, {"kind", to_string(comp.kind)}, {"poly", render(comp.poly)}});
    }
    return {{"name", c.name}, {"field", field_to_json(c.field)}, {"components", std::move(comps)}};
}

std::string write_curve_file(const Curve& c) {
    return curve_to_json(c).dump(2) + "\n";
}

json betti_to_json(const BettiTable& B) {
    json out = json::array();
    for (const auto& [k, v] : B.entries()) out.push_back({k.first, k.second, v});
    return out;
}

BettiTable betti_from_json(const json& triples) {
    if (!triples.is_array()) throw SchemaError("betti", "expected an array of [i, j, beta]");
    BettiTable B;
    for (std::size_t n = 0; n < triples.size(); ++n) {
        const json& t = triples[n];
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() ||
            !t[2].is_number_integer()) {
            throw SchemaError(index_path("betti", n), "expected [i, j, beta]");
        }
        B.add(t[0].get<int>(), t[1].get<int>(), t[2].get<long>());
    }
    return B;
}

json resolution_report_json(const Curve& c, const MilnorResolution& m) {
    json doc = header("resolve");
    doc["curve"] = curve_summary(c);
    doc["betti"] = betti_to_json(m.betti);
    doc["resolution"] = m.betti.chain_string();
    doc["regularity"] = m.regularity;
    doc["tjurina"] = m.tjurina;
    doc["ar_generator_degrees"] = ar_generator_degrees(m.betti, c.degree());
    return doc;
}

json singular_report_json(const Curve& c, const SingularReport& r) {
    json doc = header("singular");
    doc["curve"] = curve_summary(c);
    doc["reduced"] = r.reduced_ok;
    doc["tjurina"] = r.tjurina ? json(*r.tjurina) : json(nullptr);
    doc["regularity"] = r.regularity;
    doc["hilbert_profile"] = profile_to_json(r.hilbert_profile);
    json dims = json::object();
    for (const auto& [k, v] : r.saturated_piece_dims) dims[std::to_string(k)] = v;
    doc["saturated_piece_dims"] = dims;
    doc["saturated_profile"] = profile_to_json(r.saturated_profile);
    doc["saturation_rounds"] = r.saturation_rounds;
    return doc;
}

json comparison_report_json(const Curve& a, const Curve& b, const BettiTable& ta, const BettiTable& tb,
                            const ZieglerVerdict& v) {
    json doc = header("compare");
    auto side = [](const Curve& c, const BettiTable& t) {
        json s = curve_summary(c);
        s["betti"] = betti_to_json(t);
        s["resolution"] = t.chain_string();
        return s;
    };
    doc["left"] = side(a, ta);
    doc["right"] = side(b, tb);
    doc["combinatorics_asserted"] = v.combinatorics_asserted;
    doc["betti_equal"] = v.betti_equal;
    if (v.comparison.first_difference) {
        doc["first_difference"] = {{"i", v.comparison.first_difference->first},
                                   {"j", v.comparison.first_difference->second},
                                   {"left", v.comparison.left},
                                   {"right", v.comparison.right}};
    } else {
        doc["first_difference"] = nullptr;
    }
    doc["verdict"] = to_string(v.verdict);
    doc["assertion_violations"] = v.assertion_violations;
    return doc;
}

std::string write_resolution_report(const Curve& c, const MilnorResolution& m, ReportFormat fmt) {
    if (fmt == ReportFormat::json) return resolution_report_json(c, m).dump(2) + "\n";
    std::ostringstream os;
    os << "curve: " << curve_line(c) << "\n";
    os << "resolution: " << m.betti.chain_string() << "\n";
    os << "betti table:\n" << indent(m.betti.diagram(), "  ");
    os << "regularity: " << m.regularity << "\n";
    os << "tjurina: " << m.tjurina << "\n";
    os << "AR generator degrees:";
    for (int d : ar_generator_degrees(m.betti, c.degree())) os << ' ' << d;
    os << "\n";
    return os.str();
}

std::string write_singular_report(const Curve& c, const SingularReport& r, ReportFormat fmt) {
    if (fmt == ReportFormat::json) return singular_report_json(c, r).dump(2) + "\n";
    std::ostringstream os;
    os << "curve: " << curve_line(c) << "\n";
    os << "reduced: " << (r.reduced_ok ? "yes" : "no") << "\n";
    os << "tjurina: " << (r.tjurina ? std::to_string(*r.tjurina) : std::string("n/a")) << "\n";
    os << "hilbert profile of S/J (t = 0.." << (r.hilbert_profile.empty() ? 0 : r.hilbert_profile.back().first)
       << "): " << profile_text(r.hilbert_profile) << "\n";
    if (r.saturated_piece_dims.empty()) {
        os << "saturation: did not stabilize\n";
    } else {
        os << "hilbert profile of S/J^sat: " << profile_text(r.saturated_profile) << "\n";
        for (const auto& [k, v] : r.saturated_piece_dims) os << "dim (J^sat)_" << k << ": " << v << "\n";
        os << "saturation rounds: " << r.saturation_rounds << "\n";
    }
    return os.str();
}

std::string write_comparison_report(const Curve& a, const Curve& b, const BettiTable& ta, const BettiTable& tb,
                                    const ZieglerVerdict& v, ReportFormat fmt) {
    if (fmt == ReportFormat::json) return comparison_report_json(a, b, ta, tb, v).dump(2) + "\n";
    std::ostringstream os;
    os << "left:  " << curve_line(a) << "\n  " << ta.chain_string() << "\n" << indent(ta.diagram(), "  ");
    os << "right: " << curve_line(b) << "\n  " << tb.chain_string() << "\n" << indent(tb.diagram(), "  ");
    if (v.betti_equal) {
        os << "betti tables: equal\n";
    } else {
        const auto [i, j] = *v.comparison.first_difference;
        os << "betti tables: distinct, first at (" << i << ", " << j << "): " << v.comparison.left << " vs "
           << v.comparison.right << "\n";
    }
    os << "combinatorics asserted: " << (v.combinatorics_asserted ? "yes" : "no") << "\n";
    for (const auto& msg : v.assertion_violations) os << "warning: asserted combinatorics violated: " << msg << "\n";
    os << "verdict: " << to_string(v.verdict) << "\n";
    return os.str();
}

}  // namespace ziegler
