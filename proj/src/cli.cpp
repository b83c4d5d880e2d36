#include "weylfact/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "weylfact/errors.hpp"
#include "weylfact/expr.hpp"
#include "weylfact/json_io.hpp"
#include "weylfact/weyl.hpp"

namespace weylfact {

namespace {

struct Input {
    WeylOperator op;
    Json document;  // parsed file contents, null for expressions
};

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
}

Input load_input(const Command& cmd) {
    if (!cmd.file.empty()) {
        if (!cmd.expression.empty()) {
            throw UsageError("give either an expression or --file, not both");
        }
        Json doc = read_json_file(cmd.file);
        const Json& body = doc.contains("operator") ? doc.at("operator") : doc;
        WeylOperator op = operator_from_json(body);
        if (cmd.truncation) {
            op = WeylOperator(op.terms(), std::min(op.truncation(), *cmd.truncation), op.t_shift());
        }
        if (!op.is_zero() && !op.is_canonical()) {
            op = op.normalized();
        }
        return {std::move(op), std::move(doc)};
    }
    if (cmd.expression.empty()) {
        throw UsageError("missing operator expression");
    }
    const int n = cmd.truncation.value_or(default_truncation);
    return {from_derivation_form(parse_operator(cmd.expression), n), Json()};
}

std::string slope_key(const Slope& w) {
    return std::to_string(w.p()) + "/" + std::to_string(w.q());
}

Json spectrum_json(const std::vector<Slope>& spectrum) {
    Json out = Json::array();
    for (const auto& w : spectrum) out.push_back(slope_to_json(w));
    return out;
}

std::string polygon_text(const AdmissiblePolygon& d) {
    std::ostringstream os;
    bool first = true;
    for (const auto& b : d.breakpoints()) {
        os << (first ? "" : " ") << "(" << b.i << "," << b.j << ")";
        first = false;
    }
    return os.str();
}

std::string spectrum_text(const std::vector<Slope>& spectrum) {
    if (spectrum.empty()) return "(empty)";
    std::ostringstream os;
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        os << (k ? " " : "") << spectrum[k].to_string();
    }
    return os.str();
}

void require_nonzero(const WeylOperator& l) {
    if (l.is_zero()) {
        throw UsageError("the zero operator has no Newton polygon");
    }
}

int analyze(const Command& cmd, std::ostream& out) {
    const WeylOperator l = load_input(cmd).op;
    require_nonzero(l);
    const AdmissiblePolygon d = operator_polygon(l);
    const auto spectrum = poincare_spectrum(d);
    Json sigmas = Json::object();
    std::vector<std::pair<Slope, UniPoly>> sigma_list;
    for (const auto& w : spectrum) {
        const CharPoly cp = characteristic_polynomial(operator_leading_part(l, w));
        sigmas[slope_key(w)] = poly_to_json(cp.sigma);
        sigma_list.emplace_back(w, cp.sigma);
    }
    if (cmd.format == "text") {
        out << "operator: " << print_operator(l) << "\n"
            << "polygon: " << polygon_text(d) << "\n"
            << "spectrum: " << spectrum_text(spectrum) << "\n";
        for (const auto& [w, s] : sigma_list) {
            out << "sigma[" << w.to_string() << "]: " << s.to_string() << "\n";
        }
        out << "fuchsian: " << (is_fuchsian(l) ? "true" : "false") << "\n"
            << "t_shift: " << l.t_shift() << "\n";
        return 0;
    }
    Json j{{"operator", operator_to_json(l)},
           {"text", print_operator(l)},
           {"polygon", polygon_to_json(d)},
           {"spectrum", spectrum_json(spectrum)},
           {"sigma_per_slope", sigmas},
           {"fuchsian", is_fuchsian(l)},
           {"t_shift", l.t_shift()}};
    out << j.dump(2) << "\n";
    return 0;
}

struct FactorRecord {
    WeylOperator op;
    std::optional<Slope> slope;
    std::optional<CharPoly> charpoly;
};

std::pair<UniPoly, UniPoly> parse_split(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
        throw UsageError("--split expects two polynomials in l separated by one comma");
    }
    return {parse_polynomial(text.substr(0, comma)), parse_polynomial(text.substr(comma + 1))};
}

std::optional<Slope> single_slope_of(const WeylOperator& f) {
    const auto s = operator_spectrum(f);
    if (s.size() == 1) return s.front();
    return std::nullopt;
}

int factor(const Command& cmd, std::ostream& out) {
    const WeylOperator l = load_input(cmd).op;
    require_nonzero(l);
    std::vector<FactorRecord> records;
    if (cmd.mode == "slopes") {
        for (auto& f : weyl_factor_slopes(l)) {
            auto w = single_slope_of(f);
            records.push_back({std::move(f), w, std::nullopt});
        }
    } else if (cmd.mode == "characteristic") {
        if (cmd.split.empty()) {
            throw UsageError("characteristic mode needs --split s1,s2");
        }
        auto [s1, s2] = parse_split(cmd.split);
        auto [m, n] = weyl_factor_characteristic(l, s1, s2);
        for (WeylOperator* f : {&m, &n}) {
            auto w = single_slope_of(*f);
            std::optional<CharPoly> cp;
            if (w) cp = characteristic_polynomial(operator_leading_part(*f, *w));
            records.push_back({std::move(*f), w, cp});
        }
    } else if (cmd.mode == "monic") {
        for (auto& f : factor_monic(l)) {
            records.push_back({std::move(f.op), f.slope, f.charpoly});
        }
    } else {
        throw UsageError("unknown mode '" + cmd.mode + "'");
    }
    std::vector<WeylOperator> ops;
    for (const auto& r : records) ops.push_back(r.op);
    const bool residual_zero = verify_factorization(l, ops).is_zero();
    const AdmissiblePolygon d = operator_polygon(l);
    const auto spectrum = poincare_spectrum(d);

    if (cmd.format == "text") {
        out << "operator: " << print_operator(l) << "\n"
            << "polygon: " << polygon_text(d) << "\n"
            << "spectrum: " << spectrum_text(spectrum) << "\n"
            << "t_shift: " << l.t_shift() << "\n";
        for (std::size_t k = 0; k < records.size(); ++k) {
            const auto& r = records[k];
            out << "factor " << k + 1 << ": " << print_operator(r.op) << "\n";
            if (r.slope) out << "  slope: " << r.slope->to_string() << "\n";
            if (r.charpoly) {
                out << "  sigma: " << r.charpoly->full_sigma().to_string() << "\n"
                    << "  leading part: " << print_operator(reconstruct(*r.charpoly).terms) << "\n";
            }
        }
        out << "residual_zero: " << (residual_zero ? "true" : "false") << "\n";
        return 0;
    }
    Json factors = Json::array();
    for (const auto& r : records) {
        Json f{{"operator", operator_to_json(r.op)}, {"text", print_operator(r.op)}};
        f["slope"] = r.slope ? slope_to_json(*r.slope) : Json();
        if (r.charpoly) {
            f["sigma"] = poly_to_json(r.charpoly->full_sigma());
            f["leading_part"] = print_operator(reconstruct(*r.charpoly).terms);
        }
        factors.push_back(std::move(f));
    }
    Json j{{"mode", cmd.mode},
           {"operator", operator_to_json(l)},
           {"text", print_operator(l)},
           {"polygon", polygon_to_json(d)},
           {"spectrum", spectrum_json(spectrum)},
           {"t_shift", l.t_shift()},
           {"factors", factors},
           {"residual_zero", residual_zero}};
    out << j.dump(2) << "\n";
    return 0;
}

/// Residual of factor expressions against the operator expression, computed on
/// exact Laurent expansions so that factors carrying powers of 1/t compose
/// correctly; reported after the operator's own normalization shift.
WeylOperator expression_residual(const Command& cmd, int n) {
    const CoeffMap l = laurent_expand(parse_operator(cmd.expression));
    CoeffMap product{{{0, 0}, Rational(1)}};
    for (const auto& f : cmd.factors) {
        product = laurent_product(product, laurent_expand(parse_operator(f)));
    }
    const CoeffMap diff = add_maps(l, product, Rational(-1));
    auto lowest_j = [](const CoeffMap& m, int fallback) {
        int low = fallback;
        for (const auto& entry : m) low = std::min(low, entry.first.j);
        return low;
    };
    const int l_low = l.empty() ? 0 : lowest_j(l, l.begin()->first.j);
    const int low = lowest_j(diff, l_low);
    const int shift = -std::min(low, l_low);
    CoeffMap shifted;
    for (const auto& [pt, c] : diff) {
        shifted.emplace(LatticePoint{pt.i, pt.j + shift}, c);
    }
    return WeylOperator(std::move(shifted), n + shift + l_low, shift);
}

int verify(const Command& cmd, std::ostream& out) {
    WeylOperator residual;
    if (!cmd.file.empty()) {
        if (!cmd.factors.empty()) {
            throw UsageError("--factor cannot be combined with --file");
        }
        Input in = load_input(cmd);
        if (!in.document.contains("factors")) {
            throw UsageError("'" + cmd.file + "' has no \"factors\" list");
        }
        std::vector<WeylOperator> factors;
        for (const auto& f : in.document.at("factors")) {
            factors.push_back(operator_from_json(f.contains("operator") ? f.at("operator") : f));
        }
        residual = verify_factorization(in.op, factors);
    } else {
        if (cmd.expression.empty()) throw UsageError("missing operator expression");
        if (cmd.factors.empty()) throw UsageError("verify needs at least one --factor");
        residual = expression_residual(cmd, cmd.truncation.value_or(default_truncation));
    }
    const bool zero = residual.is_zero();
    if (cmd.format == "text") {
        out << "residual: " << print_operator(residual) << "\n"
            << "residual_zero: " << (zero ? "true" : "false") << "\n";
        return 0;
    }
    Json j{{"residual", operator_to_json(residual)},
           {"text", print_operator(residual)},
           {"residual_zero", zero}};
    out << j.dump(2) << "\n";
    return 0;
}

int diagram(const Command& cmd, std::ostream& out) {
    const WeylOperator l = load_input(cmd).op;
    require_nonzero(l);
    const AdmissiblePolygon d = operator_polygon(l);
    if (cmd.format == "json") {
        Json support = Json::array();
        for (const auto& entry : l.terms()) {
            support.push_back(Json::array({entry.first.i, entry.first.j}));
        }
        out << Json{{"polygon", polygon_to_json(d)}, {"support", support}}.dump(2) << "\n";
        return 0;
    }
    int top = d.breakpoints().back().j;
    for (const auto& entry : l.terms()) top = std::max(top, entry.first.j);
    const int width = d.width();
    const int label = static_cast<int>(std::to_string(top).size());
    for (int j = top; j >= 0; --j) {
        std::string row = std::to_string(j);
        out << std::string(static_cast<std::size_t>(label) - row.size(), ' ') << row << " |";
        for (int i = 0; i <= width; ++i) {
            LatticePoint pt{i, j};
            bool bp = std::find(d.breakpoints().begin(), d.breakpoints().end(), pt) != d.breakpoints().end();
            char c = bp ? '#' : (l.terms().count(pt) ? '*' : '.');
            out << ' ' << c;
        }
        out << "\n";
    }
    out << std::string(static_cast<std::size_t>(label), ' ') << " +" << std::string(2 * width + 2, '-') << "\n";
    out << std::string(static_cast<std::size_t>(label), ' ') << "  ";
    for (int i = 0; i <= width; ++i) out << ' ' << (i % 10);
    out << "\n";
    return 0;
}

}  // namespace

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
    try {
        if (cmd.truncation && *cmd.truncation < 1) {
            throw UsageError("truncation must be at least 1");
        }
        if (cmd.format != "json" && cmd.format != "text") {
            throw UsageError("unknown format '" + cmd.format + "'");
        }
        if (cmd.verb == "analyze") return analyze(cmd, out);
        if (cmd.verb == "factor") return factor(cmd, out);
        if (cmd.verb == "verify") return verify(cmd, out);
        if (cmd.verb == "diagram") return diagram(cmd, out);
        throw UsageError("unknown command '" + cmd.verb + "'");
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "error: malformed operator JSON: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace weylfact
