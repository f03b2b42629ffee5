#include "powerderiv/render.hpp"

#include <sstream>

#include <json.hpp>

namespace powerderiv {

namespace {

std::string monomial_text(const Int& magnitude, std::size_t power, bool latex) {
    std::ostringstream out;
    if (power == 0) {
        out << magnitude;
        return out.str();
    }
    if (magnitude != 1) out << magnitude << " ";
    out << "n";
    if (power > 1) out << (latex ? "^{" : "^") << power << (latex ? "}" : "");
    return out.str();
}

std::string npoly_text_impl(const NPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto power = static_cast<std::size_t>(p.degree());; --power) {
        const Int& c = p.coeff(power);
        if (c != 0) {
            const bool negative = c < 0;
            const std::string body = monomial_text(abs(c), power, latex);
            if (first) {
                out << (negative ? "-" : "") << body;
                first = false;
            } else {
                out << (negative ? " - " : " + ") << body;
            }
        }
        if (power == 0) break;
    }
    return out.str();
}

std::string var_text(const std::string& var, std::size_t power, bool latex) {
    if (power == 0) return "";
    std::ostringstream out;
    if (latex) out << "\\";
    out << var;
    if (power > 1) out << (latex ? "^{" : "^") << power << (latex ? "}" : "");
    out << "(x)";
    return out.str();
}

// True when the coefficient occupies a single power of n.
bool is_monomial(const NPoly& p, Int& coefficient, std::size_t& power) {
    if (p.is_zero()) return false;
    int found = -1;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeff(i) == 0) continue;
        if (found >= 0) return false;
        found = static_cast<int>(i);
    }
    coefficient = p.coeff(static_cast<std::size_t>(found));
    power = static_cast<std::size_t>(found);
    return true;
}

std::string bracket_text(const UPoly& poly, const std::string& var, bool latex) {
    if (poly.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
        const auto& [power, coeff] = *it;
        const std::string varpart = var_text(var, power, latex);
        Int mono_c;
        std::size_t mono_p = 0;
        if (is_monomial(coeff, mono_c, mono_p)) {
            const bool negative = mono_c < 0;
            std::string body = monomial_text(abs(mono_c), mono_p, latex);
            std::string piece;
            if (body == "1" && !varpart.empty())
                piece = varpart;
            else
                piece = body + (varpart.empty() ? "" : " " + varpart);
            if (first)
                out << (negative ? "-" : "") << piece;
            else
                out << (negative ? " - " : " + ") << piece;
        } else {
            if (!first) out << " + ";
            out << "(" << npoly_text_impl(coeff, latex) << ")";
            if (!varpart.empty()) out << " " << varpart;
        }
        first = false;
    }
    return out.str();
}

}  // namespace

std::string npoly_text(const NPoly& p) { return npoly_text_impl(p, false); }

std::string render_expression(const DerivativeExpression& expr, const RenderOptions& opts) {
    if (opts.format == RenderFormat::Json) return render_json(expr);
    const bool latex = opts.format == RenderFormat::Latex;
    const FamilyTraits& t = traits(expr.family);
    const std::string var = expr.form == Form::Final ? t.base_name : t.co_name;

    UPoly poly = expr.poly;
    bool factored = false;
    if (opts.factor_minus_one && !poly.is_zero()) {
        const NPoly lead = poly.coeff(static_cast<std::size_t>(poly.degree()));
        if (lead.leading() == -1) {
            poly = -poly;
            factored = true;
        }
    }

    std::ostringstream out;
    if (factored) out << "-";
    if (latex) out << "\\";
    out << t.base_name << (latex ? "^{n-" : "^(n-") << expr.k << (latex ? "}" : ")") << "(x)";
    if (expr.cofactor_present) out << " " << var_text(t.co_name, 1, latex);
    out << (latex ? " \\bigl[" : " [") << bracket_text(poly, var, latex)
        << (latex ? "\\bigr]" : "]");
    return out.str();
}

std::string render_json(const DerivativeExpression& expr) {
    nlohmann::ordered_json doc;
    doc["family"] = family_name(expr.family);
    doc["k"] = expr.k;
    doc["form"] = form_name(expr.form == Form::Final);
    doc["cofactor"] = expr.cofactor_present;
    auto terms = nlohmann::ordered_json::array();
    for (auto it = expr.poly.terms().rbegin(); it != expr.poly.terms().rend(); ++it) {
        nlohmann::ordered_json term;
        term["power"] = it->first;
        auto coeffs = nlohmann::ordered_json::array();
        for (const Int& c : it->second.coeffs()) coeffs.push_back(c.str());
        term["coeff_n"] = std::move(coeffs);
        terms.push_back(std::move(term));
    }
    doc["terms"] = std::move(terms);
    return doc.dump();
}

DerivativeExpression expression_from_json(const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    DerivativeExpression expr;
    const auto family = family_from_name(doc.at("family").get<std::string>());
    if (!family) throw std::invalid_argument("unknown family in JSON document");
    expr.family = *family;
    expr.k = doc.at("k").get<unsigned>();
    expr.form = doc.at("form").get<std::string>() == "final" ? Form::Final : Form::Intermediate;
    expr.cofactor_present = doc.at("cofactor").get<bool>();
    UPoly poly;
    for (const auto& term : doc.at("terms")) {
        std::vector<Int> coeffs;
        for (const auto& c : term.at("coeff_n")) coeffs.emplace_back(c.get<std::string>());
        poly = poly + UPoly::monomial(NPoly(std::move(coeffs)), term.at("power").get<std::size_t>());
    }
    expr.poly = std::move(poly);
    return expr;
}

std::string normalize_whitespace(const std::string& s) {
    std::string out;
    bool in_space = true;  // trims leading whitespace
    for (char ch : s) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
            if (!in_space) out.push_back(' ');
            in_space = true;
        } else {
            out.push_back(ch);
            in_space = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

}  // namespace powerderiv
