#include <complex>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "powerderiv/checks.hpp"
#include "powerderiv/closed_form.hpp"
#include "powerderiv/evaluator.hpp"
#include "powerderiv/render.hpp"
#include "powerderiv/triangle.hpp"

namespace {

using namespace powerderiv;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // check failure or domain error
constexpr int kExitUsage = 2;

constexpr unsigned kDefaultKLimit = 64;

std::string format_value(std::complex<double> v) {
    char buf[64];
    if (v.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.17g", v.real());
        return buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", v.real(), v.imag());
    return buf;
}

bool parse_complex(const std::string& text, std::complex<double>& out) {
    try {
        std::size_t pos = 0;
        const double re = std::stod(text, &pos);
        if (pos == text.size()) {
            out = {re, 0.0};
            return true;
        }
        if (text[pos] != ',') return false;
        std::size_t pos2 = 0;
        const std::string rest = text.substr(pos + 1);
        const double im = std::stod(rest, &pos2);
        if (pos2 != rest.size()) return false;
        out = {re, im};
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

struct PolyArgs {
    std::string family = "sin";
    unsigned k = 0;
    std::string form = "final";
    std::string format = "text";
    bool no_factor = false;
    bool allow_large_k = false;
};

int run_poly(const PolyArgs& args) {
    const auto family = family_from_name(args.family);
    if (!family) {
        std::cerr << "unknown family: " << args.family << "\n";
        return kExitUsage;
    }
    if (args.k > kDefaultKLimit && !args.allow_large_k) {
        std::cerr << "k > " << kDefaultKLimit << " needs --allow-large-k\n";
        return kExitUsage;
    }
    const Form form = args.form == "final" ? Form::Final : Form::Intermediate;
    const auto expr = build_expression(*family, args.k, form);
    RenderOptions opts;
    opts.factor_minus_one = !args.no_factor;
    if (args.format == "text")
        opts.format = RenderFormat::Text;
    else if (args.format == "latex")
        opts.format = RenderFormat::Latex;
    else
        opts.format = RenderFormat::Json;
    std::cout << render_expression(expr, opts) << "\n";
    return kExitOk;
}

struct EvalArgs {
    std::string family = "sin";
    double n = 1.0;
    unsigned k = 0;
    std::string x = "0";
    std::string method = "final";
};

int run_eval(const EvalArgs& args) {
    const auto family = family_from_name(args.family);
    std::complex<double> x;
    if (!family || !parse_complex(args.x, x)) {
        std::cerr << (family ? "bad --x value: " + args.x : "unknown family: " + args.family)
                  << "\n";
        return kExitUsage;
    }

    const bool integer_n = std::nearbyint(args.n) == args.n;
    try {
        std::vector<std::pair<std::string, std::complex<double>>> values;
        const bool want_all = args.method == "all";
        if (want_all || args.method == "final")
            values.emplace_back("final",
                                evaluate(build_expression(*family, args.k, Form::Final), args.n, x));
        if (want_all || args.method == "intermediate")
            values.emplace_back(
                "intermediate",
                evaluate(build_expression(*family, args.k, Form::Intermediate), args.n, x));
        if (args.method == "binomial" || (want_all && integer_n && args.n >= 0)) {
            if (!integer_n) throw std::domain_error("binomial method needs an integer n >= 0");
            values.emplace_back("binomial",
                                binomial_derivative(*family, static_cast<long long>(args.n),
                                                    args.k, x));
        }
        if (args.method == "fd" || (want_all && x.imag() == 0.0 && args.k <= 6)) {
            if (x.imag() != 0.0) throw std::domain_error("fd method needs a real x");
            values.emplace_back("fd", finite_difference(*family, args.n, args.k, x.real(),
                                                        default_fd_step(args.k)));
        }
        if (values.empty()) {
            std::cerr << "unknown method: " << args.method << "\n";
            return kExitUsage;
        }
        if (!want_all) {
            std::cout << format_value(values.front().second) << "\n";
            return kExitOk;
        }
        double max_dev = 0.0;
        for (const auto& [name, value] : values) {
            std::cout << name << ": " << format_value(value) << "\n";
            for (const auto& [other_name, other] : values)
                max_dev = std::max(max_dev, relative_deviation(value, other));
        }
        std::cout << "max_deviation: " << max_dev << "\n";
        return kExitOk;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

struct CheckArgs {
    unsigned max_k = 25;
    unsigned max_n = 8;
    double tolerance = 1e-9;
    std::optional<unsigned> seed;
    bool inject_fault = false;
};

int run_check(const CheckArgs& args) {
    if (args.inject_fault) corrupt_cached_intermediate(SequenceTag::F, 2);

    CheckOptions options;
    options.structure_max_k = args.max_k;
    options.triangle_max_k = std::max(args.max_k, 2u);
    options.eval_max_n = args.max_n;
    options.threeway_tolerance = args.tolerance;
    options.seed = args.seed;

    const auto results = run_all_checks(options);
    unsigned passed = 0;
    for (const auto& r : results) {
        std::cout << (r.passed ? "ok   " : "FAIL ") << r.name << ": " << r.detail << "\n";
        if (r.passed) ++passed;
    }
    std::cout << "passed " << passed << "/" << results.size() << "\n";
    return passed == results.size() ? kExitOk : kExitFailure;
}

struct TriangleArgs {
    unsigned rows = 6;
    std::string format = "text";
};

int run_triangle(const TriangleArgs& args) {
    const auto& display = published_display_rows();
    bool all_match = true;

    nlohmann::ordered_json doc;
    auto json_rows = nlohmann::ordered_json::array();

    for (unsigned r = 0; r < args.rows; ++r) {
        const auto product = product_matrix_row(r);
        std::optional<std::vector<Int>> extracted;
        if (r >= 1) extracted = second_highest_coeffs(r + 1);
        bool match = true;
        if (extracted)
            match = std::equal(extracted->begin(), extracted->end(), product.begin() + 1,
                               product.end());
        all_match = all_match && match;

        std::string note;
        if (r < display.size() && product != display[r])
            note = "published display ends this row with " + display[r].back().str() +
                   "; the exact product gives " + product.back().str();

        if (args.format == "json") {
            nlohmann::ordered_json row;
            row["row"] = r + 1;
            auto to_strings = [](const std::vector<Int>& v) {
                auto arr = nlohmann::ordered_json::array();
                for (const Int& e : v) arr.push_back(e.str());
                return arr;
            };
            row["product"] = to_strings(product);
            if (extracted) row["extracted"] = to_strings(*extracted);
            row["match"] = match;
            if (!note.empty()) row["note"] = note;
            json_rows.push_back(std::move(row));
        } else {
            std::cout << "row " << r + 1 << ": product " << format_row(product);
            if (extracted)
                std::cout << "  extracted " << format_row(*extracted) << "  "
                          << (match ? "match" : "MISMATCH");
            if (!note.empty()) std::cout << "  note: " << note;
            std::cout << "\n";
        }
    }

    if (args.format == "json") {
        doc["rows"] = std::move(json_rows);
        doc["all_match"] = all_match;
        std::cout << doc.dump() << "\n";
    }
    return all_match ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact k-th derivatives of n-th powers of sin, cos, sinh, cosh"};
    app.require_subcommand(1);

    PolyArgs poly_args;
    auto* poly = app.add_subcommand("poly", "Render an intermediate or final polynomial expression");
    poly->add_option("--family", poly_args.family, "sin|cos|sinh|cosh")->required();
    poly->add_option("--k", poly_args.k, "derivative order")->required();
    poly->add_option("--form", poly_args.form)->check(CLI::IsMember({"intermediate", "final"}));
    poly->add_option("--format", poly_args.format)->check(CLI::IsMember({"text", "latex", "json"}));
    poly->add_flag("--no-factor-minus-one", poly_args.no_factor,
                   "keep the bracket polynomial as stored");
    poly->add_flag("--allow-large-k", poly_args.allow_large_k, "lift the default k <= 64 limit");

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Evaluate the k-th derivative of base^n at x");
    eval->add_option("--family", eval_args.family, "sin|cos|sinh|cosh")->required();
    eval->add_option("--n", eval_args.n, "exponent (integer or real)")->required();
    eval->add_option("--k", eval_args.k, "derivative order")->required();
    eval->add_option("--x", eval_args.x, "evaluation point RE or RE,IM")->required();
    eval->add_option("--method", eval_args.method)
        ->check(CLI::IsMember({"final", "intermediate", "binomial", "fd", "all"}));

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "Run the verification suite");
    check->add_option("--max-k", check_args.max_k, "structure/triangle depth");
    check->add_option("--max-n", check_args.max_n, "largest exponent in evaluation grids");
    check->add_option("--tolerance", check_args.tolerance, "three-way comparison tolerance");
    unsigned seed_value = 0;
    auto* seed_opt = check->add_option("--seed", seed_value, "adds randomized evaluation cells");
    check->add_flag("--inject-fault", check_args.inject_fault)->group("");  // test hook

    TriangleArgs triangle_args;
    auto* triangle = app.add_subcommand("triangle", "Print the coefficient triangle rows");
    triangle->add_option("--rows", triangle_args.rows, "number of rows")
        ->check(CLI::PositiveNumber);
    triangle->add_option("--format", triangle_args.format)
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (seed_opt->count() > 0) check_args.seed = seed_value;

    try {
        if (poly->parsed()) return run_poly(poly_args);
        if (eval->parsed()) return run_eval(eval_args);
        if (check->parsed()) return run_check(check_args);
        if (triangle->parsed()) return run_triangle(triangle_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
