#include "powerderiv/checks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "powerderiv/closed_form.hpp"
#include "powerderiv/evaluator.hpp"
#include "powerderiv/render.hpp"
#include "powerderiv/triangle.hpp"

namespace powerderiv {

namespace {

constexpr std::array<Family, 4> kFamilies{Family::Sin, Family::Cos, Family::Sinh, Family::Cosh};

struct GoldenRow {
    Family family;
    unsigned k;
    const char* intermediate;
    const char* final;
};

// Published result tables for k = 0..6, in the text rendering (exponent
// braces flattened to parentheses, whitespace normalized).
const GoldenRow kGoldenRows[] = {
    {Family::Sin, 0, "sin^(n-0)(x) [1]", "sin^(n-0)(x) [1]"},
    {Family::Sin, 1, "sin^(n-1)(x) [n cos(x)]", "sin^(n-1)(x) cos(x) [n]"},
    {Family::Sin, 2, "sin^(n-2)(x) [n^2 cos^2(x) - n]",
     "-sin^(n-2)(x) [n^2 sin^2(x) + (-n^2 + n)]"},
    {Family::Sin, 3, "sin^(n-3)(x) [n^3 cos^3(x) + (-3 n^2 + 2 n) cos(x)]",
     "-sin^(n-3)(x) cos(x) [n^3 sin^2(x) + (-n^3 + 3 n^2 - 2 n)]"},
    {Family::Sin, 4,
     "sin^(n-4)(x) [n^4 cos^4(x) + (-6 n^3 + 8 n^2 - 4 n) cos^2(x) + (3 n^2 - 2 n)]",
     "sin^(n-4)(x) [n^4 sin^4(x) + (-2 n^4 + 6 n^3 - 8 n^2 + 4 n) sin^2(x) + (n^4 - 6 n^3 + 11 "
     "n^2 - 6 n)]"},
    {Family::Sin, 5,
     "sin^(n-5)(x) [n^5 cos^5(x) + (-10 n^4 + 20 n^3 - 20 n^2 + 8 n) cos^3(x) + (15 n^3 - 30 "
     "n^2 + 16 n) cos(x)]",
     "sin^(n-5)(x) cos(x) [n^5 sin^4(x) + (-2 n^5 + 10 n^4 - 20 n^3 + 20 n^2 - 8 n) sin^2(x) + "
     "(n^5 - 10 n^4 + 35 n^3 - 50 n^2 + 24 n)]"},
    {Family::Sin, 6,
     "sin^(n-6)(x) [n^6 cos^6(x) + (-15 n^5 + 40 n^4 - 60 n^3 + 48 n^2 - 16 n) cos^4(x) + (45 "
     "n^4 - 150 n^3 + 196 n^2 - 88 n) cos^2(x) + (-15 n^3 + 30 n^2 - 16 n)]",
     "-sin^(n-6)(x) [n^6 sin^6(x) + (-3 n^6 + 15 n^5 - 40 n^4 + 60 n^3 - 48 n^2 + 16 n) "
     "sin^4(x) + (3 n^6 - 30 n^5 + 125 n^4 - 270 n^3 + 292 n^2 - 120 n) sin^2(x) + (-n^6 + 15 "
     "n^5 - 85 n^4 + 225 n^3 - 274 n^2 + 120 n)]"},

    {Family::Cos, 0, "cos^(n-0)(x) [1]", "cos^(n-0)(x) [1]"},
    {Family::Cos, 1, "-cos^(n-1)(x) [n sin(x)]", "-cos^(n-1)(x) sin(x) [n]"},
    {Family::Cos, 2, "cos^(n-2)(x) [n^2 sin^2(x) - n]",
     "-cos^(n-2)(x) [n^2 cos^2(x) + (-n^2 + n)]"},
    {Family::Cos, 3, "-cos^(n-3)(x) [n^3 sin^3(x) + (-3 n^2 + 2 n) sin(x)]",
     "cos^(n-3)(x) sin(x) [n^3 cos^2(x) + (-n^3 + 3 n^2 - 2 n)]"},
    {Family::Cos, 4,
     "cos^(n-4)(x) [n^4 sin^4(x) + (-6 n^3 + 8 n^2 - 4 n) sin^2(x) + (3 n^2 - 2 n)]",
     "cos^(n-4)(x) [n^4 cos^4(x) + (-2 n^4 + 6 n^3 - 8 n^2 + 4 n) cos^2(x) + (n^4 - 6 n^3 + 11 "
     "n^2 - 6 n)]"},
    {Family::Cos, 5,
     "-cos^(n-5)(x) [n^5 sin^5(x) + (-10 n^4 + 20 n^3 - 20 n^2 + 8 n) sin^3(x) + (15 n^3 - 30 "
     "n^2 + 16 n) sin(x)]",
     "-cos^(n-5)(x) sin(x) [n^5 cos^4(x) + (-2 n^5 + 10 n^4 - 20 n^3 + 20 n^2 - 8 n) cos^2(x) "
     "+ (n^5 - 10 n^4 + 35 n^3 - 50 n^2 + 24 n)]"},
    {Family::Cos, 6,
     "cos^(n-6)(x) [n^6 sin^6(x) + (-15 n^5 + 40 n^4 - 60 n^3 + 48 n^2 - 16 n) sin^4(x) + (45 "
     "n^4 - 150 n^3 + 196 n^2 - 88 n) sin^2(x) + (-15 n^3 + 30 n^2 - 16 n)]",
     "-cos^(n-6)(x) [n^6 cos^6(x) + (-3 n^6 + 15 n^5 - 40 n^4 + 60 n^3 - 48 n^2 + 16 n) "
     "cos^4(x) + (3 n^6 - 30 n^5 + 125 n^4 - 270 n^3 + 292 n^2 - 120 n) cos^2(x) + (-n^6 + 15 "
     "n^5 - 85 n^4 + 225 n^3 - 274 n^2 + 120 n)]"},

    {Family::Sinh, 0, "sinh^(n-0)(x) [1]", "sinh^(n-0)(x) [1]"},
    {Family::Sinh, 1, "sinh^(n-1)(x) [n cosh(x)]", "sinh^(n-1)(x) cosh(x) [n]"},
    {Family::Sinh, 2, "sinh^(n-2)(x) [n^2 cosh^2(x) - n]",
     "sinh^(n-2)(x) [n^2 sinh^2(x) + (n^2 - n)]"},
    {Family::Sinh, 3, "sinh^(n-3)(x) [n^3 cosh^3(x) + (-3 n^2 + 2 n) cosh(x)]",
     "sinh^(n-3)(x) cosh(x) [n^3 sinh^2(x) + (n^3 - 3 n^2 + 2 n)]"},
    {Family::Sinh, 4,
     "sinh^(n-4)(x) [n^4 cosh^4(x) + (-6 n^3 + 8 n^2 - 4 n) cosh^2(x) + (3 n^2 - 2 n)]",
     "sinh^(n-4)(x) [n^4 sinh^4(x) + (2 n^4 - 6 n^3 + 8 n^2 - 4 n) sinh^2(x) + (n^4 - 6 n^3 + "
     "11 n^2 - 6 n)]"},
    {Family::Sinh, 5,
     "sinh^(n-5)(x) [n^5 cosh^5(x) + (-10 n^4 + 20 n^3 - 20 n^2 + 8 n) cosh^3(x) + (15 n^3 - "
     "30 n^2 + 16 n) cosh(x)]",
     "sinh^(n-5)(x) cosh(x) [n^5 sinh^4(x) + (2 n^5 - 10 n^4 + 20 n^3 - 20 n^2 + 8 n) "
     "sinh^2(x) + (n^5 - 10 n^4 + 35 n^3 - 50 n^2 + 24 n)]"},
    {Family::Sinh, 6,
     "sinh^(n-6)(x) [n^6 cosh^6(x) + (-15 n^5 + 40 n^4 - 60 n^3 + 48 n^2 - 16 n) cosh^4(x) + "
     "(45 n^4 - 150 n^3 + 196 n^2 - 88 n) cosh^2(x) + (-15 n^3 + 30 n^2 - 16 n)]",
     "sinh^(n-6)(x) [n^6 sinh^6(x) + (3 n^6 - 15 n^5 + 40 n^4 - 60 n^3 + 48 n^2 - 16 n) "
     "sinh^4(x) + (3 n^6 - 30 n^5 + 125 n^4 - 270 n^3 + 292 n^2 - 120 n) sinh^2(x) + (n^6 - 15 "
     "n^5 + 85 n^4 - 225 n^3 + 274 n^2 - 120 n)]"},

    {Family::Cosh, 0, "cosh^(n-0)(x) [1]", "cosh^(n-0)(x) [1]"},
    {Family::Cosh, 1, "cosh^(n-1)(x) [n sinh(x)]", "cosh^(n-1)(x) sinh(x) [n]"},
    {Family::Cosh, 2, "cosh^(n-2)(x) [n^2 sinh^2(x) + n]",
     "cosh^(n-2)(x) [n^2 cosh^2(x) + (-n^2 + n)]"},
    {Family::Cosh, 3, "cosh^(n-3)(x) [n^3 sinh^3(x) + (3 n^2 - 2 n) sinh(x)]",
     "cosh^(n-3)(x) sinh(x) [n^3 cosh^2(x) + (-n^3 + 3 n^2 - 2 n)]"},
    {Family::Cosh, 4,
     "cosh^(n-4)(x) [n^4 sinh^4(x) + (6 n^3 - 8 n^2 + 4 n) sinh^2(x) + (3 n^2 - 2 n)]",
     "cosh^(n-4)(x) [n^4 cosh^4(x) + (-2 n^4 + 6 n^3 - 8 n^2 + 4 n) cosh^2(x) + (n^4 - 6 n^3 + "
     "11 n^2 - 6 n)]"},
    {Family::Cosh, 5,
     "cosh^(n-5)(x) [n^5 sinh^5(x) + (10 n^4 - 20 n^3 + 20 n^2 - 8 n) sinh^3(x) + (15 n^3 - 30 "
     "n^2 + 16 n) sinh(x)]",
     "cosh^(n-5)(x) sinh(x) [n^5 cosh^4(x) + (-2 n^5 + 10 n^4 - 20 n^3 + 20 n^2 - 8 n) "
     "cosh^2(x) + (n^5 - 10 n^4 + 35 n^3 - 50 n^2 + 24 n)]"},
    {Family::Cosh, 6,
     "cosh^(n-6)(x) [n^6 sinh^6(x) + (15 n^5 - 40 n^4 + 60 n^3 - 48 n^2 + 16 n) sinh^4(x) + "
     "(45 n^4 - 150 n^3 + 196 n^2 - 88 n) sinh^2(x) + (15 n^3 - 30 n^2 + 16 n)]",
     "cosh^(n-6)(x) [n^6 cosh^6(x) + (-3 n^6 + 15 n^5 - 40 n^4 + 60 n^3 - 48 n^2 + 16 n) "
     "cosh^4(x) + (3 n^6 - 30 n^5 + 125 n^4 - 270 n^3 + 292 n^2 - 120 n) cosh^2(x) + (-n^6 + "
     "15 n^5 - 85 n^4 + 225 n^3 - 274 n^2 + 120 n)]"},
};

std::string cell_id(Family family, double n, unsigned k, std::complex<double> x) {
    std::ostringstream out;
    out << family_name(family) << " n=" << n << " k=" << k << " x=" << x.real();
    if (x.imag() != 0.0) out << (x.imag() > 0 ? "+" : "") << x.imag() << "i";
    return out.str();
}

CheckResult make_result(const std::string& name, const std::vector<std::string>& failures,
                        const std::string& success_detail) {
    CheckResult r;
    r.name = name;
    r.passed = failures.empty();
    if (r.passed) {
        r.detail = success_detail;
    } else {
        std::ostringstream out;
        out << failures.size() << " failure(s): ";
        for (std::size_t i = 0; i < failures.size() && i < 4; ++i) {
            if (i) out << "; ";
            out << failures[i];
        }
        if (failures.size() > 4) out << "; ...";
        r.detail = out.str();
    }
    return r;
}

bool is_plus_minus_monomial(const NPoly& p, unsigned power, int sign) {
    return p == NPoly::monomial(Int(sign), power);
}

}  // namespace

double relative_deviation(std::complex<double> a, std::complex<double> b) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) / scale;
}

const std::vector<double>& real_grid() {
    static const std::vector<double> grid{-1.7, -0.9, -0.3, 0.1, 0.3, 0.9, 1.7};
    return grid;
}

const std::vector<std::complex<double>>& complex_points() {
    static const std::vector<std::complex<double>> points{{0.3, 0.4}, {-1.0, 0.25}};
    return points;
}

std::vector<double> pole_free_grid(Family family) {
    switch (family) {
        case Family::Sin:
        case Family::Sinh: return {-1.7, -0.9, 0.9, 1.7};
        case Family::Cos: return {-0.9, -0.3, 0.1, 0.3, 0.9};
        case Family::Cosh: return real_grid();
    }
    return {};
}

CheckResult check_golden_tables() {
    std::vector<std::string> failures;
    unsigned compared = 0;
    for (const GoldenRow& row : kGoldenRows) {
        for (const Form form : {Form::Intermediate, Form::Final}) {
            const char* expected = form == Form::Intermediate ? row.intermediate : row.final;
            const auto expr = build_expression(row.family, row.k, form);
            const std::string got = normalize_whitespace(render_expression(expr));
            ++compared;
            if (got != normalize_whitespace(expected))
                failures.push_back(std::string(family_name(row.family)) + " k=" +
                                   std::to_string(row.k) + " " +
                                   form_name(form == Form::Final) + ": got \"" + got + "\"");
        }
    }
    return make_result("golden-tables", failures,
                       std::to_string(compared) + " renderings compared");
}

CheckResult check_structure(unsigned max_k) {
    std::vector<std::string> failures;
    auto fail = [&](unsigned k, const std::string& what) {
        failures.push_back("k=" + std::to_string(k) + ": " + what);
    };

    for (unsigned k = 0; k <= max_k; ++k) {
        for (const SequenceTag tag : {SequenceTag::F, SequenceTag::G, SequenceTag::H}) {
            const UPoly& p = intermediate_poly(tag, k);
            if (p.degree() != static_cast<int>(k)) fail(k, "intermediate degree != k");
            const int lead_sign = (tag == SequenceTag::G && k % 2 == 1) ? -1 : 1;
            if (!is_plus_minus_monomial(p.coeff(k), k, lead_sign))
                fail(k, "intermediate leading coefficient is not (+-1)n^k");
            for (const auto& [power, coeff] : p.terms()) {
                if (power % 2 != k % 2) fail(k, "power parity broken");
                if (coeff.degree() != static_cast<int>((k + power) / 2))
                    fail(k, "coefficient rank != (k+r)/2");
                if (k >= 1 && coeff.eval(Int(0)) != 0)
                    fail(k, "coefficient does not vanish at n=0");
            }
            if (intermediate_poly_direct(tag, k) != p) fail(k, "cached entry != recurrence");
        }

        // sign identities through independent recurrence walks
        const UPoly f_direct = intermediate_poly_direct(SequenceTag::F, k);
        const UPoly g_direct = intermediate_poly_direct(SequenceTag::G, k);
        if (g_direct != (k % 2 == 0 ? f_direct : -f_direct)) fail(k, "g_k != (-1)^k f_k");

        const UPoly s_k = final_poly(Family::Sin, k);
        const UPoly c_k = final_poly(Family::Cos, k);
        if (c_k != (k % 2 == 0 ? s_k : -s_k)) fail(k, "c_k != (-1)^k s_k");

        for (const Family family : kFamilies) {
            const UPoly fin = final_poly(family, k);
            const unsigned expected_degree = k % 2 == 0 ? k : k - 1;
            if (fin.degree() != static_cast<int>(expected_degree))
                fail(k, "final degree != k (even) / k-1 (odd)");
            int sign = 1;
            if (family == Family::Sin) sign = (k % 4 == 0 || k % 4 == 1) ? 1 : -1;
            if (family == Family::Cos) sign = (k % 4 == 0 || k % 4 == 3) ? 1 : -1;
            if (!is_plus_minus_monomial(fin.coeff(expected_degree), k, sign))
                fail(k, std::string(family_name(family)) +
                            " final leading coefficient sign rule broken");
            for (const auto& [power, coeff] : fin.terms()) {
                if (power % 2 != 0) fail(k, "final polynomial has an odd power");
                if (k >= 1 && coeff.eval(Int(0)) != 0)
                    fail(k, "final coefficient does not vanish at n=0");
            }

            // substituting the inverse quadratic recovers the intermediate
            const FamilyTraits& t = traits(family);
            const UPoly& inter = intermediate_poly(t.tag, k);
            const UPoly expected = k % 2 == 0 ? inter : inter.div_by_var();
            if (fin.substitute_even(t.inverse_substitution) != expected)
                fail(k, std::string(family_name(family)) + " substitution round trip broken");
        }
    }
    return make_result("structure-properties", failures,
                       "k <= " + std::to_string(max_k) + ", all exact");
}

CheckResult check_threeway(unsigned max_n, unsigned max_k, double tolerance,
                           std::optional<unsigned> seed) {
    std::vector<std::string> failures;
    double worst = 0.0;
    unsigned cells = 0;

    std::vector<std::complex<double>> points;
    for (double x : real_grid()) points.emplace_back(x, 0.0);
    for (const auto& z : complex_points()) points.push_back(z);

    auto run_cell = [&](Family family, unsigned n, unsigned k, std::complex<double> x,
                        const DerivativeExpression& fin, const DerivativeExpression& inter) {
        const auto value_final = evaluate(fin, n, x);
        const auto value_inter = evaluate(inter, n, x);
        const auto value_binom = binomial_derivative(family, n, k, x);
        const double dev =
            std::max(relative_deviation(value_final, value_inter),
                     relative_deviation(value_final, value_binom));
        worst = std::max(worst, dev);
        ++cells;
        if (dev > tolerance)
            failures.push_back(cell_id(family, n, k, x) + " deviation " + std::to_string(dev));
        const bool trig = family == Family::Sin || family == Family::Cos;
        if (trig && x.imag() == 0.0) {
            const double residue =
                std::abs(value_binom.imag()) / (1.0 + std::abs(value_binom.real()));
            if (residue > tolerance)
                failures.push_back(cell_id(family, n, k, x) + " imaginary residue " +
                                   std::to_string(residue));
        }
    };

    for (const Family family : kFamilies)
        for (unsigned k = 0; k <= max_k; ++k) {
            const auto fin = build_expression(family, k, Form::Final);
            const auto inter = build_expression(family, k, Form::Intermediate);
            for (unsigned n = 0; n <= max_n; ++n)
                for (const auto& x : points) run_cell(family, n, k, x, fin, inter);
        }

    if (seed) {
        std::mt19937 rng(*seed);
        std::uniform_real_distribution<double> xdist(-2.0, 2.0);
        std::uniform_int_distribution<unsigned> ndist(0, max_n);
        std::uniform_int_distribution<unsigned> kdist(0, max_k);
        std::uniform_int_distribution<std::size_t> fdist(0, kFamilies.size() - 1);
        for (int i = 0; i < 10; ++i) {
            const Family family = kFamilies[fdist(rng)];
            const unsigned n = ndist(rng);
            const unsigned k = kdist(rng);
            double x = xdist(rng);
            while (std::abs(base_value(family, x)) < 0.05) x = xdist(rng);
            run_cell(family, n, k, x, build_expression(family, k, Form::Final),
                     build_expression(family, k, Form::Intermediate));
        }
    }

    std::ostringstream ok;
    ok << cells << " cells, worst deviation " << worst;
    return make_result("three-way-evaluation", failures, ok.str());
}

CheckResult check_numeric_oracle(unsigned max_n) {
    std::vector<std::string> failures;
    double worst = 0.0;
    unsigned cells = 0;

    auto run = [&](Family family, double n, unsigned k, double x) {
        const double tol = k <= 4 ? 1e-5 : 1e-3;
        const auto expr = build_expression(family, k, Form::Final);
        const auto exact = evaluate(expr, n, {x, 0.0});
        const double approx = finite_difference(family, n, k, x, default_fd_step(k));
        const double dev = relative_deviation(exact, {approx, 0.0});
        worst = std::max(worst, dev);
        ++cells;
        if (dev > tol)
            failures.push_back(cell_id(family, n, k, {x, 0.0}) + " deviation " +
                               std::to_string(dev));
    };

    for (const Family family : kFamilies)
        for (unsigned k = 0; k <= 6; ++k) {
            for (unsigned n = 0; n <= max_n; ++n)
                for (double x : real_grid()) run(family, n, k, x);
            for (long long n : {-1ll, -2ll})
                for (double x : pole_free_grid(family)) run(family, double(n), k, x);
        }
    for (unsigned k = 0; k <= 6; ++k)
        for (double x : real_grid()) run(Family::Cosh, 2.5, k, x);

    std::ostringstream ok;
    ok << cells << " cells, worst deviation " << worst;
    return make_result("numeric-oracle", failures, ok.str());
}

CheckResult check_triangle(unsigned max_k) {
    std::vector<std::string> failures;
    const TriangleReport report = verify_triangle(max_k);
    if (!report.extraction_matches_product || !report.computed_matches_closed)
        for (const auto& m : report.mismatches) failures.push_back(m);

    // The published display must disagree with the exact product in exactly
    // one place: the final entry of display row 4.
    const std::vector<Int> row3 = product_matrix_row(3);
    const std::vector<Int> expected_row3{4, 6, 8, 4};
    if (row3 != expected_row3)
        failures.push_back("product row 3 is " + format_row(row3) + ", expected " +
                           format_row(expected_row3));
    if (report.display_notes.size() != 1 ||
        report.display_notes.front().find("display row 4") == std::string::npos)
        failures.push_back("expected exactly one display discrepancy, at display row 4; got " +
                           std::to_string(report.display_notes.size()));

    return make_result("triangle", failures,
                       "rows 2..=" + std::to_string(max_k) +
                           " consistent; display row 4 discrepancy reported");
}

CheckResult check_conventions() {
    std::vector<std::string> failures;
    const std::vector<std::complex<double>> points{{0.7, 0.0}, {-1.2, 0.0}, {0.3, 0.4}};

    for (const auto& x : points) {
        if (exp_power_derivative(0, 0, x) != std::complex<double>{1.0, 0.0})
            failures.push_back("exp_power_derivative(0,0,x) != 1");
        for (const Family family : kFamilies) {
            const auto expr = build_expression(family, 0, Form::Final);
            if (evaluate(expr, 0.0, x) != std::complex<double>{1.0, 0.0})
                failures.push_back(std::string(family_name(family)) + ": power 0, k=0 != 1");
            if (binomial_derivative(family, 0, 0, x) != std::complex<double>{1.0, 0.0})
                failures.push_back(std::string(family_name(family)) + ": binomial 0,0 != 1");
        }
    }

    for (const Family family : kFamilies)
        for (unsigned k = 1; k <= 8; ++k)
            for (const auto& x : points) {
                for (const Form form : {Form::Final, Form::Intermediate}) {
                    const auto expr = build_expression(family, k, form);
                    if (evaluate(expr, 0.0, x) != std::complex<double>{0.0, 0.0})
                        failures.push_back(std::string(family_name(family)) + " k=" +
                                           std::to_string(k) + ": n=0 derivative != 0");
                }
                if (binomial_derivative(family, 0, k, x) != std::complex<double>{0.0, 0.0})
                    failures.push_back(std::string(family_name(family)) + " k=" +
                                       std::to_string(k) + ": binomial n=0 != 0");
                const auto spec = specialize(family, k, 0);
                if (!spec.poly_v.empty() || spec.reduced_exponent != 0 ||
                    evaluate(spec, x) != std::complex<double>{0.0, 0.0})
                    failures.push_back(std::string(family_name(family)) + " k=" +
                                       std::to_string(k) + ": specialized n=0 != 0");
                if (k <= 6 && x.imag() == 0.0 &&
                    finite_difference(family, 0.0, k, x.real(), default_fd_step(k)) != 0.0)
                    failures.push_back(std::string(family_name(family)) + " k=" +
                                       std::to_string(k) + ": fd n=0 != 0");
            }

    return make_result("conventions", failures, "0^0 = 1 and zero-power derivatives exact");
}

CheckResult check_specialization(unsigned max_n, unsigned max_k) {
    std::vector<std::string> failures;
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> xdist(-2.0, 2.0);
    double worst = 0.0;

    for (const Family family : kFamilies)
        for (unsigned k = 0; k <= max_k; ++k) {
            const auto expr = build_expression(family, k, Form::Final);
            for (unsigned n = 0; n <= max_n; ++n) {
                const auto spec = specialize(family, k, n);
                if (spec.reduced_exponent < 0) {
                    failures.push_back(cell_id(family, n, k, {0, 0}) +
                                       " negative reduced exponent");
                    continue;
                }
                for (int i = 0; i < 20; ++i) {
                    double x = xdist(rng);
                    while (std::abs(base_value(family, x)) < 0.05) x = xdist(rng);
                    const auto a = evaluate(spec, {x, 0.0});
                    const auto b = evaluate(expr, n, {x, 0.0});
                    const double dev = relative_deviation(a, b);
                    worst = std::max(worst, dev);
                    if (dev > 1e-12)
                        failures.push_back(cell_id(family, n, k, {x, 0.0}) + " deviation " +
                                           std::to_string(dev));
                }
            }
        }

    std::ostringstream ok;
    ok << "worst deviation " << worst;
    return make_result("specialization", failures, ok.str());
}

std::vector<CheckResult> run_all_checks(const CheckOptions& options) {
    std::vector<CheckResult> results;
    results.push_back(check_golden_tables());
    results.push_back(check_structure(options.structure_max_k));
    results.push_back(check_threeway(options.eval_max_n, options.eval_max_k,
                                     options.threeway_tolerance, options.seed));
    results.push_back(check_numeric_oracle(options.eval_max_n));
    results.push_back(check_triangle(std::max(options.triangle_max_k, 2u)));
    results.push_back(check_conventions());
    results.push_back(check_specialization(options.eval_max_n, options.specialization_max_k));
    return results;
}

}  // namespace powerderiv
