#include "powerderiv/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace powerderiv {

namespace {

constexpr double kPoleThreshold = 1e-12;

std::complex<double> pow_integer(std::complex<double> base, long long e) {
    if (e < 0) return 1.0 / pow_integer(base, -e);
    std::complex<double> acc{1.0, 0.0};
    std::complex<double> b = base;
    auto ue = static_cast<unsigned long long>(e);
    while (ue != 0) {
        if (ue & 1ull) acc *= b;
        b *= b;
        ue >>= 1ull;
    }
    return acc;
}

bool is_integer(double v) { return std::isfinite(v) && std::nearbyint(v) == v; }

double real_base(Family family, double x) {
    switch (family) {
        case Family::Sin: return std::sin(x);
        case Family::Cos: return std::cos(x);
        case Family::Sinh: return std::sinh(x);
        case Family::Cosh: return std::cosh(x);
    }
    return 0.0;
}

// Distance from x to the nearest real zero of the base function;
// +infinity when there is none (cosh).
double distance_to_base_zero(Family family, double x) {
    constexpr double pi = std::numbers::pi;
    switch (family) {
        case Family::Sin: return std::abs(x - pi * std::round(x / pi));
        case Family::Cos: {
            const double shifted = x - pi / 2.0;
            return std::abs(shifted - pi * std::round(shifted / pi));
        }
        case Family::Sinh: return std::abs(x);
        case Family::Cosh: return std::numeric_limits<double>::infinity();
    }
    return 0.0;
}

struct StencilPoint {
    int offset;
    double weight;
};

// Second-order central stencils for the k-th derivative.
const std::vector<StencilPoint>& stencil(unsigned k) {
    static const std::vector<std::vector<StencilPoint>> table = {
        {{0, 1.0}},
        {{-1, -0.5}, {1, 0.5}},
        {{-1, 1.0}, {0, -2.0}, {1, 1.0}},
        {{-2, -0.5}, {-1, 1.0}, {1, -1.0}, {2, 0.5}},
        {{-2, 1.0}, {-1, -4.0}, {0, 6.0}, {1, -4.0}, {2, 1.0}},
        {{-3, -0.5}, {-2, 2.0}, {-1, -2.5}, {1, 2.5}, {2, -2.0}, {3, 0.5}},
        {{-3, 1.0}, {-2, -6.0}, {-1, 15.0}, {0, -20.0}, {1, 15.0}, {2, -6.0}, {3, 1.0}},
    };
    return table[k];
}

}  // namespace

std::complex<double> base_value(Family family, std::complex<double> x) {
    switch (family) {
        case Family::Sin: return std::sin(x);
        case Family::Cos: return std::cos(x);
        case Family::Sinh: return std::sinh(x);
        case Family::Cosh: return std::cosh(x);
    }
    return {};
}

std::complex<double> co_value(Family family, std::complex<double> x) {
    switch (family) {
        case Family::Sin: return std::cos(x);
        case Family::Cos: return std::sin(x);
        case Family::Sinh: return std::cosh(x);
        case Family::Cosh: return std::sinh(x);
    }
    return {};
}

DerivativeExpression build_expression(Family family, unsigned k, Form form) {
    DerivativeExpression expr;
    expr.family = family;
    expr.k = k;
    expr.form = form;
    if (form == Form::Intermediate) {
        expr.cofactor_present = false;
        expr.poly = intermediate_poly(sequence_for(family), k);
    } else {
        expr.cofactor_present = (k % 2 == 1);
        expr.poly = final_poly(family, k);
    }
    return expr;
}

std::complex<double> evaluate(const DerivativeExpression& expr, double n,
                              std::complex<double> x) {
    const std::complex<double> base = base_value(expr.family, x);
    const std::complex<double> co = co_value(expr.family, x);
    const double exponent = n - static_cast<double>(expr.k);

    std::complex<double> power;
    if (is_integer(n)) {
        if (std::abs(base) < kPoleThreshold && exponent < 0)
            throw PoleAtEvaluationPoint("base function vanishes and n - k < 0");
        power = pow_integer(base, static_cast<long long>(exponent));
    } else {
        if (x.imag() != 0.0 || base.imag() != 0.0 || base.real() < 0.0)
            throw NonIntegerNeedsPositiveBase(
                "non-integer n requires a real, nonnegative base value");
        if (base.real() < kPoleThreshold && exponent < 0)
            throw PoleAtEvaluationPoint("base function vanishes and n - k < 0");
        power = std::pow(base.real(), exponent);
    }

    const std::complex<double> var = expr.form == Form::Final ? base : co;
    std::complex<double> value = power * expr.poly.eval(n, var);
    if (expr.cofactor_present) value *= co;
    return value;
}

SpecializedExpression specialize(Family family, unsigned k, long long n) {
    const UPoly poly = final_poly(family, k);
    SpecializedExpression out;
    out.family = family;
    out.n = n;
    out.k = k;
    out.cofactor_present = (k % 2 == 1);

    std::vector<Int> dense;
    for (const auto& [power, coeff] : poly.terms()) {
        const Int value = coeff.eval(Int(n));
        if (value == 0) continue;
        if (dense.size() <= power) dense.resize(power + 1);
        dense[power] = value;
    }
    while (!dense.empty() && dense.back() == 0) dense.pop_back();

    const long long exponent = n - static_cast<long long>(k);
    out.reduced_exponent = exponent;
    if (dense.empty()) {
        // The derivative is identically zero; no power of the base remains.
        out.reduced_exponent = std::max(exponent, 0ll);
    } else if (n >= 0 && exponent < 0) {
        // Natural n below k: the true derivative is entire, so the bracket
        // must carry at least v^{k-n}. Cancel the full common power of v.
        std::size_t valuation = 0;
        while (valuation < dense.size() && dense[valuation] == 0) ++valuation;
        if (static_cast<long long>(valuation) < -exponent)
            throw InternalCancellationFailure("expected divisibility by v^(k-n) is absent");
        dense.erase(dense.begin(), dense.begin() + static_cast<std::ptrdiff_t>(valuation));
        out.reduced_exponent = exponent + static_cast<long long>(valuation);
    }
    out.poly_v = std::move(dense);
    return out;
}

std::complex<double> evaluate(const SpecializedExpression& expr, std::complex<double> x) {
    const std::complex<double> base = base_value(expr.family, x);
    if (expr.poly_v.empty()) return {0.0, 0.0};
    if (expr.reduced_exponent < 0 && std::abs(base) < kPoleThreshold)
        throw PoleAtEvaluationPoint("base function vanishes and the reduced exponent is negative");

    std::complex<double> acc{0.0, 0.0};
    if (x.imag() == 0.0 && base.imag() == 0.0) {
        std::vector<double> dense(expr.poly_v.size());
        for (std::size_t i = 0; i < dense.size(); ++i) dense[i] = expr.poly_v[i].convert_to<double>();
        acc = compensated_horner(dense, base.real());
    } else {
        for (auto it = expr.poly_v.rbegin(); it != expr.poly_v.rend(); ++it)
            acc = acc * base + it->convert_to<double>();
    }
    acc *= pow_integer(base, expr.reduced_exponent);
    if (expr.cofactor_present) acc *= co_value(expr.family, x);
    return acc;
}

double default_fd_step(unsigned k) {
    if (k <= 4) return 1e-2;
    return k == 5 ? 2e-2 : 4e-2;
}

double finite_difference(Family family, double n, unsigned k, double x, double h) {
    if (k > 6) throw std::domain_error("finite_difference supports k <= 6");
    if (h < 1e-6) throw StepTooSmall("step below 1e-6");

    const bool integer_n = is_integer(n);
    const double reach = 3.0 * h;  // widest stencil offset at step h
    if (n < 0.0 || !integer_n) {
        if (distance_to_base_zero(family, x) < 10.0 * h)
            throw PoleNearby("evaluation point within 10h of a base-function zero");
    }
    if (!integer_n) {
        // Real exponents need a nonnegative base across the whole stencil.
        for (double t : {x - reach, x, x + reach})
            if (real_base(family, t) < 0.0)
                throw PoleNearby("stencil leaves the nonnegative-base domain");
    }

    auto f = [&](double t) { return std::pow(real_base(family, t), n); };
    if (k == 0) return f(x);

    auto apply = [&](double step) {
        double acc = 0.0;
        for (const auto& [offset, weight] : stencil(k)) acc += weight * f(x + offset * step);
        return acc / std::pow(step, static_cast<double>(k));
    };
    const double coarse = apply(h);
    const double fine = apply(h / 2.0);
    return (4.0 * fine - coarse) / 3.0;
}

}  // namespace powerderiv
