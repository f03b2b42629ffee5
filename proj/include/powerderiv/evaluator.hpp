#pragma once

#include <complex>
#include <vector>

#include "powerderiv/exact_poly.hpp"
#include "powerderiv/families.hpp"

namespace powerderiv {

enum class Form { Intermediate, Final };

/// One displayed result: base^{n-k}(x) * [optional co-function factor] *
/// polynomial. The polynomial lives in the co-function value u for the
/// intermediate form and in the base value v for the final form.
struct DerivativeExpression {
    Family family;
    unsigned k = 0;
    Form form = Form::Final;
    bool cofactor_present = false;  // true iff final form with odd k
    UPoly poly;
};

DerivativeExpression build_expression(Family family, unsigned k, Form form);

/// Evaluate the k-th derivative of base(x)^n through the expression.
///
/// Integer n is evaluated with exact integer exponents; non-integer n is
/// accepted only where base(x) is real and nonnegative (throws
/// NonIntegerNeedsPositiveBase otherwise). Throws PoleAtEvaluationPoint
/// when base(x) vanishes (|base| < 1e-12) while n - k < 0.
std::complex<double> evaluate(const DerivativeExpression& expr, double n, std::complex<double> x);

/// Final-form expression with NPoly coefficients evaluated exactly at an
/// integer n. For natural n smaller than k the v-polynomial is exactly
/// divisible by v^{k-n}; the full common power of v is cancelled, which
/// makes reduced_exponent nonnegative and the expression pole-free.
struct SpecializedExpression {
    Family family;
    long long n = 0;
    unsigned k = 0;
    long long reduced_exponent = 0;
    bool cofactor_present = false;
    std::vector<Int> poly_v;  // ascending powers of v, exact coefficients
};

SpecializedExpression specialize(Family family, unsigned k, long long n);

std::complex<double> evaluate(const SpecializedExpression& expr, std::complex<double> x);

/// k-th derivative of base(x)^n by a second-order central-difference
/// stencil with one Richardson extrapolation step (h and h/2). Supports
/// k <= 6. Throws StepTooSmall for h < 1e-6 and PoleNearby when the
/// stencil reaches within 10h of a pole (negative n) or outside the
/// positive-base domain (non-integer n).
double finite_difference(Family family, double n, unsigned k, double x, double h = 1e-2);

/// Step size giving the documented accuracy targets at double precision:
/// 1e-2 for k <= 4, 2e-2 for k = 5, 4e-2 for k = 6.
double default_fd_step(unsigned k);

/// Base and co-function values.
std::complex<double> base_value(Family family, std::complex<double> x);
std::complex<double> co_value(Family family, std::complex<double> x);

}  // namespace powerderiv
