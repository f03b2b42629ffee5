#pragma once

#include <complex>

#include "powerderiv/exact_poly.hpp"
#include "powerderiv/families.hpp"

namespace powerderiv {

/// Exact binomial coefficient C(n, r); zero for r > n.
Int binomial_coefficient(unsigned n, unsigned r);

/// k-th derivative of exp(x)^n, i.e. n^k * e^{n x}, with 0^0 = 1.
std::complex<double> exp_power_derivative(long long n, unsigned k, std::complex<double> x);

/// k-th derivative of base(x)^n through the binomial expansion of the
/// complex exponential definition of the base function:
///
///   sin:   (-1)^n/2^n * sum_r (-1)^r C(n,r) (2r-n)^k i^{k-n} e^{i(2r-n)x}
///   cos:        1/2^n * sum_r        C(n,r) (2r-n)^k i^k     e^{i(2r-n)x}
///   sinh:  (-1)^n/2^n * sum_r (-1)^r C(n,r) (2r-n)^k         e^{(2r-n)x}
///   cosh:       1/2^n * sum_r        C(n,r) (2r-n)^k         e^{(2r-n)x}
///
/// (2r-n)^0 = 1 even when 2r-n = 0; i-powers are reduced mod 4 to exact
/// units. For real x the hyperbolic sums run in purely real arithmetic, so
/// their imaginary part is exactly zero; the trigonometric sums keep the
/// (tiny) imaginary residue for inspection. Throws
/// NegativeExponentUnsupported for n < 0.
std::complex<double> binomial_derivative(Family family, long long n, unsigned k,
                                         std::complex<double> x);

}  // namespace powerderiv
