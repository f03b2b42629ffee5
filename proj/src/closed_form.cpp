#include "powerderiv/closed_form.hpp"

#include <cassert>
#include <cmath>

namespace powerderiv {

namespace {

// i^e for any integer e, as an exact unit value.
std::complex<double> unit_i_power(long long e) {
    switch (((e % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

// m^k in exact integers, with 0^0 = 1.
Int int_pow(long long m, unsigned k) {
    Int r = 1;
    Int b = m;
    while (k != 0) {
        if (k & 1u) r *= b;
        b *= b;
        k >>= 1u;
    }
    return r;
}

}  // namespace

Int binomial_coefficient(unsigned n, unsigned r) {
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    Int acc = 1;
    for (unsigned i = 1; i <= r; ++i) {
        acc *= n - r + i;
        acc /= i;
    }
    return acc;
}

std::complex<double> exp_power_derivative(long long n, unsigned k, std::complex<double> x) {
    if (n == 0) return k == 0 ? std::complex<double>{1.0, 0.0} : std::complex<double>{0.0, 0.0};
    const double nk = int_pow(n, k).convert_to<double>();
    return nk * std::exp(static_cast<double>(n) * x);
}

std::complex<double> binomial_derivative(Family family, long long n, unsigned k,
                                         std::complex<double> x) {
    if (n < 0)
        throw NegativeExponentUnsupported("binomial form requires a natural exponent n >= 0");
    const auto un = static_cast<unsigned>(n);
    const bool trig = family == Family::Sin || family == Family::Cos;
    const bool alternating = family == Family::Sin || family == Family::Sinh;

    Int coeff_sum = 0;  // self-check: sum of C(n,r) over r is 2^n
    const double two_pow_n = std::ldexp(1.0, static_cast<int>(un));

    if (!trig && x.imag() == 0.0) {
        // Hyperbolic with real argument: everything is real.
        double sum = 0.0;
        for (unsigned r = 0; r <= un; ++r) {
            const Int binom = binomial_coefficient(un, r);
            coeff_sum += binom;
            const long long m = 2ll * r - n;
            double term = binom.convert_to<double>() * int_pow(m, k).convert_to<double>() *
                          std::exp(static_cast<double>(m) * x.real());
            if (alternating && r % 2 == 1) term = -term;
            sum += term;
        }
        assert(coeff_sum == int_pow(2, un));
        double prefactor = 1.0 / two_pow_n;
        if (alternating && un % 2 == 1) prefactor = -prefactor;
        return {prefactor * sum, 0.0};
    }

    std::complex<double> sum = 0.0;
    const std::complex<double> i_unit{0.0, 1.0};
    for (unsigned r = 0; r <= un; ++r) {
        const Int binom = binomial_coefficient(un, r);
        coeff_sum += binom;
        const long long m = 2ll * r - n;
        const double scale =
            binom.convert_to<double>() * int_pow(m, k).convert_to<double>();
        const std::complex<double> arg = static_cast<double>(m) * x;
        std::complex<double> term = scale * std::exp(trig ? i_unit * arg : arg);
        if (alternating && r % 2 == 1) term = -term;
        sum += term;
    }
    assert(coeff_sum == int_pow(2, un));

    std::complex<double> prefactor{1.0 / two_pow_n, 0.0};
    if (alternating && un % 2 == 1) prefactor = -prefactor;
    if (family == Family::Sin) prefactor *= unit_i_power(static_cast<long long>(k) - n);
    if (family == Family::Cos) prefactor *= unit_i_power(static_cast<long long>(k));
    return prefactor * sum;
}

}  // namespace powerderiv
