#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "powerderiv/errors.hpp"

namespace powerderiv {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Horner evaluation with error-free product/sum compensation. Dense
/// coefficients, ascending powers. Keeps full precision on polynomials
/// with heavy term cancellation (the intermediate polynomials vanish to
/// high order at u = +-1).
double compensated_horner(const std::vector<double>& coeffs, double x);

/// Exact polynomial in the exponent variable n, with unbounded signed
/// integer coefficients stored in ascending power order.
///
/// The zero polynomial is the empty coefficient sequence; otherwise the
/// highest stored coefficient is nonzero. All arithmetic is exact.
class NPoly {
public:
    NPoly() = default;
    explicit NPoly(Int constant);
    NPoly(std::initializer_list<Int> ascending_coeffs);
    explicit NPoly(std::vector<Int> ascending_coeffs);

    /// The polynomial n.
    static NPoly variable();
    /// coefficient * n^power
    static NPoly monomial(Int coefficient, std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of n^i (zero beyond the stored range).
    const Int& coeff(std::size_t i) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }
    /// Highest stored coefficient; zero for the zero polynomial.
    const Int& leading() const;

    NPoly operator-() const;
    friend NPoly operator+(const NPoly& a, const NPoly& b);
    friend NPoly operator-(const NPoly& a, const NPoly& b);
    friend NPoly operator*(const NPoly& a, const NPoly& b);
    bool operator==(const NPoly&) const = default;

    /// Horner evaluation; exact for exact inputs.
    Int eval(const Int& n_value) const;
    Rational eval(const Rational& n_value) const;
    double eval(double n_value) const;
    std::complex<double> eval(std::complex<double> n_value) const;

private:
    void normalize();
    std::vector<Int> coeffs_;
};

/// Quadratic substitution descriptor: u^2 maps to alpha*v^2 + beta with
/// alpha, beta in {-1, 0, +1}.
struct QuadraticSubst {
    int alpha = 0;
    int beta = 0;
};

/// Polynomial in the co-function variable u (or final variable v) whose
/// coefficients are NPoly values. Only nonzero coefficients are stored.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(NPoly constant);

    static UPoly monomial(NPoly coefficient, std::size_t power);
    /// The polynomial u.
    static UPoly variable();

    bool is_zero() const { return terms_.empty(); }
    /// Degree in u, or -1 for the zero polynomial.
    int degree() const;
    /// Coefficient of u^power (zero polynomial if absent).
    NPoly coeff(std::size_t power) const;
    const std::map<std::size_t, NPoly>& terms() const { return terms_; }

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    /// Scale every coefficient by c.
    friend UPoly operator*(const NPoly& c, const UPoly& p);
    bool operator==(const UPoly&) const = default;

    /// Formal derivative with respect to u.
    UPoly derivative() const;

    /// Exact quotient by u. Throws NotDivisible if a constant term exists.
    UPoly div_by_var() const;

    /// Replace u^{2m} by (alpha*v^2 + beta)^m, expanded exactly.
    /// Throws OddPowerPresent if any odd power carries a nonzero coefficient.
    UPoly substitute_even(QuadraticSubst q) const;

    /// Evaluate with coefficients specialized at n_value and the main
    /// variable at var_value.
    std::complex<double> eval(std::complex<double> n_value, std::complex<double> var_value) const;
    /// Exact evaluation for even-only polynomials as a function of u^2.
    Rational eval_even_exact(const Rational& n_value, const Rational& u_squared) const;

private:
    std::map<std::size_t, NPoly> terms_;
};

}  // namespace powerderiv
