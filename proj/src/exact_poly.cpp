#include "powerderiv/exact_poly.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace powerderiv {

namespace {
const Int kZero = 0;
const NPoly kZeroNPoly;
}  // namespace

NPoly::NPoly(Int constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

NPoly::NPoly(std::initializer_list<Int> ascending_coeffs) : coeffs_(ascending_coeffs) {
    normalize();
}

NPoly::NPoly(std::vector<Int> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    normalize();
}

NPoly NPoly::variable() { return NPoly{0, 1}; }

NPoly NPoly::monomial(Int coefficient, std::size_t power) {
    if (coefficient == 0) return NPoly{};
    std::vector<Int> c(power + 1);
    c[power] = std::move(coefficient);
    return NPoly(std::move(c));
}

void NPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& NPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Int& NPoly::leading() const {
    return coeffs_.empty() ? kZero : coeffs_.back();
}

NPoly NPoly::operator-() const {
    NPoly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const Int& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

NPoly operator+(const NPoly& a, const NPoly& b) {
    NPoly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeff(i) + b.coeff(i);
    r.normalize();
    return r;
}

NPoly operator-(const NPoly& a, const NPoly& b) { return a + (-b); }

NPoly operator*(const NPoly& a, const NPoly& b) {
    if (a.is_zero() || b.is_zero()) return NPoly{};
    NPoly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.normalize();
    return r;
}

template <typename T>
static T horner(const std::vector<Int>& coeffs, const T& v) {
    T acc{0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * v + static_cast<T>(*it);
    return acc;
}

Int NPoly::eval(const Int& n_value) const { return horner<Int>(coeffs_, n_value); }
Rational NPoly::eval(const Rational& n_value) const { return horner<Rational>(coeffs_, n_value); }

double NPoly::eval(double n_value) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * n_value + it->convert_to<double>();
    return acc;
}

std::complex<double> NPoly::eval(std::complex<double> n_value) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * n_value + it->convert_to<double>();
    return acc;
}

UPoly::UPoly(NPoly constant) {
    if (!constant.is_zero()) terms_.emplace(0, std::move(constant));
}

UPoly UPoly::monomial(NPoly coefficient, std::size_t power) {
    UPoly p;
    if (!coefficient.is_zero()) p.terms_.emplace(power, std::move(coefficient));
    return p;
}

UPoly UPoly::variable() { return monomial(NPoly(Int(1)), 1); }

int UPoly::degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first);
}

NPoly UPoly::coeff(std::size_t power) const {
    auto it = terms_.find(power);
    return it == terms_.end() ? kZeroNPoly : it->second;
}

UPoly UPoly::operator-() const {
    UPoly r;
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r = a;
    for (const auto& [p, c] : b.terms_) {
        auto it = r.terms_.find(p);
        if (it == r.terms_.end()) {
            r.terms_.emplace(p, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r;
    for (const auto& [pa, ca] : a.terms_)
        for (const auto& [pb, cb] : b.terms_) {
            NPoly prod = ca * cb;
            auto it = r.terms_.find(pa + pb);
            if (it == r.terms_.end()) {
                r.terms_.emplace(pa + pb, std::move(prod));
            } else {
                it->second = it->second + prod;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

UPoly operator*(const NPoly& c, const UPoly& p) {
    UPoly r;
    if (c.is_zero()) return r;
    for (const auto& [pw, pc] : p.terms_) r.terms_.emplace(pw, c * pc);
    return r;
}

UPoly UPoly::derivative() const {
    UPoly r;
    for (const auto& [p, c] : terms_) {
        if (p == 0) continue;
        r.terms_.emplace(p - 1, NPoly(Int(p)) * c);
    }
    return r;
}

UPoly UPoly::div_by_var() const {
    if (terms_.count(0) != 0)
        throw NotDivisible("polynomial has a constant term; not divisible by u");
    UPoly r;
    for (const auto& [p, c] : terms_) r.terms_.emplace(p - 1, c);
    return r;
}

UPoly UPoly::substitute_even(QuadraticSubst q) const {
    for (const auto& [p, c] : terms_)
        if (p % 2 != 0)
            throw OddPowerPresent("odd power of u present; even substitution undefined");
    // quadratic alpha*v^2 + beta as a polynomial in v
    UPoly quad = UPoly::monomial(NPoly(Int(q.alpha)), 2) + UPoly(NPoly(Int(q.beta)));
    UPoly result;
    UPoly quad_pow{NPoly(Int(1))};  // quad^m, built incrementally
    std::size_t m = 0;
    for (const auto& [p, c] : terms_) {
        while (m < p / 2) {
            quad_pow = quad_pow * quad;
            ++m;
        }
        result = result + c * quad_pow;
    }
    return result;
}

// Error-free product/sum transformations; the compensation term recovers
// what plain Horner loses.
double compensated_horner(const std::vector<double>& coeffs, double x) {
    if (coeffs.empty()) return 0.0;
    double s = coeffs.back();
    double e = 0.0;
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) {
        const double p = s * x;
        const double pe = std::fma(s, x, -p);
        const double s2 = p + *it;
        const double t = s2 - p;
        const double se = (p - (s2 - t)) + (*it - t);
        s = s2;
        e = e * x + (pe + se);
    }
    return s + e;
}

std::complex<double> UPoly::eval(std::complex<double> n_value,
                                 std::complex<double> var_value) const {
    if (n_value.imag() == 0.0 && var_value.imag() == 0.0) {
        std::vector<double> dense(terms_.empty() ? 0 : terms_.rbegin()->first + 1, 0.0);
        for (const auto& [power, coeff] : terms_) dense[power] = coeff.eval(n_value.real());
        return {compensated_horner(dense, var_value.real()), 0.0};
    }

    // Horner over stored powers, highest first.
    std::complex<double> acc = 0.0;
    std::size_t prev_power = 0;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first)
            for (std::size_t i = it->first; i < prev_power; ++i) acc *= var_value;
        acc += it->second.eval(n_value);
        prev_power = it->first;
        first = false;
    }
    if (!first)
        for (std::size_t i = 0; i < prev_power; ++i) acc *= var_value;
    return acc;
}

Rational UPoly::eval_even_exact(const Rational& n_value, const Rational& u_squared) const {
    Rational acc = 0;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (it->first % 2 != 0)
            throw OddPowerPresent("odd power of u present; not a function of u^2");
        Rational p = 1;
        for (std::size_t i = 0; i < it->first / 2; ++i) p *= u_squared;
        acc += it->second.eval(n_value) * p;
    }
    return acc;
}

}  // namespace powerderiv
