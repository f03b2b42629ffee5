#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "powerderiv/families.hpp"

namespace powerderiv {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // counts on success, first mismatches on failure
};

struct CheckOptions {
    unsigned structure_max_k = 25;
    unsigned eval_max_n = 8;
    unsigned eval_max_k = 8;
    double threeway_tolerance = 1e-9;
    unsigned triangle_max_k = 25;
    unsigned specialization_max_k = 10;
    std::optional<unsigned> seed;  // adds randomized three-way cells
};

/// |a-b| relative to max(1, |a|, |b|).
double relative_deviation(std::complex<double> a, std::complex<double> b);

/// Fixed real evaluation grid used by the deterministic suites.
const std::vector<double>& real_grid();
/// The two fixed complex evaluation points.
const std::vector<std::complex<double>>& complex_points();
/// Grid points at a safe distance from the base function's zeros, for
/// negative exponents.
std::vector<double> pole_free_grid(Family family);

CheckResult check_golden_tables();
CheckResult check_structure(unsigned max_k);
CheckResult check_threeway(unsigned max_n, unsigned max_k, double tolerance,
                           std::optional<unsigned> seed = std::nullopt);
CheckResult check_numeric_oracle(unsigned max_n);
CheckResult check_triangle(unsigned max_k);
CheckResult check_conventions();
CheckResult check_specialization(unsigned max_n, unsigned max_k);

/// The full suite in criterion order.
std::vector<CheckResult> run_all_checks(const CheckOptions& options = {});

}  // namespace powerderiv
