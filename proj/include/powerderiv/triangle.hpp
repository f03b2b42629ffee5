#pragma once

#include <string>
#include <vector>

#include "powerderiv/exact_poly.hpp"

namespace powerderiv {

/// Absolute values of the coefficients of the second-highest power of u in
/// f_k, in descending powers of n (length k-1). Verifies on the way that
/// the nonzero coefficients occupy consecutive descending powers of n with
/// strictly alternating signs, negative at the top. Throws DegenerateRow
/// for k < 2.
std::vector<Int> second_highest_coeffs(unsigned k);

enum class RowSource {
    Computed,  // exact product of Pascal x bidiagonal-ones x powers-of-two
    Closed,    // entry formula (C(r,j) + C(r,j+1)) * 2^max(j-1,0)
};

/// Row `row` (0-based) of the lower-triangular product matrix; row r has
/// r+1 entries and left entry r+1. Row r with the left entry removed
/// equals second_highest_coeffs(r+1).
std::vector<Int> product_matrix_row(unsigned row, RowSource source = RowSource::Computed);

/// The first six rows as published alongside OEIS A133341. The final entry
/// of the fourth row is printed there as 2; the exact product yields 4.
const std::vector<std::vector<Int>>& published_display_rows();

struct TriangleReport {
    unsigned max_k = 0;
    bool extraction_matches_product = false;  // f_k extraction vs product rows
    bool computed_matches_closed = false;     // matrix product vs entry formula
    std::vector<std::string> mismatches;      // engine-internal inconsistencies
    std::vector<std::string> display_notes;   // published-display discrepancies
};

/// Cross-check extraction, matrix product, and entry formula for
/// 2 <= k <= max_k, and compare against the published display rows.
TriangleReport verify_triangle(unsigned max_k);

std::string format_row(const std::vector<Int>& row);

}  // namespace powerderiv
