#include "powerderiv/triangle.hpp"

#include <sstream>
#include <stdexcept>

#include "powerderiv/closed_form.hpp"
#include "powerderiv/families.hpp"

namespace powerderiv {

namespace {

Int two_pow(unsigned e) {
    Int r = 1;
    r <<= e;
    return r;
}

std::vector<Int> closed_row(unsigned row) {
    std::vector<Int> out(row + 1);
    for (unsigned j = 0; j <= row; ++j) {
        Int sum = binomial_coefficient(row, j) + binomial_coefficient(row, j + 1);
        out[j] = sum * two_pow(j > 0 ? j - 1 : 0);
    }
    return out;
}

std::vector<Int> computed_row(unsigned row) {
    const unsigned size = row + 1;
    // Pascal rows from the additive recurrence, independent of the
    // multiplicative binomial_coefficient used by the entry formula.
    std::vector<std::vector<Int>> pascal(size);
    for (unsigned i = 0; i < size; ++i) {
        pascal[i].assign(size, 0);
        pascal[i][0] = 1;
        for (unsigned j = 1; j <= i; ++j)
            pascal[i][j] = pascal[i - 1][j - 1] + pascal[i - 1][j];
    }
    std::vector<std::vector<Int>> bidiagonal(size);
    for (unsigned i = 0; i < size; ++i) {
        bidiagonal[i].assign(size, 0);
        bidiagonal[i][i] = 1;
        if (i > 0) bidiagonal[i][i - 1] = 1;
    }
    std::vector<Int> diagonal(size);
    for (unsigned j = 0; j < size; ++j) diagonal[j] = two_pow(j > 0 ? j - 1 : 0);

    // row `row` of Pascal x bidiagonal x diag
    std::vector<Int> acc(size, 0);
    for (unsigned j = 0; j < size; ++j)
        for (unsigned m = 0; m < size; ++m) acc[j] += pascal[row][m] * bidiagonal[m][j];
    for (unsigned j = 0; j < size; ++j) acc[j] *= diagonal[j];
    return acc;
}

}  // namespace

std::vector<Int> second_highest_coeffs(unsigned k) {
    if (k < 2) throw DegenerateRow("second-highest power exists only for k >= 2");
    const UPoly& f = intermediate_poly(SequenceTag::F, k);
    const NPoly coeff = f.coeff(k - 2);

    // Expected shape: consecutive powers n^{k-1} down to n^1, alternating
    // signs starting negative at the top.
    const int top = coeff.degree();
    if (top != static_cast<int>(k) - 1)
        throw std::logic_error("unexpected degree of the second-highest coefficient");
    std::vector<Int> out;
    int expected_sign = -1;
    for (int power = top; power >= 1; --power) {
        const Int& c = coeff.coeff(static_cast<std::size_t>(power));
        if (c == 0 || (c < 0 ? -1 : 1) != expected_sign)
            throw std::logic_error("sign pattern of the second-highest coefficient broken");
        out.push_back(abs(c));
        expected_sign = -expected_sign;
    }
    if (coeff.coeff(0) != 0) throw std::logic_error("unexpected constant term");
    return out;
}

std::vector<Int> product_matrix_row(unsigned row, RowSource source) {
    return source == RowSource::Computed ? computed_row(row) : closed_row(row);
}

const std::vector<std::vector<Int>>& published_display_rows() {
    static const std::vector<std::vector<Int>> rows = {
        {1},
        {2, 1},
        {3, 3, 2},
        {4, 6, 8, 2},  // printed final entry; the exact product gives 4
        {5, 10, 20, 20, 8},
        {6, 15, 40, 60, 48, 16},
    };
    return rows;
}

std::string format_row(const std::vector<Int>& row) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << ", ";
        out << row[i];
    }
    out << "]";
    return out.str();
}

TriangleReport verify_triangle(unsigned max_k) {
    if (max_k < 2) throw DegenerateRow("verify_triangle needs max_k >= 2");
    TriangleReport report;
    report.max_k = max_k;
    report.extraction_matches_product = true;
    report.computed_matches_closed = true;

    for (unsigned k = 2; k <= max_k; ++k) {
        const std::vector<Int> extracted = second_highest_coeffs(k);
        const std::vector<Int> product = product_matrix_row(k - 1, RowSource::Computed);
        const std::vector<Int> closed = product_matrix_row(k - 1, RowSource::Closed);
        if (product != closed) {
            report.computed_matches_closed = false;
            report.mismatches.push_back("row " + std::to_string(k - 1) +
                                        ": matrix product " + format_row(product) +
                                        " != entry formula " + format_row(closed));
        }
        const std::vector<Int> trimmed(product.begin() + 1, product.end());
        if (extracted != trimmed) {
            report.extraction_matches_product = false;
            report.mismatches.push_back(
                "k=" + std::to_string(k) + ": extracted " + format_row(extracted) +
                " != product row minus left column " + format_row(trimmed));
        }
        // left column: row index + 1
        if (product.front() != k) {
            report.extraction_matches_product = false;
            report.mismatches.push_back("row " + std::to_string(k - 1) +
                                        ": left column entry " + product.front().str() +
                                        " != " + std::to_string(k));
        }
    }

    const auto& display = published_display_rows();
    for (std::size_t r = 0; r < display.size() && r <= max_k; ++r) {
        const std::vector<Int> product = product_matrix_row(static_cast<unsigned>(r));
        if (product != display[r])
            report.display_notes.push_back(
                "display row " + std::to_string(r + 1) + " is published as " +
                format_row(display[r]) + " but the exact product gives " + format_row(product));
    }
    return report;
}

}  // namespace powerderiv
