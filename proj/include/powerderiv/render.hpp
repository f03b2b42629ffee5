#pragma once

#include <string>

#include "powerderiv/evaluator.hpp"

namespace powerderiv {

enum class RenderFormat { Text, Latex, Json };

struct RenderOptions {
    RenderFormat format = RenderFormat::Text;
    /// When the bracket polynomial's leading coefficient is -1, emit a
    /// single leading minus and negate the bracket contents. Display only.
    bool factor_minus_one = true;
};

/// Polynomial in n, descending powers, e.g. "-6 n^3 + 8 n^2 - 4 n".
std::string npoly_text(const NPoly& p);

/// Full expression, e.g. "-sin^(n-2)(x) [n^2 sin^2(x) + (-n^2 + n)]".
std::string render_expression(const DerivativeExpression& expr, const RenderOptions& opts = {});

/// Canonical JSON: {"family","k","form","cofactor","terms":[{"power",
/// "coeff_n"}]} with coefficients as decimal strings in ascending powers
/// of n and terms in descending powers. Byte-identical across runs.
std::string render_json(const DerivativeExpression& expr);

/// Inverse of render_json; round-trips byte-identically.
DerivativeExpression expression_from_json(const std::string& text);

/// Collapse whitespace runs to single spaces and trim; used when comparing
/// rendered lines against published tables.
std::string normalize_whitespace(const std::string& s);

}  // namespace powerderiv
