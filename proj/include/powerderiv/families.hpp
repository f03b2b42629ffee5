#pragma once

#include <optional>
#include <string_view>

#include "powerderiv/exact_poly.hpp"

namespace powerderiv {

/// The function whose n-th power is differentiated.
enum class Family { Sin, Cos, Sinh, Cosh };

/// Intermediate coefficient sequence. Sin and Sinh share F; Cos uses G;
/// Cosh uses H.
enum class SequenceTag { F, G, H };

struct FamilyTraits {
    Family family;
    const char* base_name;  // "sin", "cos", "sinh", "cosh"
    const char* co_name;    // paired function appearing in derivatives
    SequenceTag tag;
    QuadraticSubst substitution;          // u^2 -> alpha*v^2 + beta
    QuadraticSubst inverse_substitution;  // v^2 -> alpha*u^2 + beta
};

const FamilyTraits& traits(Family family);
SequenceTag sequence_for(Family family);
const char* family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);
const char* form_name(bool final_form);

/// k-th intermediate polynomial for the given sequence, computed through
/// the recurrence
///   P_0 = 1,
///   P_{k+1} = sigma * ((n - k) * u * P_k + (u^2 + qbeta) * dP_k/du)
/// with sigma = -1 and qbeta = -1 for G, sigma = +1 and qbeta = -1 for F,
/// sigma = +1 and qbeta = +1 for H. G is served from the proven identity
/// g_k = (-1)^k f_k; its own recurrence stays available through
/// intermediate_poly_direct. Results are memoized; entries are immutable
/// once published and safe to share across threads.
const UPoly& intermediate_poly(SequenceTag tag, unsigned k);

/// Uncached recurrence walk; the verification path for the g/f sign
/// identity and for cache-integrity checks.
UPoly intermediate_poly_direct(SequenceTag tag, unsigned k);

/// k-th final polynomial (in v): the family substitution applied to the
/// intermediate polynomial, after division by u when k is odd.
UPoly final_poly(Family family, unsigned k);

/// Test hook: overwrite the cached intermediate entry (tag, k) with a
/// deliberately wrong polynomial. Used to exercise failure reporting.
void corrupt_cached_intermediate(SequenceTag tag, unsigned k);

}  // namespace powerderiv
