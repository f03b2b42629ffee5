#pragma once

#include <stdexcept>
#include <string>

namespace powerderiv {

/// Division by u requested for a polynomial with a constant term.
struct NotDivisible : std::domain_error {
    explicit NotDivisible(const std::string& what) : std::domain_error(what) {}
};

/// An even-power substitution was applied to a polynomial with odd powers.
struct OddPowerPresent : std::domain_error {
    explicit OddPowerPresent(const std::string& what) : std::domain_error(what) {}
};

/// The binomial-sum form needs a natural exponent.
struct NegativeExponentUnsupported : std::domain_error {
    explicit NegativeExponentUnsupported(const std::string& what) : std::domain_error(what) {}
};

/// The base function vanishes at x while the evaluated exponent is negative.
struct PoleAtEvaluationPoint : std::domain_error {
    explicit PoleAtEvaluationPoint(const std::string& what) : std::domain_error(what) {}
};

/// Real (non-integer) exponents require a real, nonnegative base value.
struct NonIntegerNeedsPositiveBase : std::domain_error {
    explicit NonIntegerNeedsPositiveBase(const std::string& what) : std::domain_error(what) {}
};

/// Expected exact divisibility by a power of v did not hold; engine bug.
struct InternalCancellationFailure : std::logic_error {
    explicit InternalCancellationFailure(const std::string& what) : std::logic_error(what) {}
};

/// Finite-difference step below the supported minimum.
struct StepTooSmall : std::domain_error {
    explicit StepTooSmall(const std::string& what) : std::domain_error(what) {}
};

/// Finite-difference stencil too close to a pole of the target function.
struct PoleNearby : std::domain_error {
    explicit PoleNearby(const std::string& what) : std::domain_error(what) {}
};

/// Triangle row requested below the first defined row.
struct DegenerateRow : std::domain_error {
    explicit DegenerateRow(const std::string& what) : std::domain_error(what) {}
};

}  // namespace powerderiv
