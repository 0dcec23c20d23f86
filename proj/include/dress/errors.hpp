#pragma once

#include <stdexcept>
#include <string>

namespace dress {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation received the zero polynomial / zero element where a
/// nonzero one is required.
struct ZeroInputError : Error {
    using Error::Error;
};

/// gcd of two zero polynomials.
struct BothZeroError : Error {
    using Error::Error;
};

/// Denominator of a fraction is the zero polynomial.
struct ZeroDenominatorError : Error {
    using Error::Error;
};

/// A fraction f/g does not represent an element of the Dress ring.
struct NotInDressError : Error {
    enum class Reason { DenominatorHasRealRoot, DegreeTooLarge };

    NotInDressError(Reason r, const std::string& what) : Error(what), reason(r) {}

    Reason reason;
};

/// invert() called on a non-unit.
struct NotAUnitError : Error {
    using Error::Error;
};

/// A stated precondition of a search or factorization rule fails.
struct PreconditionError : Error {
    using Error::Error;
};

/// A certified search ran out of steps. The underlying existence lemmas
/// guarantee success for a small enough parameter, so this normally means
/// the step budget is too small.
struct SearchExhaustedError : Error {
    using Error::Error;
};

/// A peeling rule needs a rational shared root, but the shared root is
/// irrational (not representable with rational polynomial data).
struct IrrationalSharedRootError : Error {
    using Error::Error;
};

struct NotRowFormError : Error {
    using Error::Error;
};

struct NotSingularError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct UnknownProfileError : Error {
    using Error::Error;
};

}  // namespace dress
