#pragma once

#include <stdexcept>
#include <string>

namespace diagasym {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The requested computation lies outside the supported domain
// (e.g. the smooth-point suite requires d >= 3).
struct DomainError : Error {
    using Error::Error;
};

// The computation would exceed the configured memory budget.
struct ResourceError : Error {
    using Error::Error;
};

// An identity that must hold by construction failed.  Indicates a bug or
// corrupted input; never swallowed.
struct ConsistencyError : Error {
    using Error::Error;
};

// Recurrence extension hit a zero of the leading coefficient polynomial.
struct SingularLeadingCoefficientError : Error {
    long n;
    SingularLeadingCoefficientError(long n_, const std::string& msg)
        : Error(msg), n(n_) {}
};

// No differential approximant of the requested shape fits the series.
struct DegenerateFitError : Error {
    using Error::Error;
};

// Indicial equation requested at a non-simple root of the leading polynomial.
struct DegenerateIndicialError : Error {
    using Error::Error;
};

}  // namespace diagasym
