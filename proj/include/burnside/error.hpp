#pragma once

#include <stdexcept>
#include <string>

namespace burnside {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// mat_solve: the coefficient matrix is not invertible.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// rf_eval at a pole of the (reduced) rational function.
class PoleError : public Error {
public:
    using Error::Error;
};

/// The zeta function is not invertible in the iso-invariant subalgebra.
class NoSkeletalInversion : public Error {
public:
    using Error::Error;
};

/// The nerve generating function has a pole at -1, so the series
/// Euler characteristic does not exist.
class NotInLocalization : public Error {
public:
    using Error::Error;
};

/// Group element enumeration exceeded the configured order cap.
class OrderCapExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed group spec, collection spec, or formula file.
class SpecError : public Error {
public:
    using Error::Error;
};

}  // namespace burnside
