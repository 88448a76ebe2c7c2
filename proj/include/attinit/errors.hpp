#pragma once

#include <stdexcept>
#include <string>

namespace attinit {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-finite or out-of-domain argument.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// Constant-attitude solve requested before two observations were accumulated.
class InsufficientObservationsError : public Error {
public:
    using Error::Error;
};

/// Observation geometry does not pin down a unique attitude
/// (smallest two eigenvalues of the accumulated matrix are not separated).
class DegenerateGeometryError : public Error {
public:
    using Error::Error;
};

/// State queried before the pipeline has produced it.
class NotReadyError : public Error {
public:
    using Error::Error;
};

/// Innovation covariance is numerically singular.
class SingularUpdateError : public Error {
public:
    using Error::Error;
};

/// Bad experiment configuration; carries the offending field name.
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& what)
        : Error("config field '" + field + "': " + what), field_(std::move(field)) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Filesystem failure (unwritable output directory, unreadable config, ...).
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace attinit
