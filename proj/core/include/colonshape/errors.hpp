#ifndef COLONSHAPE_ERRORS_HPP
#define COLONSHAPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace colonshape {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Precondition violations: bad sizes, out-of-range arguments, wrong window
/// lengths, non-consecutive frames.
class InvalidArgumentError : public Error {
public:
    explicit InvalidArgumentError(const std::string& what) : Error(what) {}
};

/// Geometry that admits no unique rigid solution (collinear or coincident
/// point sets).
class DegenerateGeometryError : public Error {
public:
    explicit DegenerateGeometryError(const std::string& what) : Error(what) {}
};

/// Tensor or layer shape mismatches, including model files whose stored
/// tensor shapes disagree with the architecture.
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& what) : Error(what) {}
};

/// Malformed file contents. Messages carry file, row, and column context
/// where available.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// A file whose format version does not match what this build writes.
class VersionError : public Error {
public:
    explicit VersionError(const std::string& what) : Error(what) {}
};

/// Invalid configuration values: unknown keys, type mismatches, constraint
/// violations.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Dataset-level problems: empty training sets, recordings shorter than the
/// window, mismatched marker counts.
class DataError : public Error {
public:
    explicit DataError(const std::string& what) : Error(what) {}
};

/// Filesystem failures.
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

} // namespace colonshape

#endif
