#pragma once

#include <stdexcept>
#include <string>

namespace pfsdist {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An input value lies outside its admissible range (e.g. a degree outside [0,1]).
class RangeError : public Error {
public:
    using Error::Error;
};

/// A pair of degrees violates the membership constraint beyond the configured slack.
class ConstraintError : public Error {
public:
    using Error::Error;
};

/// Two sets do not share the same ordered universe and cannot be compared elementwise.
class ConformabilityError : public Error {
public:
    using Error::Error;
};

/// A pattern library was constructed without any patterns.
class EmptyLibraryError : public Error {
public:
    using Error::Error;
};

/// A dataset file could not be parsed or failed validation.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace pfsdist
